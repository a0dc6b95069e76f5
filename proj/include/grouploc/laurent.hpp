#pragma once
// Multivariate Laurent polynomials over Q and the fraction field K = Q(t_1..t_mu).
// Exponent vectors are dense (one slot per variable); a unit is a single monomial with
// rational coefficient, and most normalizations only strip monomial content, never
// rescale honest polynomial factors.
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouploc/numbers.hpp"

namespace grouploc {

using Expo = std::vector<long long>;

struct LaurentPoly {
  std::size_t nvars = 0;
  std::map<Expo, Rat> terms;  // nonzero coefficients only

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n) : nvars(n) {}
  static LaurentPoly constant(std::size_t n, const Rat& c);
  static LaurentPoly variable(std::size_t n, std::size_t i, long long e = 1);
  static LaurentPoly monomial(std::size_t n, Expo e, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  bool is_unit() const { return terms.size() == 1; }
  void add_term(const Expo& e, const Rat& c);
  bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly scale(const LaurentPoly& a, const Rat& c);

// strip monomial content: divide by (leading coefficient) * (componentwise-min
// exponent monomial), making the result a true polynomial with constant term support
// and leading (lex-max) coefficient 1. Returns the stripped polynomial.
LaurentPoly strip_unit(const LaurentPoly& a);
// a and b agree up to multiplication by a unit c*t^v
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// Exact division in the Laurent ring: nullopt unless b | a. Implemented by stripping
// units and running lex-leading-term polynomial division.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// evaluation at t_i = 1 for all i (the augmentation)
Rat augmentation(const LaurentPoly& a);

std::string laurent_to_string(const LaurentPoly& a, const std::vector<std::string>& vars);

// ---- fraction field -----------------------------------------------------------------
struct FractionElem {
  LaurentPoly num, den;  // den nonzero; no reduction, comparisons cross-multiply
  static FractionElem of(LaurentPoly p);
  bool is_zero() const { return num.is_zero(); }
};

FractionElem fadd(const FractionElem& a, const FractionElem& b);
FractionElem fsub(const FractionElem& a, const FractionElem& b);
FractionElem fmul(const FractionElem& a, const FractionElem& b);
FractionElem fdiv(const FractionElem& a, const FractionElem& b);  // ZeroDivisor if b = 0
bool fequal(const FractionElem& a, const FractionElem& b);

// rank over K of a dense matrix of Laurent polynomials
std::size_t rank_over_fraction_field(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace grouploc
