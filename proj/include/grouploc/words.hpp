#pragma once
// Free-group words and monomials over G * F<x1..xn> (group letters + indeterminates),
// run-length encoded and always freely reduced.
#include <cstdint>
#include <string>
#include <vector>

#include "grouploc/numbers.hpp"

namespace grouploc {

enum class SymKind : std::uint8_t { Gen, Indet };

struct Sym {
  SymKind kind = SymKind::Gen;
  std::uint32_t id = 0;  // Gen: generator index; Indet: 1-based $k
  bool operator==(const Sym&) const = default;
  auto operator<=>(const Sym&) const = default;
};

inline Sym gen_sym(std::uint32_t i) { return Sym{SymKind::Gen, i}; }
inline Sym indet_sym(std::uint32_t k) { return Sym{SymKind::Indet, k}; }

struct Letter {
  Sym sym;
  long long exp = 0;  // nonzero in stored words
  bool operator==(const Letter&) const = default;
};

// Freely reduced sequence of letters; adjacent letters have distinct symbols.
class Monomial {
 public:
  Monomial() = default;
  static Monomial from_letters(const std::vector<Letter>& raw);

  const std::vector<Letter>& letters() const { return ls_; }
  bool is_identity() const { return ls_.empty(); }
  bool has_indets() const;
  std::size_t length() const;  // sum of |exponent|

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(long long e) const;
  long long exponent_sum(Sym s) const;
  std::uint32_t max_indet() const;  // 0 if none
  std::uint32_t max_gen_plus1() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Letter> ls_;
  friend void push_reduced(std::vector<Letter>& out, Sym s, long long e);
};

inline Monomial commutator(const Monomial& u, const Monomial& v) {
  return u * v * u.inverse() * v.inverse();
}

// A Monomial with no indeterminate letters.
class Word {
 public:
  Word() = default;
  explicit Word(Monomial m);  // rejects indeterminates
  static Word from_letters(const std::vector<Letter>& raw) {
    return Word(Monomial::from_letters(raw));
  }

  const Monomial& mono() const { return m_; }
  const std::vector<Letter>& letters() const { return m_.letters(); }
  bool is_identity() const { return m_.is_identity(); }
  std::size_t length() const { return m_.length(); }

  Word operator*(const Word& o) const { return Word(m_ * o.m_); }
  Word inverse() const { return Word(m_.inverse()); }
  Word pow(long long e) const { return Word(m_.pow(e)); }
  long long exponent_sum(std::uint32_t gen) const { return m_.exponent_sum(gen_sym(gen)); }
  std::uint32_t max_gen_plus1() const { return m_.max_gen_plus1(); }

  bool operator==(const Word&) const = default;

 private:
  Monomial m_;
};

inline Word commutator(const Word& u, const Word& v) {
  return Word(commutator(u.mono(), v.mono()));
}
inline Word conjugate(const Word& g, const Word& w) {  // g w g^-1
  return g * w * g.inverse();
}

// Substitute $k -> assignment[k-1]; all group letters kept. UnassignedIndeterminate if
// the monomial mentions $k with k > assignment.size().
Word substitute(const Monomial& w, const std::vector<Word>& assignment);
Monomial substitute_monomial(const Monomial& w, const std::vector<Monomial>& assignment);

// Replace generator j by images[j] (hom application). UnknownSymbol if out of range.
Word apply_images(const Word& w, const std::vector<Word>& images);

// Kill all indeterminates ($k -> identity); group letters survive verbatim.
Word erase_indets(const Monomial& w);

std::string word_to_string(const Monomial& w, const std::vector<std::string>& gen_names);
inline std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names) {
  return word_to_string(w.mono(), gen_names);
}

}  // namespace grouploc
