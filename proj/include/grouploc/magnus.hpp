#pragma once
// Truncated Magnus expansion over Q and rational dimension-series machinery.
//
// A_c = Q<X_1..X_r> truncated above total degree c; the Magnus map sends x_i to
// 1 + X_i (so x_i^-1 to the geometric series). For a presented group the two-sided
// ideal J generated by {M(r) - 1} is closed under multiplication by degree-1
// generators up to the cap, which suffices: reductions mod J decide triviality in
// the rational class-c quotient, and deg-k quotient slices give the Jennings
// dimensions, from which the graded Lie ranks fall out by PBW deflation.
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouploc/numbers.hpp"
#include "grouploc/presentation.hpp"
#include "grouploc/ring.hpp"
#include "grouploc/words.hpp"

namespace grouploc {

// All noncommutative monomials of degree <= cap over `rank` letters, identified with
// contiguous ids ordered by (degree, lex). Concatenation is O(1) arithmetic.
class MonomialTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  MonomialTable(unsigned rank, unsigned cap);  // CapExceeded if the table is too large

  unsigned rank() const { return rank_; }
  unsigned cap() const { return cap_; }
  std::size_t size() const { return offset_[cap_ + 1]; }
  std::size_t begin_of_degree(unsigned d) const { return offset_[d]; }
  std::size_t end_of_degree(unsigned d) const { return offset_[d + 1]; }
  unsigned degree(std::size_t id) const;
  std::size_t one() const { return 0; }
  std::size_t gen(unsigned g) const { return offset_[1] + g; }
  // id of a*b, or npos when deg(a)+deg(b) > cap
  std::size_t concat(std::size_t a, std::size_t b) const;
  std::vector<unsigned> digits(std::size_t id) const;  // letter sequence of the monomial
  std::string str(std::size_t id, const std::vector<std::string>& names) const;

 private:
  unsigned rank_, cap_;
  std::vector<std::size_t> offset_;  // offset_[d] = first id of degree d
  std::vector<std::size_t> powr_;    // rank^d
};

// Dense coefficient vector indexed by MonomialTable ids.
using Series = std::vector<Rat>;

Series series_one(const MonomialTable& t);
Series series_mul(const MonomialTable& t, const Series& a, const Series& b);
void series_add_scaled(Series& a, const Series& b, const Rat& c);  // a += c*b
std::size_t first_support(const Series& a);                        // npos if zero

// Magnus image of a word (generators only), truncated at the table cap.
Series magnus_expand(const MonomialTable& t, const Word& w);

// Lowest degree >= 1 where M(w) - 1 has a nonzero coefficient; nullopt when w maps to
// 1 up to the cap (w == 1 exactly, or its lower central series depth exceeds the cap).
struct LcsDepth {
  bool above_cap = false;
  unsigned degree = 0;  // valid when !above_cap
};
LcsDepth lcs_degree(const Word& w, unsigned rank, unsigned cap);

// The quotient A_cap / J for a presentation; J is the closure of {M(r)-1} as above,
// kept in reduced row echelon form with pivots ascending in (degree, lex).
class NilpotentAlgebra {
 public:
  NilpotentAlgebra(const Presentation& p, unsigned cap);

  const MonomialTable& table() const { return tab_; }
  const Presentation& presentation() const { return pres_; }

  Series reduce(Series v) const;  // canonical representative mod J
  Series expand(const Word& w) const { return reduce(magnus_expand(tab_, w)); }
  bool trivial_to_class(const Word& w) const;
  bool equal_to_class(const Word& u, const Word& v) const;

  // pivots of J per degree 1..cap; slice dim a_k = (#monomials of deg k) - pivots[k]
  std::vector<std::size_t> pivots_by_degree() const;
  std::vector<long long> slice_dims() const;  // a_0..a_cap
  // degree-k monomial ids that are NOT pivots: a basis of the deg-k slice
  std::vector<std::size_t> slice_basis(unsigned k) const;

 private:
  Presentation pres_;
  MonomialTable tab_;
  std::vector<Series> rows_;          // RREF rows, normalized leading 1
  std::vector<std::size_t> pivots_;   // ascending
  bool insert_row(Series v, std::vector<Series>* queue);
};

// Degreewise ranks of the graded Lie algebra of the rational lower central series,
// deflated from the slice dimensions via the PBW generating identity
//   prod_k (1 - t^k)^{-l_k} = sum_k a_k t^k   (mod t^{q+1}).
struct LieRanks {
  unsigned q = 0;
  std::vector<long long> dims;  // dims[k-1] = rank of gr_k, k = 1..q
};
LieRanks rational_lcs_quotient(const Presentation& p, unsigned q);

// Degreewise injectivity of gr(h) through degree q (the graded-Lie Stallings test,
// run rationally; the ring argument is accepted for interface symmetry and reserved).
struct StallingsReport {
  bool injective = false;
  unsigned q = 0;
  std::vector<long long> source_dims, target_dims;
  std::vector<long long> image_ranks;
  std::string detail;
};
StallingsReport stallings_injectivity_check(const GroupHom& h, unsigned q,
                                            const CoefficientRing& ring);

}  // namespace grouploc
