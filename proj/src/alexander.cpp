#include "grouploc/alexander.hpp"

#include <algorithm>

#include "grouploc/errors.hpp"

namespace grouploc {

LaurentPoly AlexanderData::gen_monomial(std::size_t j) const {
  return LaurentPoly::monomial(static_cast<std::size_t>(mu), basis_map.at(j), Rat(1));
}

LaurentPoly AlexanderData::word_monomial(const Word& w) const {
  Expo v(static_cast<std::size_t>(mu), 0);
  for (std::size_t j = 0; j < p.gens.size(); ++j) {
    long long e = w.exponent_sum(static_cast<std::uint32_t>(j));
    if (e == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += e * basis_map[j][i];
  }
  return LaurentPoly::monomial(static_cast<std::size_t>(mu), std::move(v), Rat(1));
}

LaurentPoly AlexanderData::fox(const Word& w, std::size_t g) const {
  if (g >= p.gens.size()) fail(Err::UnknownSymbol, "no such generator");
  const std::size_t nv = static_cast<std::size_t>(mu);
  LaurentPoly der(nv);
  Expo prefix(nv, 0);
  for (const auto& l : w.mono().letters()) {
    const Expo& m = basis_map.at(l.sym.id);
    if (l.sym.id == g) {
      // D(s^e) = sum_{i=0}^{e-1} s^i, resp. -sum_{i=1}^{-e} s^-i, shifted by the prefix
      if (l.exp > 0) {
        Expo at = prefix;
        for (long long i = 0; i < l.exp; ++i) {
          der.add_term(at, Rat(1));
          for (std::size_t k = 0; k < nv; ++k) at[k] += m[k];
        }
      } else {
        Expo at = prefix;
        for (long long i = 0; i < -l.exp; ++i) {
          for (std::size_t k = 0; k < nv; ++k) at[k] -= m[k];
          der.add_term(at, Rat(-1));
        }
      }
    }
    for (std::size_t k = 0; k < nv; ++k) prefix[k] += l.exp * m[k];
  }
  return der;
}

std::vector<LaurentPoly> AlexanderData::fox_row(const Word& w) const {
  std::vector<LaurentPoly> row;
  for (std::size_t g = 0; g < p.gens.size(); ++g) row.push_back(fox(w, g));
  return row;
}

AlexanderData alexander_matrix(const Presentation& p) {
  AlexanderData d;
  d.p = p;
  H1Data h1(p);
  std::vector<std::size_t> free_cols;
  for (std::size_t k = 0; k < h1.ngens; ++k)
    if (h1.diag[k] == 0) free_cols.push_back(k);
  d.mu = static_cast<long long>(free_cols.size());

  if (p.is_free()) {
    d.variables = p.gens;
  } else if (d.mu == 1) {
    d.variables = {"t"};
  } else {
    for (long long i = 1; i <= d.mu; ++i) d.variables.push_back("t" + std::to_string(i));
  }

  for (std::size_t j = 0; j < p.gens.size(); ++j) {
    Expo v(static_cast<std::size_t>(d.mu), 0);
    for (std::size_t c = 0; c < free_cols.size(); ++c)
      v[c] = static_cast<long long>(h1.V.at(j, free_cols[c]));
    d.basis_map.push_back(std::move(v));
  }
  for (const auto& r : p.relators) d.matrix.push_back(d.fox_row(r));
  return d;
}

Kh1Report kh1_rank(const Presentation& p) {
  AlexanderData d = alexander_matrix(p);
  Kh1Report rep;
  rep.mu = d.mu;
  if (d.mu == 0) {
    rep.degenerate = true;
    return rep;
  }
  rep.matrix_rank = d.matrix.empty() ? 0 : rank_over_fraction_field(d.matrix);
  rep.rank = static_cast<long long>(p.gens.size()) - 1 -
             static_cast<long long>(rep.matrix_rank);
  if (rep.rank < 0) fail(Err::Internal, "Alexander matrix rank exceeded gens - 1");
  return rep;
}

std::vector<LaurentPoly> derived_class(const Presentation& free_p, const Word& w) {
  if (!free_p.is_free())
    fail(Err::PrerequisiteNotMet, "derived classes need a free presentation");
  for (std::size_t j = 0; j < free_p.gens.size(); ++j)
    if (w.exponent_sum(static_cast<std::uint32_t>(j)) != 0)
      fail(Err::NotInCommutatorSubgroup,
           "word has nonzero exponent sum at " + free_p.gens[j]);
  AlexanderData d = alexander_matrix(free_p);
  return d.fox_row(w);
}

DerivedSeriesVerdict gh_membership(const Presentation& p, const Word& w, int level) {
  DerivedSeriesVerdict v;
  v.word = w;
  v.level = level;
  if (level != 1 && level != 2)
    fail(Err::LevelOutOfRange, "membership implemented for levels 1 and 2");

  H1Data h1(p);
  bool lvl1 = h1.class_zero(w, make_ring_all());
  if (level == 1) {
    v.member = lvl1;
    auto c = h1.coords(w);
    std::string cs = "class (";
    for (std::size_t i = 0; i < c.size(); ++i) cs += (i ? "," : "") + to_string(c[i]);
    v.witness.push_back(cs + ") in SNF coordinates");
    return v;
  }
  if (!lvl1)
    fail(Err::PrerequisiteNotMet, "word is not in level 1 (nonzero rational H_1 class)");

  AlexanderData d = alexander_matrix(p);
  auto row = d.fox_row(w);
  std::size_t base = d.matrix.empty() ? 0 : rank_over_fraction_field(d.matrix);
  auto extended = d.matrix;
  extended.push_back(row);
  std::size_t ext = rank_over_fraction_field(extended);
  v.member = (ext == base);
  for (std::size_t g = 0; g < row.size(); ++g)
    v.witness.push_back("D_" + p.gens[g] + " = " + laurent_to_string(row[g], d.variables));
  return v;
}

DivisibilityResult divisibility_test(const Presentation& p, const Word& u,
                                     const LaurentPoly& s) {
  if (!p.is_free() || p.gens.size() != 2)
    fail(Err::NotRankTwoFree, "divisibility test is hard-wired to free rank two");
  if (s.is_zero()) fail(Err::ZeroDivisor, "s must be nonzero");
  if (s.nvars != 2) fail(Err::Internal, "s must live in the two-variable Laurent ring");

  // Koszul sanity: the kernel of v -> v1(x-1) + v2(y-1) is free on (1-y, x-1); verify
  // the defining identity before trusting the hard-wired structure.
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, Rat(1));
  if (!((one - y) * (x - one) + (x - one) * (y - one)).is_zero())
    fail(Err::Internal, "Koszul identity failed");

  auto v = derived_class(p, u);
  DivisibilityResult res;
  if (v[0].is_zero() && v[1].is_zero()) {
    res.solvable = true;  // u in F'': class 0 is divisible by anything
    res.mu = LaurentPoly(2);
    res.quotient = LaurentPoly(2);
    return res;
  }
  auto mu = divide_exact(v[0], one - y);
  if (!mu) fail(Err::Internal, "derived class escaped the Koszul kernel module");
  if (!(*mu * (x - one) == v[1]))
    fail(Err::Internal, "derived class inconsistent with the rank-one module structure");
  res.mu = *mu;
  auto q = divide_exact(*mu, s);
  if (q) {
    res.solvable = true;
    res.quotient = *q;
  }
  return res;
}

ContainerReport container_level(const Presentation& p, int n) {
  if (n < 0 || n > 2)
    fail(Err::LevelOutOfRange,
         "container computed for levels 0..2 (higher levels need Ore localization)");
  ContainerReport rep;
  rep.level = n;
  if (n == 0) {
    rep.description = "trivial group";
    return rep;
  }
  Kh1Report k = kh1_rank(p);
  rep.mu = k.mu;
  if (n == 1) {
    rep.description = "Q^" + std::to_string(k.mu);
    return rep;
  }
  rep.kh1 = k.rank;
  rep.description = "H_1(G;K)-rank " + std::to_string(k.rank) + " over the level-1 part Q^" +
                    std::to_string(k.mu);
  return rep;
}

}  // namespace grouploc
