#include "grouploc/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "grouploc/errors.hpp"

namespace grouploc {

namespace {
void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars != b.nvars) fail(Err::Internal, "Laurent arity mismatch");
}
}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t n, const Rat& c) {
  LaurentPoly p(n);
  if (c != 0) p.terms.emplace(Expo(n, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i, long long e) {
  Expo ex(n, 0);
  ex.at(i) = e;
  return monomial(n, std::move(ex), Rat(1));
}

LaurentPoly LaurentPoly::monomial(std::size_t n, Expo e, const Rat& c) {
  LaurentPoly p(n);
  if (c != 0) p.terms.emplace(std::move(e), c);
  return p;
}

void LaurentPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_vars(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  check_vars(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms) out.add_term(e, -c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.nvars);
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
  return out;
}

LaurentPoly scale(const LaurentPoly& a, const Rat& c) {
  LaurentPoly out(a.nvars);
  if (c == 0) return out;
  for (const auto& [e, k] : a.terms) out.terms.emplace(e, k * c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_vars(a, b);
  LaurentPoly out(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Expo e(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

namespace {
Expo min_expo(const LaurentPoly& a) {
  Expo m = a.terms.begin()->first;
  for (const auto& [e, c] : a.terms) {
    (void)c;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

LaurentPoly shift(const LaurentPoly& a, const Expo& by, long long sign) {
  LaurentPoly out(a.nvars);
  for (const auto& [e, c] : a.terms) {
    Expo n(a.nvars);
    for (std::size_t i = 0; i < a.nvars; ++i) n[i] = e[i] + sign * by[i];
    out.terms.emplace(std::move(n), c);
  }
  return out;
}
}  // namespace

LaurentPoly strip_unit(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  LaurentPoly p = shift(a, min_expo(a), -1);
  Rat lead = p.terms.rbegin()->second;  // lex-largest exponent
  return scale(p, Rat(1) / lead);
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return strip_unit(a) == strip_unit(b);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(Err::ZeroDivisor, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.nvars);
  check_vars(a, b);
  Expo ma = min_expo(a), mb = min_expo(b);
  LaurentPoly A = shift(a, ma, -1), B = shift(b, mb, -1);
  LaurentPoly q(a.nvars);
  while (!A.is_zero()) {
    const auto& [ea, ca] = *A.terms.rbegin();
    const auto& [eb, cb] = *B.terms.rbegin();
    Expo d(a.nvars);
    for (std::size_t i = 0; i < a.nvars; ++i) {
      d[i] = ea[i] - eb[i];
      if (d[i] < 0) return std::nullopt;  // nonzero remainder is unavoidable
    }
    LaurentPoly t = LaurentPoly::monomial(a.nvars, d, ca / cb);
    q = q + t;
    A = A - t * B;
  }
  // restore the unit t^(ma - mb)
  Expo back(a.nvars);
  for (std::size_t i = 0; i < a.nvars; ++i) back[i] = ma[i] - mb[i];
  return shift(q, back, 1);
}

Rat augmentation(const LaurentPoly& a) {
  Rat s(0);
  for (const auto& [e, c] : a.terms) {
    (void)e;
    s += c;
  }
  return s;
}

std::string laurent_to_string(const LaurentPoly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lex so constants print last
  for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.nvars; ++i) {
      long long e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << to_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << to_string(c) << "*" << mono;
    }
  }
  return os.str();
}

// ---- fraction field -----------------------------------------------------------------

namespace {
void normalize_unit(FractionElem& f) {
  if (f.num.is_zero()) {
    f.den = LaurentPoly::constant(f.den.nvars, Rat(1));
    return;
  }
  // Divide num and den by their common monomial content; same shift on both
  // sides, so the value of the fraction is unchanged.
  Expo mn = min_expo(f.num), md = min_expo(f.den);
  for (std::size_t i = 0; i < mn.size(); ++i) mn[i] = std::min(mn[i], md[i]);
  f.num = shift(f.num, mn, -1);
  f.den = shift(f.den, mn, -1);
}
}  // namespace

FractionElem FractionElem::of(LaurentPoly p) {
  FractionElem f{std::move(p), LaurentPoly::constant(0, Rat(1))};
  f.den = LaurentPoly::constant(f.num.nvars, Rat(1));
  return f;
}

FractionElem fadd(const FractionElem& a, const FractionElem& b) {
  FractionElem f{a.num * b.den + b.num * a.den, a.den * b.den};
  normalize_unit(f);
  return f;
}

FractionElem fsub(const FractionElem& a, const FractionElem& b) {
  FractionElem f{a.num * b.den - b.num * a.den, a.den * b.den};
  normalize_unit(f);
  return f;
}

FractionElem fmul(const FractionElem& a, const FractionElem& b) {
  FractionElem f{a.num * b.num, a.den * b.den};
  normalize_unit(f);
  return f;
}

FractionElem fdiv(const FractionElem& a, const FractionElem& b) {
  if (b.is_zero()) fail(Err::ZeroDivisor, "division by zero in the fraction field");
  FractionElem f{a.num * b.den, a.den * b.num};
  normalize_unit(f);
  return f;
}

bool fequal(const FractionElem& a, const FractionElem& b) {
  return a.num * b.den == b.num * a.den;
}

std::size_t rank_over_fraction_field(const std::vector<std::vector<LaurentPoly>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<FractionElem>> w;
  for (const auto& r : m) {
    if (r.size() != cols) fail(Err::Internal, "ragged matrix");
    std::vector<FractionElem> row;
    for (const auto& p : r) row.push_back(FractionElem::of(p));
    w.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && w[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(w[p], w[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (w[i][c].is_zero()) continue;
      FractionElem f = fdiv(w[i][c], w[rank][c]);
      for (std::size_t j = c; j < cols; ++j) w[i][j] = fsub(w[i][j], fmul(f, w[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace grouploc
