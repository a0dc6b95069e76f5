#include "grouploc/magnus.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "grouploc/errors.hpp"
#include "grouploc/matrix.hpp"

namespace grouploc {

namespace {
constexpr std::size_t kMaxTable = 2'000'000;  // dense-series safety cap
}

MonomialTable::MonomialTable(unsigned rank, unsigned cap) : rank_(rank), cap_(cap) {
  if (rank == 0) fail(Err::NonPositive, "monomial table needs rank >= 1");
  offset_.assign(cap_ + 2, 0);
  powr_.assign(cap_ + 1, 1);
  std::size_t total = 1;  // the empty monomial
  offset_[0] = 0;
  offset_[1] = 1;
  for (unsigned d = 1; d <= cap_; ++d) {
    if (powr_[d - 1] > kMaxTable / rank_) fail(Err::CapExceeded, "monomial table too large");
    powr_[d] = powr_[d - 1] * rank_;
    if (total > kMaxTable - powr_[d]) fail(Err::CapExceeded, "monomial table too large");
    total += powr_[d];
    offset_[d + 1] = total;
  }
}

unsigned MonomialTable::degree(std::size_t id) const {
  unsigned d = 0;
  while (id >= offset_[d + 1]) ++d;
  return d;
}

std::size_t MonomialTable::concat(std::size_t a, std::size_t b) const {
  unsigned da = degree(a), db = degree(b);
  if (da + db > cap_) return npos;
  std::size_t ra = a - offset_[da], rb = b - offset_[db];
  return offset_[da + db] + ra * powr_[db] + rb;
}

std::vector<unsigned> MonomialTable::digits(std::size_t id) const {
  unsigned d = degree(id);
  std::size_t r = id - offset_[d];
  std::vector<unsigned> out(d);
  for (unsigned i = d; i-- > 0;) {
    out[i] = static_cast<unsigned>(r % rank_);
    r /= rank_;
  }
  return out;
}

std::string MonomialTable::str(std::size_t id, const std::vector<std::string>& names) const {
  if (id == 0) return "1";
  std::ostringstream os;
  auto dg = digits(id);
  for (std::size_t i = 0; i < dg.size(); ++i) os << (i ? "*" : "") << names.at(dg[i]);
  return os.str();
}

Series series_one(const MonomialTable& t) {
  Series s(t.size(), Rat(0));
  s[0] = 1;
  return s;
}

Series series_mul(const MonomialTable& t, const Series& a, const Series& b) {
  Series out(t.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      std::size_t k = t.concat(i, j);
      if (k == MonomialTable::npos) break;  // later j only have larger degree
      out[k] += a[i] * b[j];
    }
  }
  return out;
}

void series_add_scaled(Series& a, const Series& b, const Rat& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] += c * b[i];
}

std::size_t first_support(const Series& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return i;
  return MonomialTable::npos;
}

Series magnus_expand(const MonomialTable& t, const Word& w) {
  Series acc = series_one(t);
  for (const auto& l : w.mono().letters()) {
    unsigned g = l.sym.id;
    if (g >= t.rank()) fail(Err::UnknownSymbol, "word letter outside the table alphabet");
    // power ids X_g^k for k <= cap
    std::vector<std::size_t> gp(t.cap() + 1);
    gp[0] = t.one();
    for (unsigned k = 1; k <= t.cap(); ++k) gp[k] = t.concat(gp[k - 1], t.gen(g));
    // multiply by (1+X_g)^e = sum_k C(e,k) X_g^k, exact for negative e as well
    Series next(t.size(), Rat(0));
    for (unsigned k = 0; k <= t.cap(); ++k) {
      Int c = binom_gen(Int(l.exp), k);
      if (c == 0) continue;
      Rat rc(c);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        std::size_t m = t.concat(i, gp[k]);
        if (m == MonomialTable::npos) continue;
        next[m] += acc[i] * rc;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

LcsDepth lcs_degree(const Word& w, unsigned rank, unsigned cap) {
  if (cap < 1) fail(Err::NonPositive, "cap must be >= 1");
  unsigned need = static_cast<unsigned>(std::max<std::uint32_t>(w.max_gen_plus1(), 1));
  if (rank < need) rank = need;
  MonomialTable t(rank, cap);
  Series s = magnus_expand(t, w);
  s[0] -= 1;
  std::size_t lead = first_support(s);
  if (lead == MonomialTable::npos) return {true, 0};
  return {false, t.degree(lead)};
}

// ---- NilpotentAlgebra --------------------------------------------------------------

NilpotentAlgebra::NilpotentAlgebra(const Presentation& p, unsigned cap)
    : pres_(p), tab_(static_cast<unsigned>(std::max<std::size_t>(p.gens.size(), 1)), cap) {
  if (p.gens.empty()) fail(Err::NonPositive, "presentation needs at least one generator");
  std::vector<Series> queue;
  for (const auto& r : p.relators) {
    Series v = magnus_expand(tab_, r);
    v[0] -= 1;
    queue.push_back(std::move(v));
  }
  while (!queue.empty()) {
    Series v = std::move(queue.back());
    queue.pop_back();
    insert_row(std::move(v), &queue);
  }
}

// Reduce v against the RREF, insert if nonzero, enqueue one-step products; returns
// whether the row enlarged J.
bool NilpotentAlgebra::insert_row(Series v, std::vector<Series>* queue) {
  v = reduce(std::move(v));
  std::size_t lead = first_support(v);
  if (lead == MonomialTable::npos) return false;
  Rat inv = Rat(1) / v[lead];
  for (auto& c : v)
    if (c != 0) c *= inv;
  // eliminate the new pivot from existing rows
  for (auto& row : rows_)
    if (row[lead] != 0) series_add_scaled(row, v, -row[lead]);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<long>(idx), v);
  if (queue) {
    for (unsigned g = 0; g < tab_.rank(); ++g) {
      std::size_t xg = tab_.gen(g);
      Series left(tab_.size(), Rat(0)), right(tab_.size(), Rat(0));
      bool lnz = false, rnz = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::size_t li = tab_.concat(xg, i), ri = tab_.concat(i, xg);
        if (li != MonomialTable::npos) left[li] = v[i], lnz = true;
        if (ri != MonomialTable::npos) right[ri] = v[i], rnz = true;
      }
      if (lnz) queue->push_back(std::move(left));
      if (rnz) queue->push_back(std::move(right));
    }
  }
  return true;
}

Series NilpotentAlgebra::reduce(Series v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c != 0) series_add_scaled(v, rows_[i], -c);
  }
  return v;
}

bool NilpotentAlgebra::trivial_to_class(const Word& w) const {
  Series v = magnus_expand(tab_, w);
  v[0] -= 1;
  v = reduce(std::move(v));
  return first_support(v) == MonomialTable::npos;
}

bool NilpotentAlgebra::equal_to_class(const Word& u, const Word& v) const {
  return trivial_to_class(u * v.inverse());
}

std::vector<std::size_t> NilpotentAlgebra::pivots_by_degree() const {
  std::vector<std::size_t> cnt(tab_.cap() + 1, 0);
  for (std::size_t p : pivots_) ++cnt[tab_.degree(p)];
  return cnt;
}

std::vector<long long> NilpotentAlgebra::slice_dims() const {
  auto piv = pivots_by_degree();
  std::vector<long long> a(tab_.cap() + 1);
  for (unsigned d = 0; d <= tab_.cap(); ++d)
    a[d] = static_cast<long long>(tab_.end_of_degree(d) - tab_.begin_of_degree(d)) -
           static_cast<long long>(piv[d]);
  return a;
}

std::vector<std::size_t> NilpotentAlgebra::slice_basis(unsigned k) const {
  std::vector<std::size_t> out;
  auto lo = std::lower_bound(pivots_.begin(), pivots_.end(), tab_.begin_of_degree(k));
  for (std::size_t id = tab_.begin_of_degree(k); id < tab_.end_of_degree(k); ++id) {
    if (lo != pivots_.end() && *lo == id)
      ++lo;
    else
      out.push_back(id);
  }
  return out;
}

// ---- Lie ranks via PBW deflation -----------------------------------------------------

LieRanks rational_lcs_quotient(const Presentation& p, unsigned q) {
  if (q < 1) fail(Err::NonPositive, "class bound must be >= 1");
  NilpotentAlgebra alg(p, q);
  auto a = alg.slice_dims();  // a[0] == 1
  // poly[d] tracks prod_{j<k} (1-t^j)^{-l_j} mod t^{q+1}
  std::vector<Int> poly(q + 1, 0);
  poly[0] = 1;
  LieRanks out;
  out.q = q;
  for (unsigned k = 1; k <= q; ++k) {
    Int lk = Int(a[k]) - poly[k];
    if (lk < 0) fail(Err::Internal, "PBW deflation produced a negative rank");
    out.dims.push_back(static_cast<long long>(lk));
    if (lk == 0) continue;
    // poly *= (1-t^k)^{-lk} = sum_m C(lk+m-1, m) t^{km}
    std::vector<Int> next(q + 1, 0);
    for (unsigned d = 0; d <= q; ++d) {
      if (poly[d] == 0) continue;
      for (unsigned m = 0; d + k * m <= q; ++m)
        next[d + k * m] += poly[d] * binom_gen(lk + Int(m) - 1, m);
    }
    poly = std::move(next);
  }
  return out;
}

// ---- graded injectivity ---------------------------------------------------------------

StallingsReport stallings_injectivity_check(const GroupHom& h, unsigned q,
                                            const CoefficientRing& ring) {
  (void)ring;  // the graded test is rational; the argument is kept for signature parity
  if (q < 1) fail(Err::NonPositive, "class bound must be >= 1");
  NilpotentAlgebra src(h.source, q), tgt(h.target, q);

  // the algebra map must be defined on the class-q quotients
  for (const auto& r : h.source.relators)
    if (!tgt.trivial_to_class(h.apply(r)))
      fail(Err::PrerequisiteNotMet,
           "homomorphism does not descend to the rational class-" + std::to_string(q) +
               " quotients");

  // phi(X_i) = M(h(x_i)) - 1, reduced in the target algebra
  std::vector<Series> gen_img;
  for (const auto& w : h.images) {
    Series v = magnus_expand(tgt.table(), w);
    v[0] -= 1;
    gen_img.push_back(tgt.reduce(std::move(v)));
  }

  StallingsReport rep;
  rep.q = q;
  rep.injective = true;
  for (unsigned k = 1; k <= q; ++k) {
    auto bs = src.slice_basis(k);
    auto bt = tgt.slice_basis(k);
    rep.source_dims.push_back(static_cast<long long>(bs.size()));
    rep.target_dims.push_back(static_cast<long long>(bt.size()));
    if (bs.empty()) {
      rep.image_ranks.push_back(0);
      continue;
    }
    // column j = phi(basis monomial j), coordinates on the target deg-k slice basis
    std::vector<std::size_t> tpos(tgt.table().size(), MonomialTable::npos);
    for (std::size_t r = 0; r < bt.size(); ++r) tpos[bt[r]] = r;
    std::vector<std::vector<Rat>> cols;
    for (std::size_t mid : bs) {
      auto dg = src.table().digits(mid);
      Series v = gen_img.at(dg[0]);
      for (std::size_t i = 1; i < dg.size(); ++i)
        v = tgt.reduce(series_mul(tgt.table(), v, gen_img.at(dg[i])));
      std::vector<Rat> col(bt.size(), Rat(0));
      for (std::size_t id = tgt.table().begin_of_degree(k); id < tgt.table().end_of_degree(k);
           ++id)
        if (v[id] != 0) col[tpos[id]] = v[id];
      cols.push_back(std::move(col));
    }
    // rank over Q: echelon basis keyed by leading index
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> by_lead(bt.size());
    for (auto col : cols) {
      for (;;) {
        std::size_t lead = bt.size();
        for (std::size_t i = 0; i < col.size(); ++i)
          if (col[i] != 0) {
            lead = i;
            break;
          }
        if (lead == bt.size()) break;  // dependent
        if (by_lead[lead].empty()) {
          by_lead[lead] = std::move(col);
          ++rank;
          break;
        }
        const auto& b = by_lead[lead];
        Rat f = col[lead] / b[lead];
        for (std::size_t i = lead; i < col.size(); ++i) col[i] -= f * b[i];
      }
    }
    rep.image_ranks.push_back(static_cast<long long>(rank));
    if (rank != bs.size() && rep.injective) {
      rep.injective = false;
      rep.detail = "kernel in degree " + std::to_string(k);
    }
  }
  return rep;
}

}  // namespace grouploc
