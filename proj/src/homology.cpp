#include "grouploc/homology.hpp"

#include <algorithm>

#include "grouploc/errors.hpp"

namespace grouploc {

IntMat exponent_matrix(const Presentation& p) {
  IntMat E(p.relators.size(), p.gens.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < p.gens.size(); ++j)
      E.at(i, j) = p.relators[i].exponent_sum(static_cast<std::uint32_t>(j));
  return E;
}

RModuleInvariants h1_with_R(const Presentation& p, const CoefficientRing& ring) {
  return localize_abelian(exponent_matrix(p), ring);
}

H1Data::H1Data(const Presentation& p) : ngens(p.gens.size()) {
  SnfResult s = snf(exponent_matrix(p), true);
  diag = s.diag;
  diag.resize(ngens, Int(0));  // wide matrices: uncovered columns are free
  V = std::move(s.V);
  Vinv = std::move(s.Vinv);
}

std::vector<Int> H1Data::coords(const Word& w) const {
  if (w.max_gen_plus1() > ngens) fail(Err::UnknownSymbol, "word outside the alphabet");
  std::vector<Int> c(ngens, 0);
  for (std::size_t j = 0; j < ngens; ++j) {
    Int e = w.exponent_sum(static_cast<std::uint32_t>(j));
    if (e == 0) continue;
    for (std::size_t k = 0; k < ngens; ++k) c[k] += e * V.at(j, k);
  }
  return c;
}

bool H1Data::class_zero(const std::vector<Int>& c, const CoefficientRing& ring) const {
  for (std::size_t i = 0; i < ngens; ++i) {
    if (diag[i] != 0) {
      Int d = strip_inverted(ring, diag[i]);
      if (d != 1 && c[i] % d != 0) return false;
    } else {
      if (c[i] != 0) return false;  // free coordinate: no torsion over any R in Q
    }
  }
  return true;
}

std::optional<Int> H1Data::class_order(const Word& w) const {
  auto c = coords(w);
  Int ord = 1;
  for (std::size_t i = 0; i < ngens; ++i) {
    if (diag[i] == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    Int r = c[i] % diag[i];
    if (r == 0) continue;
    ord = ilcm(ord, diag[i] / igcd(diag[i], r));
  }
  return ord;
}

std::optional<unsigned> H1Data::max_divisibility(const Word& w, const Int& prime,
                                                 unsigned cap) const {
  auto c = coords(w);
  bool all_zero = true;
  for (std::size_t i = 0; i < ngens; ++i) {
    Int v = diag[i] != 0 ? c[i] % diag[i] : c[i];
    if (v != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  // [w] divisible by m iff per coordinate: free ⇒ m | c_i, torsion ⇒ gcd(m,d_i) | c_i
  Int m = 1;
  for (unsigned k = 0; k < cap; ++k) {
    m *= prime;
    for (std::size_t i = 0; i < ngens; ++i) {
      if (diag[i] == 0) {
        if (c[i] % m != 0) return k;
      } else {
        if (c[i] % igcd(m, diag[i]) != 0) return k;
      }
    }
  }
  return cap;
}

std::vector<Word> H1Data::free_basis_words() const {
  // row i of Vinv gives the exponent-vector word mapping to the i-th SNF coordinate
  std::vector<Word> out;
  for (std::size_t i = 0; i < ngens; ++i) {
    if (diag[i] != 0) continue;
    std::vector<Letter> ls;
    for (std::size_t j = 0; j < ngens; ++j) {
      Int e = Vinv.at(i, j);
      if (e == 0) continue;
      ls.push_back({gen_sym(static_cast<std::uint32_t>(j)),
                    static_cast<long long>(e)});
    }
    out.push_back(Word::from_letters(ls));
  }
  return out;
}

IntMat h1_map_matrix(const GroupHom& h) {
  IntMat M(h.target.gens.size(), h.source.gens.size());
  for (std::size_t j = 0; j < h.source.gens.size(); ++j)
    for (std::size_t i = 0; i < h.target.gens.size(); ++i)
      M.at(i, j) = h.images.at(j).exponent_sum(static_cast<std::uint32_t>(i));
  return M;
}

H1IsoReport check_h1_iso(const GroupHom& h, const CoefficientRing& ring) {
  H1IsoReport rep;
  const std::size_t a = h.source.gens.size(), b = h.target.gens.size();
  IntMat Es = exponent_matrix(h.source), Et = exponent_matrix(h.target);
  IntMat M = h1_map_matrix(h);

  // well-definedness: M maps the source relation lattice into the target's
  HnfResult Lt = hnf_rows(Et);
  for (std::size_t i = 0; i < Es.rows; ++i) {
    std::vector<Int> img(b, 0);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t j = 0; j < a; ++j) img[r] += M.at(r, j) * Es.at(i, j);
    if (!lattice_coords(Lt, img)) {
      rep.well_defined = false;
      rep.detail = "a source relator class does not vanish in the target abelianization";
      return rep;
    }
  }
  rep.well_defined = true;

  // cokernel of H_1(source;Z) -> H_1(target;Z): columns of M plus target relations
  IntMat stacked(a + Et.rows, b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = 0; i < b; ++i) stacked.at(j, i) = M.at(i, j);
  for (std::size_t r = 0; r < Et.rows; ++r)
    for (std::size_t i = 0; i < b; ++i) stacked.at(a + r, i) = Et.at(r, i);
  rep.cokernel = localize_abelian(stacked, ring);

  // kernel: X = { x in Z^a : Mx in L_target } comes from ker [M | -Et^T]; the induced
  // kernel on H_1 is X / L_source, localized (flatness moves ⊗R inside ker).
  IntMat K(b, a + Et.rows);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < a; ++j) K.at(i, j) = M.at(i, j);
    for (std::size_t r = 0; r < Et.rows; ++r) K.at(i, a + r) = -Et.at(r, i);
  }
  auto kern = kernel_cols(K);
  IntMat X(kern.size(), a);
  for (std::size_t i = 0; i < kern.size(); ++i)
    for (std::size_t j = 0; j < a; ++j) X.at(i, j) = kern[i][j];
  HnfResult BX = hnf_rows(X);
  if (BX.rows.empty()) {
    rep.kernel = RModuleInvariants{};  // X = 0 forces a trivial kernel
  } else {
    IntMat C(Es.rows, BX.rows.size());
    for (std::size_t i = 0; i < Es.rows; ++i) {
      std::vector<Int> row(a);
      for (std::size_t j = 0; j < a; ++j) row[j] = Es.at(i, j);
      auto co = lattice_coords(BX, row);
      if (!co) fail(Err::Internal, "source relation lattice escaped the kernel lattice");
      for (std::size_t j = 0; j < BX.rows.size(); ++j) C.at(i, j) = (*co)[j];
    }
    rep.kernel = localize_abelian(C, ring);
  }

  if (rep.kernel.trivial() && rep.cokernel.trivial()) {
    rep.verdict = IsoVerdict::ISO;
  } else {
    rep.verdict = IsoVerdict::NOT_ISO;
    rep.detail = !rep.cokernel.trivial() ? "nontrivial cokernel after localization"
                                         : "nontrivial kernel after localization";
  }
  return rep;
}

TwoConnCertificate certify_omega_R(const GroupHom& h, const CoefficientRing& ring) {
  TwoConnCertificate cert;
  cert.ring = ring;
  cert.h1 = check_h1_iso(h, ring);
  cert.reason = h.provenance;
  bool exps_ok = true;
  for (const auto& e : h.provenance_exponents)
    if (!in_denominator_set(ring, e)) exps_ok = false;
  if (h.provenance != HomProvenance::None && exps_ok) {
    cert.h2 = H2Status::SurjectiveByConstruction;
    cert.detail = std::string("built by ") + provenance_name(h.provenance);
  } else {
    cert.h2 = H2Status::Unknown;
    cert.detail = h.provenance == HomProvenance::None
                      ? "externally supplied map: surjectivity on H_2 not certified"
                      : "an adjunction exponent is not invertible in R";
    cert.reason = HomProvenance::None;
  }
  return cert;
}

}  // namespace grouploc
