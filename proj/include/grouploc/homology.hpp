#pragma once
// H_1 with coefficients in R ⊂ Q, induced maps, and the 2-connectedness ledger that
// downstream closure/tower constructions rely on.
#include <optional>
#include <string>
#include <vector>

#include "grouploc/matrix.hpp"
#include "grouploc/presentation.hpp"
#include "grouploc/ring.hpp"

namespace grouploc {

// relators x generators exponent-sum matrix (the abelianized relation matrix)
IntMat exponent_matrix(const Presentation& p);

RModuleInvariants h1_with_R(const Presentation& p, const CoefficientRing& ring);

// SNF-backed coordinates on H_1(G;Z): class(w) = (exponent vector of w) · V puts the
// relation lattice in diagonal position d_1 | d_2 | ... so componentwise arithmetic
// answers torsion/divisibility questions exactly.
struct H1Data {
  std::size_t ngens = 0;
  std::vector<Int> diag;  // padded with 0 to ngens entries
  IntMat V, Vinv;

  explicit H1Data(const Presentation& p);
  std::vector<Int> coords(const Word& w) const;
  bool class_zero(const std::vector<Int>& c, const CoefficientRing& ring) const;
  bool class_zero(const Word& w, const CoefficientRing& ring) const {
    return class_zero(coords(w), ring);
  }
  // order of [w] in H_1(G;Z); nullopt when infinite
  std::optional<Int> class_order(const Word& w) const;
  // largest k with [w] divisible by prime^k in H_1(G;Z), capped; nullopt when [w] = 0
  std::optional<unsigned> max_divisibility(const Word& w, const Int& prime,
                                           unsigned cap = 64) const;
  // words (over the generators) whose classes form a basis of the free part
  std::vector<Word> free_basis_words() const;
};

// matrix of h_* on free abelianizations: target gens x source gens
IntMat h1_map_matrix(const GroupHom& h);

enum class IsoVerdict { ISO, NOT_ISO };

struct H1IsoReport {
  IsoVerdict verdict = IsoVerdict::NOT_ISO;
  bool well_defined = false;  // h_* maps the source relation lattice into the target's
  RModuleInvariants kernel, cokernel;  // localized invariants (valid when well_defined)
  std::string detail;
};

// Exact test that h_*: H_1(source;R) -> H_1(target;R) is an isomorphism. Kernel and
// cokernel are computed integrally and then localized (R is flat over Z, so
// localizing the integral kernel/cokernel is legitimate).
H1IsoReport check_h1_iso(const GroupHom& h, const CoefficientRing& ring);

// H_2-surjectivity is never computed from a presentation here; it is either inherited
// from how the map was built (adjunctions and invisible quotients) or unknown.
enum class H2Status { SurjectiveByConstruction, Unknown };

struct TwoConnCertificate {
  CoefficientRing ring;
  H1IsoReport h1;
  H2Status h2 = H2Status::Unknown;
  HomProvenance reason = HomProvenance::None;
  std::string detail;
  bool two_connected_over_R() const {
    return h1.verdict == IsoVerdict::ISO && h2 == H2Status::SurjectiveByConstruction;
  }
};

// Gate: provenance must be construction-backed and every recorded exponent must lie in
// D_R for the H_2 leg; the H_1 leg is always computed.
TwoConnCertificate certify_omega_R(const GroupHom& h, const CoefficientRing& ring);

}  // namespace grouploc
