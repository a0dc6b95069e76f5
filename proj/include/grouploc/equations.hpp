#pragma once
// R-nullhomologous systems, root adjunction, invisibility certificates, and finite
// closure towers. Everything here returns verdicts or construction-backed
// certificates; nothing claims more than free reduction, relator expansion, or a
// class-c Magnus comparison can justify.
#include <string>
#include <vector>

#include "grouploc/homology.hpp"
#include "grouploc/presentation.hpp"
#include "grouploc/ring.hpp"
#include "grouploc/words.hpp"

namespace grouploc {

// x_i^e = w_i(x_1..x_n) over `base`; rhs entries mix base generators and $k letters.
struct NullhomologousSystem {
  Presentation base;
  std::size_t n = 0;
  Int e = 1;
  std::vector<Monomial> rhs;
  bool indet_sums_zero = true;  // computed at construction, validated per ring later

  std::string str() const;
};

// n = rhs.size(); letters checked against base/n; e >= 1. The indeterminate-sum
// condition is recorded, not enforced, so invalid systems can be reported as such.
NullhomologousSystem make_system(Presentation base, Int e, std::vector<Monomial> rhs);

// true iff e ∈ D_R and every rhs has zero exponent sum at every indeterminate
bool validate_system(const NullhomologousSystem& s, const CoefficientRing& ring);

// compare g_i^e with w_i(g_1..g_n) in the base group, to class c when inexact
Verdict check_solution(const NullhomologousSystem& s, const std::vector<Word>& assignment,
                       int class_bound);

struct AdjunctionResult {
  Presentation extended;
  GroupHom hom;  // base -> extended, ADJUNCTION provenance
  TwoConnCertificate cert;
};
// fresh generators z1..zn (smallest unused names), relators z_i^e * w_i(z)^-1
AdjunctionResult adjoin_solutions(const Presentation& p, const NullhomologousSystem& s,
                                  const CoefficientRing& ring);

// Witnesses express a_i^e as an element of [G, <<a_1..a_n>>]: each witness monomial
// must erase (dropping $-letters) to a freely trivial word and have zero exponent sum
// in every indeterminate; both are decided exactly.
struct InvisibilityCertificate {
  Presentation ambient;
  std::vector<Word> normal_generators;
  Int e = 1;
  std::vector<Monomial> witness;  // one per normal generator

  std::string str() const;
};

InvisibilityCertificate make_certificate(Presentation ambient, std::vector<Word> gens,
                                         Int e, std::vector<Monomial> witness);

Verdict verify_invisibility_certificate(const InvisibilityCertificate& cert,
                                        const CoefficientRing& ring, int class_bound);

// certificate for the product N1·N2 (same ambient), e = lcm, witnesses transported
// through conjugation by powers of the tagged generator
InvisibilityCertificate product_certificate(const InvisibilityCertificate& c1,
                                            const InvisibilityCertificate& c2);

struct QuotientResult {
  Presentation quotient;
  GroupHom hom;  // INVISIBLE_QUOTIENT provenance
  TwoConnCertificate cert;
  Verdict certificate_verdict;
};
// verifies the certificate first (UnverifiedCertificate unless VERIFIED_FREE or
// VERIFIED_TO_CLASS(c) with c >= 2), then kills the normal generators
QuotientResult quotient_by_invisible(const Presentation& p,
                                     const InvisibilityCertificate& cert,
                                     const CoefficientRing& ring, int class_bound = 2);

// canonical candidate certificates for a presentation: one per generator whose class
// dies in H_1(G;R) with finite integral order in D_R; witnesses tried are the identity
// and [c, $1^±1] over all generators c, keeping the best verdict
struct CandidateCertificate {
  InvisibilityCertificate cert;
  Verdict verdict;
};
std::vector<CandidateCertificate> canonical_invisible_certificates(
    const Presentation& p, const CoefficientRing& ring, int class_bound);

// ---- towers -----------------------------------------------------------------------
struct TowerBudget {
  int depth = 0;
  bool auto_sqrt = false;          // adjoin {x^2 = h} per current free H_1 basis word
  int enumerate_cap = 0;           // > 0: enumerate that many canonical systems per level
  std::vector<NullhomologousSystem> explicit_systems;  // rebased onto each level
  bool kill_invisible = false;
  int class_bound = 3;
};

struct TowerStep {
  GroupHom hom;  // level k -> level k+1
  TwoConnCertificate cert;
  std::vector<std::string> adjoined;  // printed systems
  std::vector<std::string> killed;    // printed certificates
};

struct ClosureTower {
  CoefficientRing ring;
  std::vector<Presentation> levels;
  std::vector<TowerStep> steps;
  std::vector<std::string> log;
};

ClosureTower build_tower(const Presentation& seed, const CoefficientRing& ring,
                         const TowerBudget& budget);

// deterministic candidate systems over p: n = 1, e ascending through {1} and the
// inverted primes, rhs monomials by (length, lex) over letters g_0 < g_0^-1 < ... < $1
std::vector<NullhomologousSystem> enumerate_systems(const Presentation& p,
                                                    const CoefficientRing& ring,
                                                    int count);

}  // namespace grouploc
