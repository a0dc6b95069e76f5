#pragma once
// Subrings R of Q given by inverted primes, the denominator set D_R, and
// R-localization of finitely generated abelian groups via Smith normal form.
#include <string>
#include <vector>

#include "grouploc/matrix.hpp"
#include "grouploc/numbers.hpp"

namespace grouploc {

struct CoefficientRing {
  bool all = false;                // R = Q
  std::vector<Int> inverted;       // sorted, distinct primes; empty + !all means R = Z
  std::string name;                // display literal: Z, Q, Z[1/2,1/3]
  bool operator==(const CoefficientRing&) const = default;
};

CoefficientRing make_ring(std::vector<Int> primes);
CoefficientRing make_ring_all();

// D_R membership: every prime factor of e is inverted. e >= 1 required.
bool in_denominator_set(const CoefficientRing& ring, const Int& e);

// Largest-factor-supported-on-inverted-primes stripped out of d (d >= 0; 0 stays 0).
Int strip_inverted(const CoefficientRing& ring, Int d);

struct RModuleInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // entries > 1, divisibility chain, coprime to inverted primes
  bool operator==(const RModuleInvariants&) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// rows = relations, columns = generators; empty matrix allowed (free module).
RModuleInvariants localize_abelian(const IntMat& relation_matrix, const CoefficientRing& ring);

}  // namespace grouploc
