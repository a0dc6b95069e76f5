#include "grouploc/ring.hpp"

#include <algorithm>

#include "grouploc/errors.hpp"

namespace grouploc {

CoefficientRing make_ring(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const Int& p : primes)
    if (!is_prime(p)) fail(Err::NonPrimeElement, p.str());
  CoefficientRing r;
  r.inverted = std::move(primes);
  if (r.inverted.empty()) {
    r.name = "Z";
  } else {
    r.name = "Z[";
    for (std::size_t i = 0; i < r.inverted.size(); ++i) {
      if (i) r.name += ",";
      r.name += "1/" + r.inverted[i].str();
    }
    r.name += "]";
  }
  return r;
}

CoefficientRing make_ring_all() {
  CoefficientRing r;
  r.all = true;
  r.name = "Q";
  return r;
}

bool in_denominator_set(const CoefficientRing& ring, const Int& e) {
  if (e <= 0) fail(Err::NonPositive, e.str());
  if (ring.all) return true;
  Int rest = strip_inverted(ring, e);
  return rest == 1;
}

Int strip_inverted(const CoefficientRing& ring, Int d) {
  if (d == 0) return d;
  if (d < 0) d = -d;
  if (ring.all) return 1;
  for (const Int& p : ring.inverted)
    while (d % p == 0) d /= p;
  return d;
}

RModuleInvariants localize_abelian(const IntMat& m, const CoefficientRing& ring) {
  SnfResult s = snf(m);
  RModuleInvariants inv;
  std::size_t nonzero = 0;
  for (const Int& d : s.diag) {
    if (d == 0) continue;
    ++nonzero;
    Int t = strip_inverted(ring, d);
    if (t > 1) inv.torsion.push_back(t);
  }
  inv.free_rank = static_cast<long long>(m.cols) - static_cast<long long>(nonzero);
  // divisor chain survives stripping: the prime-to-R part of d_i divides that of d_{i+1}
  return inv;
}

}  // namespace grouploc
