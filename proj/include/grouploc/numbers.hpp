#pragma once
// Exact arithmetic aliases and small integer helpers shared by every module.
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace grouploc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return iabs(a / igcd(a, b) * b);
}

// Deterministic trial division; ring literals only ever carry small primes.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline Int ipow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Generalized binomial C(e, k) for integer e (possibly negative); always an integer.
inline Int binom_gen(const Int& e, unsigned k) {
  Int c = 1;
  for (unsigned i = 0; i < k; ++i) {
    c *= e - Int(i);
    c /= Int(i) + 1;  // exact at every step
  }
  return c;
}

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace grouploc
