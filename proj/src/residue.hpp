#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace recip {

enum class Ring { gaussian, eisenstein };

/// a + b*i (Gaussian) or a + b*w with w^2 + w + 1 = 0 (Eisenstein).
struct QuadInt {
  Ring ring;
  Int a, b;

  bool is_zero() const { return a == 0 && b == 0; }
  QuadInt conj() const;

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.ring == y.ring && x.a == y.a && x.b == y.b;
  }
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x) {
    return {x.ring, -x.a, -x.b};
  }

  std::string str() const;
};

Int qnorm(const QuadInt& z);

/// Nearest-lattice-point division: x = q*y + r with norm(r) < norm(y).
std::pair<QuadInt, QuadInt> qdivmod(const QuadInt& x, const QuadInt& y);

QuadInt qgcd(QuadInt x, QuadInt y);
QuadInt qmod(const QuadInt& x, const QuadInt& y);
bool divides(const QuadInt& d, const QuadInt& x);

/// The unit group: 4 elements for Z[i], 6 for Z[w].
std::vector<QuadInt> units(Ring ring);
bool is_unit(const QuadInt& z);
bool associates(const QuadInt& x, const QuadInt& y);
bool is_prime_element(const QuadInt& z);

/// The ramified prime of the ring: 1+i for Z[i], 1-w for Z[w].
QuadInt ramified_prime(Ring ring);
Ring ring_for_degree(int m);

/// The unique primary associate: congruent to 1 mod (1+i)^3 in Z[i],
/// congruent to 2 mod 3 in Z[w]. Errors on primes above the ramified one.
QuadInt primary_associate(const QuadInt& pi, int m);
bool is_primary(const QuadInt& z, int m);

/// i^k or w^k, exponent mod m.
struct RootOfUnity {
  int m;
  int k;

  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);
  friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
    return x.m == y.m && x.k == y.k;
  }
  QuadInt value() const;
  std::string str() const;
};

/// The m-th power residue character: the root of unity congruent to
/// alpha^{(N(pi)-1)/m} mod pi.
RootOfUnity residue_symbol(const QuadInt& alpha, const QuadInt& pi, int m);

/// lhs = (pi/theta)_m; rhs = (theta/pi)_m adjusted by the quartic sign
/// factor when m = 4. Both sides computed by independent exponentiations.
std::pair<RootOfUnity, RootOfUnity> reciprocity_check(const QuadInt& pi,
                                                      const QuadInt& theta,
                                                      int m);

/// Primary primes of the ring with norm in (1, bound), ascending by norm,
/// excluding the ramified prime.
std::vector<QuadInt> primary_primes_below(Ring ring, long norm_bound);

/// Literals: `a`, `a+bi`, `a-bi`, `a+bw`, `a-bw`; whitespace-insensitive.
/// Plain integers take the ring from `default_ring`.
QuadInt parse_quadint(const std::string& text, Ring default_ring);

}  // namespace recip
