#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace recip {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of {+1, -1}, the value group of every quadratic character
/// and Hilbert symbol over Q.
enum class Sign : int { plus = +1, minus = -1 };

inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}
inline Sign& operator*=(Sign& a, Sign b) { return a = a * b; }
inline int sign_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_of_parity(const Int& e) {
  return (e % 2) != 0 ? Sign::minus : Sign::plus;
}

/// Deterministic Miller-Rabin, valid for all n < 2^64.
/// Larger candidates are rejected with a domain error.
bool is_prime(const Int& n);

/// The real place or a finite place indexed by a prime.
struct Place {
  bool infinite;
  Int prime;  // meaningful only when !infinite

  static Place infinity() { return Place{true, 0}; }
  static Place finite(const Int& p);

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite == b.infinite && (a.infinite || a.prime == b.prime);
  }
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return a.infinite;  // infinity sorts first
    return a.prime < b.prime;
  }
  std::string str() const;
};

/// Signed prime factorization: sign * prod p^e. Denominator primes carry
/// negative exponents.
struct Factorization {
  Sign sign = Sign::plus;
  std::map<Int, long> exponents;

  Rational reassemble() const;
};

Factorization factor(const Rational& x);

/// x = p^v * u with u a p-adic unit (numerator and denominator coprime to p).
struct VpDecomposition {
  long valuation;
  Rational unit;
};
VpDecomposition vp_decompose(const Rational& x, const Int& p);

long vp(const Rational& x, const Int& p);

/// {inf, 2} together with every prime appearing in a or b; a superset of
/// the places where (a,b)_v can be -1. Infinity first, primes ascending.
std::vector<Place> support(const Rational& a, const Rational& b);

// Modular helpers shared across modules.
Int mod_pow(Int base, Int exp, const Int& mod);
Int mod_inverse(const Int& a, const Int& mod);
/// Reduce a p-adic unit into F_p: numerator times inverse denominator.
Int reduce_unit_mod(const Rational& a, const Int& p);
/// Parity of an element of Z_(2) (odd-denominator rational), as 0 or 1.
int parity_z2(const Rational& r);

std::vector<Int> primes_below(long bound);

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& x);

}  // namespace recip
