#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "characters.hpp"
#include "doctest.h"

using namespace recip;

namespace {

// Independent oracle: the set of nonzero squares in F_p by enumeration.
std::set<Int> squares_mod(const Int& p) {
  std::set<Int> s;
  for (Int x = 1; x < p; ++x) s.insert((x * x) % p);
  return s;
}

}  // namespace

TEST_CASE("legendre matches square enumeration") {
  auto sq7 = squares_mod(7);
  CHECK(sq7 == std::set<Int>{1, 2, 4});
  CHECK(legendre(2, 7) == Sign::plus);
  CHECK(legendre(3, 7) == Sign::minus);
  for (Int p : {3, 5, 7, 11, 13, 31}) {
    auto sq = squares_mod(p);
    CHECK(legendre(1, p) == Sign::plus);
    for (Int a = 1; a < p; ++a)
      CHECK(legendre(Rational(a), p) ==
            (sq.count(a) ? Sign::plus : Sign::minus));
  }
  // 1/5 = 2 mod 3, a non-square.
  CHECK(legendre(Rational(1, 5), 3) == Sign::minus);
}

TEST_CASE("legendre domain errors") {
  CHECK_THROWS_AS(legendre(6, 3), std::domain_error);
  CHECK_THROWS_AS(legendre(Rational(1, 3), 3), std::domain_error);
  CHECK_THROWS_AS(legendre(3, 2), std::domain_error);
  CHECK_THROWS_AS(legendre(0, 7), std::domain_error);
}

TEST_CASE("dyadic characters on known values") {
  CHECK(lambda4(-1) == Sign::minus);
  CHECK(lambda4(1) == Sign::plus);
  CHECK(lambda4(Rational(1, 3)) == Sign::minus);
  CHECK(lambda8(-1) == Sign::plus);
  CHECK(lambda8(7) == Sign::plus);
  CHECK(lambda8(3) == Sign::minus);
  CHECK(lambda48(-1) == Sign::minus);
  CHECK(lambda48(1) == Sign::plus);
  CHECK(lambda48(3) == Sign::plus);
  CHECK_THROWS_AS(lambda4(2), std::domain_error);
  CHECK_THROWS_AS(lambda8(Rational(1, 2)), std::domain_error);
}

TEST_CASE("characters depend only on the residue mod 8") {
  for (long a = -999; a <= 999; a += 2) {
    long r = ((a % 8) + 8) % 8;
    CHECK(lambda4(Rational(a)) == lambda4(Rational(r)));
    CHECK(lambda8(Rational(a)) == lambda8(Rational(r)));
  }
}

TEST_CASE("multiplicativity") {
  for (long a = -15; a <= 15; a += 2)
    for (long b = -15; b <= 15; b += 2) {
      CHECK(lambda4(Rational(a) * b) == lambda4(Rational(a)) * lambda4(Rational(b)));
      CHECK(lambda8(Rational(a) * b) == lambda8(Rational(a)) * lambda8(Rational(b)));
    }
  for (Int p : {5, 13}) {
    for (Int a = 1; a < p; ++a)
      for (Int b = 1; b < p; ++b)
        CHECK(legendre(Rational(a * b), p) ==
              legendre(Rational(a), p) * legendre(Rational(b), p));
  }
}

TEST_CASE("Euler congruence") {
  for (Int p : {3, 7, 11, 23}) {
    for (Int a = 1; a < p; ++a) {
      Int e = mod_pow(a, (p - 1) / 2, p);
      Int s = legendre(Rational(a), p) == Sign::plus ? Int(1) : p - 1;
      CHECK(e == s);
    }
  }
}

TEST_CASE("reciprocity descent agrees with Euler everywhere") {
  CHECK(legendre_via_reciprocity(2, 7) == Sign::plus);
  CHECK(legendre_via_reciprocity(3, 7) == Sign::minus);
  for (const Int& p : primes_below(200)) {
    if (p == 2) continue;
    CHECK(legendre_via_reciprocity(1, p) == Sign::plus);
    for (long a = -1000; a <= 1000; a += 2) {
      if (Int(a) % p == 0) continue;
      CHECK(legendre_via_reciprocity(Rational(a), p) ==
            legendre(Rational(a), p));
    }
  }
}

TEST_CASE("surjectivity: every odd prime has a non-residue") {
  for (const Int& p : primes_below(200)) {
    if (p == 2) continue;
    bool found = false;
    for (Int a = 1; a < p && !found; ++a)
      found = legendre(Rational(a), p) == Sign::minus;
    CHECK(found);
  }
}
