#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "arith.hpp"
#include "doctest.h"

using namespace recip;

TEST_CASE("factor of small integers") {
  Factorization f = factor(60);
  CHECK(f.sign == Sign::plus);
  CHECK(f.exponents == std::map<Int, long>{{2, 2}, {3, 1}, {5, 1}});

  CHECK(factor(1).exponents.empty());
  CHECK(factor(1).sign == Sign::plus);

  Factorization g = factor(Rational(-5, 6));
  CHECK(g.sign == Sign::minus);
  CHECK(g.exponents == std::map<Int, long>{{2, -1}, {3, -1}, {5, 1}});
  CHECK(g.reassemble() == Rational(-5, 6));
}

TEST_CASE("factor rejects zero and oversized input") {
  CHECK_THROWS_AS(factor(0), std::domain_error);
  Rational huge = Rational(boost::multiprecision::pow(Int(2), 70));
  CHECK_THROWS_AS(factor(huge), std::domain_error);
}

TEST_CASE("vp_decompose examples") {
  auto [v1, u1] = vp_decompose(12, 2);
  CHECK(v1 == 2);
  CHECK(u1 == 3);

  auto [v2, u2] = vp_decompose(Rational(5, 6), 3);
  CHECK(v2 == -1);
  CHECK(u2 == Rational(5, 2));
  CHECK(u2 / 3 == Rational(5, 6));  // 3^{-1} * 5/2 multiplies back

  auto [v3, u3] = vp_decompose(7, 5);
  CHECK(v3 == 0);
  CHECK(u3 == 7);
}

TEST_CASE("support examples") {
  auto places = support(3, 5);
  REQUIRE(places.size() == 4);
  CHECK(places[0].infinite);
  CHECK(places[1].prime == 2);
  CHECK(places[2].prime == 3);
  CHECK(places[3].prime == 5);

  CHECK(support(1, 1).size() == 2);
  CHECK(support(-1, -1).size() == 2);
}

TEST_CASE("factor/reassemble and vp recombination on random rationals") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<long> coef(1, 1000000000L);
  for (int trial = 0; trial < 200; ++trial) {
    long n = coef(rng), d = coef(rng);
    Rational x(n, d);
    if (trial % 2) x = -x;
    CHECK(factor(x).reassemble() == x);
    for (Int p : {2, 3, 7, 101}) {
      auto [v, u] = vp_decompose(x, p);
      CHECK(numerator(u) % p != 0);
      CHECK(denominator(u) % p != 0);
      Rational back = u;
      for (long i = 0; i < std::abs(v); ++i) {
        if (v > 0)
          back *= p;
        else
          back /= p;
      }
      CHECK(back == x);
    }
  }
}

TEST_CASE("odd places off the support have zero valuation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(1, 5000);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a(coef(rng), coef(rng));
    Rational b(coef(rng), coef(rng));
    auto places = support(a, b);
    for (const Int& l : primes_below(60)) {
      if (l == 2) continue;
      bool on = false;
      for (const auto& w : places) on = on || (!w.infinite && w.prime == l);
      if (!on) {
        CHECK(vp(a, l) == 0);
        CHECK(vp(b, l) == 0);
      }
    }
  }
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));      // Carmichael
  CHECK_FALSE(is_prime(3215031751LL));  // strong pseudoprime to 2,3,5,7
  CHECK_THROWS_AS(Place::finite(6), std::domain_error);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("-5/6") == Rational(-5, 6));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(format_rational(Rational(10, 4)) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
