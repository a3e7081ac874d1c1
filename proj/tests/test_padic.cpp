#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hilbert.hpp"
#include "padic.hpp"

using namespace recip;

TEST_CASE("from_rational examples") {
  PadicApprox x = PadicApprox::from_rational(12, 2, 4);
  CHECK(x.valuation() == 2);
  CHECK(x.mantissa() == 3);

  PadicApprox y = PadicApprox::from_rational(Rational(1, 3), 2, 4);
  CHECK(y.valuation() == 0);
  CHECK(y.mantissa() == 11);  // 3 * 11 = 33 = 1 mod 16

  CHECK(PadicApprox::from_rational(0, 5, 6).is_zero());
  CHECK_THROWS_AS(PadicApprox::from_rational(0, 5, 6).valuation(),
                  std::domain_error);
}

TEST_CASE("componentwise arithmetic examples") {
  auto at = [](const Rational& r, const Int& p) {
    return PadicApprox::from_rational(r, p, 20);
  };
  for (Int p : {2, 3, 7}) {
    CHECK(agree(mul(at(2, p), at(3, p)), at(6, p)));
    CHECK(agree(add(at(Rational(1, 3), p), at(Rational(2, 3), p)), at(1, p)));
    PadicApprox pi = inv(at(Rational(p), p));
    CHECK(pi.valuation() == -1);
    CHECK(pi.mantissa() == 1);
  }
  CHECK_THROWS_AS(inv(PadicApprox::zero(3, 5)), std::domain_error);
  CHECK_THROWS_AS(add(PadicApprox::from_rational(1, 2, 5),
                      PadicApprox::from_rational(1, 3, 5)),
                  std::domain_error);
}

TEST_CASE("addition tracks lost precision on cancellation") {
  // 1 and 1 + 3^8 agree to 8 digits; their difference is only known to
  // have valuation 8 with 12 remaining digits.
  PadicApprox a = PadicApprox::from_rational(1, 3, 20);
  Int p8 = boost::multiprecision::pow(Int(3), 8);
  PadicApprox b = PadicApprox::from_rational(Rational(p8 + 1), 3, 20);
  PadicApprox d = add(a, neg(b));
  CHECK(d.valuation() == 8);
  CHECK(d.precision() == 12);
}

TEST_CASE("ring morphism compatibility") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> pick(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  for (Int p : {2, 3, 5, 13}) {
    for (int trial = 0; trial < 150; ++trial) {
      long xn = pick(rng), yn = pick(rng);
      if (xn == 0 || yn == 0) continue;
      Rational x(xn, den(rng)), y(yn, den(rng));
      auto X = PadicApprox::from_rational(x, p, 20);
      auto Y = PadicApprox::from_rational(y, p, 20);
      CHECK(agree(mul(X, Y), PadicApprox::from_rational(x * y, p, 20)));
      CHECK(agree(add(X, Y), PadicApprox::from_rational(x + y, p, 20)));
    }
  }
}

TEST_CASE("is_square examples") {
  CHECK(is_square(2, 7));
  CHECK(is_square(4, 5));
  CHECK(is_square(4, 2));
  CHECK_FALSE(is_square(-1, 2));
  CHECK_FALSE(is_square(3, 5));
  CHECK_FALSE(is_square(2, 5));  // odd valuation at 5? no: unit; 2 is NR mod 5
  CHECK_FALSE(is_square(5, 5));  // odd valuation
  CHECK_THROWS_AS(is_square(0, 5), std::domain_error);
}

TEST_CASE("hensel_sqrt examples") {
  PadicApprox r = hensel_sqrt(2, 7, 2);
  CHECK(r.valuation() == 0);
  CHECK(r.mantissa() == 10);  // 10^2 = 100 = 2 mod 49

  for (Int p : {2, 3, 7, 11})
    CHECK(agree(hensel_sqrt(1, p, 20), PadicApprox::from_rational(1, p, 20)));

  CHECK_THROWS_AS(hensel_sqrt(3, 5, 10), std::domain_error);
  CHECK_THROWS_AS(hensel_sqrt(5, 5, 10), std::domain_error);  // odd valuation
}

TEST_CASE("hensel_sqrt squares back and matches is_square") {
  for (Int p : {2, 3, 5, 7, 11, 47}) {
    for (long x = -100; x <= 100; ++x) {
      if (x == 0) continue;
      bool lifted = true;
      try {
        PadicApprox r = hensel_sqrt(Rational(x), p, 20);
        CHECK(agree(mul(r, r), PadicApprox::from_rational(Rational(x), p, 20)));
      } catch (const std::domain_error&) {
        lifted = false;
      }
      CHECK(lifted == is_square(Rational(x), p));
    }
  }
}

TEST_CASE("square classes are pairwise inequivalent") {
  for (Int p : {3, 7, 11}) {
    Int u = 1;
    while (is_square(Rational(u), p)) ++u;
    std::vector<Rational> classes{1, Rational(u), Rational(p), Rational(u * p)};
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(is_square(classes[i] / classes[j], p));
  }
  std::vector<Rational> dyadic{1, -1, 2, -2, 5, -5, 10, -10};
  for (size_t i = 0; i < dyadic.size(); ++i)
    for (size_t j = i + 1; j < dyadic.size(); ++j)
      CHECK_FALSE(is_square(dyadic[i] / dyadic[j], 2));
}

TEST_CASE("isotropy oracle examples") {
  for (Int p : {2, 3, 5}) {
    for (Rational b : {Rational(-7), Rational(2), Rational(15)}) {
      IsotropyWitness w = isotropy_oracle(1, b, p);
      CHECK(w.solvable);
      CHECK(w.certified);
      REQUIRE(w.x.has_value());
      CHECK(agree(*w.x, PadicApprox::from_rational(1, p, 20)));
      CHECK(w.y->is_zero());
    }
  }
  IsotropyWitness neg2 = isotropy_oracle(-1, -1, 2);
  CHECK_FALSE(neg2.solvable);
  CHECK(neg2.certified);

  IsotropyWitness two = isotropy_oracle(2, 2, 2);
  CHECK(two.solvable);
  REQUIRE(two.x.has_value());
  // a witness exists with valuation -1 coordinates, e.g. (1/2, 1/2)
  CHECK(two.x->valuation() == -1);
  CHECK(two.y->valuation() == -1);

  CHECK_THROWS_AS(isotropy_oracle(0, 1, 3), std::domain_error);
}

TEST_CASE("oracle agrees with the closed formulas on a small grid") {
  for (Int p : {2, 3, 7}) {
    for (long a = -10; a <= 10; ++a) {
      if (a == 0) continue;
      for (long b = -10; b <= 10; ++b) {
        if (b == 0) continue;
        bool plus =
            symbol_at(Rational(a), Rational(b), Place::finite(p)) == Sign::plus;
        IsotropyWitness w = isotropy_oracle(Rational(a), Rational(b), p);
        CHECK(w.certified);
        CHECK(w.solvable == plus);
      }
    }
  }
}

TEST_CASE("norm_test examples and norm-group stability") {
  for (Int p : {2, 3, 7})
    for (long a : {-3L, 2L, 9L}) CHECK(norm_test(Rational(a), 4, p));
  CHECK_FALSE(norm_test(-1, -1, 2));
  CHECK(norm_test(2, 3, 7));

  // a and a*n lie in the same norm class when n = x^2 - b y^2.
  for (Int p : {3, 5, 7}) {
    Rational b = -1;
    for (long x = 1; x <= 3; ++x)
      for (long y = 0; y <= 3; ++y) {
        Rational n = Rational(x * x) - b * y * y;
        if (n == 0) continue;
        for (long a : {2L, 3L, 10L})
          CHECK(norm_test(Rational(a), b, p) ==
                norm_test(Rational(a) * n, b, p));
      }
  }
}
