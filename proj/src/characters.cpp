#include "characters.hpp"

namespace recip {

namespace {

void require_odd_prime(const Int& p) {
  if (p == 2) throw std::domain_error("p must be an odd prime");
  if (!is_prime(p)) throw std::domain_error("not a prime: " + p.str());
}

void require_dyadic_unit(const Rational& a) {
  if (a == 0 || numerator(a) % 2 == 0 || denominator(a) % 2 == 0)
    throw std::domain_error("not a 2-adic unit: " + format_rational(a));
}

}  // namespace

Sign legendre(const Rational& a, const Int& p) {
  require_odd_prime(p);
  if (a == 0 || vp(a, p) != 0) throw std::domain_error("not a p-adic unit");
  Int r = reduce_unit_mod(a, p);
  Int e = mod_pow(r, (p - 1) / 2, p);
  if (e == 1) return Sign::plus;
  if (e == p - 1) return Sign::minus;
  throw std::runtime_error("Euler criterion produced a non-sign value");
}

Sign lambda4(const Rational& a) {
  require_dyadic_unit(a);
  // (a-1)/2 lies in Z_(2); only the parity of its numerator matters.
  return parity_z2((a - 1) / 2) ? Sign::minus : Sign::plus;
}

Sign lambda8(const Rational& a) {
  require_dyadic_unit(a);
  return parity_z2((a * a - 1) / 8) ? Sign::minus : Sign::plus;
}

Sign lambda48(const Rational& a) { return lambda4(a) * lambda8(a); }

Sign legendre_via_reciprocity(const Rational& a, const Int& p) {
  require_odd_prime(p);
  if (a == 0 || vp(a, p) != 0) throw std::domain_error("not a p-adic unit");
  Factorization f = factor(a);
  Sign result = Sign::plus;
  if (f.sign == Sign::minus) result *= lambda4(Rational(p));
  for (const auto& [q, e] : f.exponents) {
    if (e % 2 == 0) continue;
    if (q == 2) {
      result *= lambda8(Rational(p));
      continue;
    }
    // lambda_p(q) = lambda_q(lambda_4(p) p); reduce the argument into
    // (-q/2, q/2) so the recursion's moduli strictly decrease.
    Int c = (lambda4(Rational(p)) == Sign::plus ? p : -p) % q;
    if (c < 0) c += q;
    if (c > q / 2) c -= q;
    result *= legendre_via_reciprocity(Rational(c), q);
  }
  return result;
}

}  // namespace recip
