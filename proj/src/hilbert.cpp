#include "hilbert.hpp"

#include "characters.hpp"

namespace recip {

namespace {

void require_nonzero(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0)
    throw std::domain_error("Hilbert symbol arguments must be nonzero");
}

Rational rational_pow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (long i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

}  // namespace

Sign real_symbol(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  return (a < 0 && b < 0) ? Sign::minus : Sign::plus;
}

Rational t_value(const Rational& a, const Rational& b, const Int& p) {
  require_nonzero(a, b);
  auto [va, ua] = vp_decompose(a, p);
  auto [vb, ub] = vp_decompose(b, p);
  Rational t = rational_pow(ua, vb) * rational_pow(ub, -va);
  if ((va * vb) % 2 != 0) t = -t;
  return t;
}

Sign symbol_at(const Rational& a, const Rational& b, const Place& v) {
  require_nonzero(a, b);
  if (v.infinite) return real_symbol(a, b);
  Rational t = t_value(a, b, v.prime);
  if (v.prime != 2) return legendre(t, v.prime);
  Rational ua = vp_decompose(a, 2).unit;
  Rational ub = vp_decompose(b, 2).unit;
  int e = parity_z2((ua - 1) / 2) * parity_z2((ub - 1) / 2);
  return (e ? Sign::minus : Sign::plus) * lambda8(t);
}

ProductReport product_check(const Rational& a, const Rational& b) {
  ProductReport report;
  report.product = Sign::plus;
  for (const Place& v : support(a, b)) {
    LocalSymbolReport entry{v, symbol_at(a, b, v), std::nullopt};
    if (!v.infinite) entry.t_value = t_value(a, b, v.prime);
    report.product *= entry.symbol;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

// The componentwise product is congruent to (-1)^{(q-1)/2} lambda_p(q)
// mod p; solve for the sign.
Sign extract_sign(const Int& brute_product, const Int& p, const Int& q) {
  Int expect = ((q - 1) / 2) % 2 != 0 ? Int(-1) : Int(1);
  Int value = (brute_product * expect) % p;
  if (value < 0) value += p;
  if (value == 1) return Sign::plus;
  if (value == p - 1) return Sign::minus;
  throw std::runtime_error("Rousseau component product is not a sign");
}

}  // namespace

std::pair<Sign, Sign> rousseau_check(const Int& p, const Int& q) {
  if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
    throw std::domain_error("rousseau_check requires distinct odd primes");
  Int pq = p * q;
  Int prod_p = 1, prod_q = 1;
  for (Int x = 1; x <= (pq - 1) / 2; ++x) {
    if (x % p == 0 || x % q == 0) continue;
    prod_p = (prod_p * x) % p;
    prod_q = (prod_q * x) % q;
  }
  Sign lhs = extract_sign(prod_p, p, q) * extract_sign(prod_q, q, p);
  Sign rhs = sign_of_parity(((p - 1) / 2) * ((q - 1) / 2));
  return {lhs, rhs};
}

}  // namespace recip
