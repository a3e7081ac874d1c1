#include "arith.hpp"

#include <algorithm>
#include <set>

namespace recip {

namespace {

const Int kMagnitudeLimit = Int(1) << 63;

// Witnesses sufficient for determinism below 2^64 (Sorenson-Webster set).
constexpr unsigned long long kMillerRabinBases[] = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};

bool miller_rabin_round(const Int& n, const Int& d, int r, const Int& a) {
  Int x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n >= (Int(1) << 64))
    throw std::domain_error("primality test limited to inputs below 2^64");
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (auto base : kMillerRabinBases)
    if (!miller_rabin_round(n, d, r, Int(base))) return false;
  return true;
}

Place Place::finite(const Int& p) {
  if (!is_prime(p)) throw std::domain_error("not a prime: " + p.str());
  return Place{false, p};
}

std::string Place::str() const { return infinite ? "inf" : prime.str(); }

Rational Factorization::reassemble() const {
  Rational x = sign == Sign::plus ? 1 : -1;
  for (const auto& [p, e] : exponents) {
    Int pe = boost::multiprecision::pow(p, static_cast<unsigned>(std::abs(e)));
    if (e > 0)
      x *= Rational(pe);
    else
      x /= Rational(pe);
  }
  return x;
}

namespace {

// Trial division with a Miller-Rabin early exit once the cofactor is prime.
void factor_natural(Int n, int exponent_sign, std::map<Int, long>& out) {
  if (n > kMagnitudeLimit)
    throw std::domain_error("factorization limited to inputs of magnitude <= 2^63");
  while (n % 2 == 0) {
    out[2] += exponent_sign;
    n /= 2;
  }
  Int d = 3;
  while (n > 1) {
    if (is_prime(n)) {
      out[n] += exponent_sign;
      return;
    }
    while (d * d <= n && n % d != 0) d += 2;
    while (n % d == 0) {
      out[d] += exponent_sign;
      n /= d;
    }
  }
}

}  // namespace

Factorization factor(const Rational& x) {
  if (x == 0) throw std::domain_error("cannot factor zero");
  Factorization f;
  f.sign = x > 0 ? Sign::plus : Sign::minus;
  factor_natural(boost::multiprecision::abs(numerator(x)), +1, f.exponents);
  factor_natural(denominator(x), -1, f.exponents);
  std::erase_if(f.exponents, [](const auto& kv) { return kv.second == 0; });
  return f;
}

VpDecomposition vp_decompose(const Rational& x, const Int& p) {
  if (x == 0) throw std::domain_error("vp_decompose requires nonzero input");
  if (!is_prime(p)) throw std::domain_error("not a prime: " + p.str());
  long v = 0;
  Int num = numerator(x), den = denominator(x);
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return {v, Rational(num, den)};
}

long vp(const Rational& x, const Int& p) { return vp_decompose(x, p).valuation; }

std::vector<Place> support(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("support requires nonzero arguments");
  std::set<Int> primes{2};
  for (const Rational* x : {&a, &b})
    for (const auto& [p, e] : factor(*x).exponents) primes.insert(p);
  std::vector<Place> places{Place::infinity()};
  for (const auto& p : primes) places.push_back(Place{false, p});
  return places;
}

Int mod_pow(Int base, Int exp, const Int& mod) {
  base %= mod;
  if (base < 0) base += mod;
  Int result = 1;
  while (exp > 0) {
    if (exp % 2 == 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp /= 2;
  }
  return result;
}

Int mod_inverse(const Int& a, const Int& mod) {
  Int old_r = a % mod, r = mod;
  if (old_r < 0) old_r += mod;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("not invertible mod " + mod.str());
  old_s %= mod;
  if (old_s < 0) old_s += mod;
  return old_s;
}

Int reduce_unit_mod(const Rational& a, const Int& p) {
  if (a == 0 || vp(a, p) != 0) throw std::domain_error("not a p-adic unit");
  Int num = numerator(a) % p;
  if (num < 0) num += p;
  return (num * mod_inverse(denominator(a), p)) % p;
}

int parity_z2(const Rational& r) {
  if (denominator(r) % 2 == 0)
    throw std::domain_error("not an element of Z_(2)");
  return static_cast<int>(numerator(r) % 2 != 0);
}

std::vector<Int> primes_below(long bound) {
  std::vector<Int> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound), false);
  for (long i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (long j = 2 * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace recip
