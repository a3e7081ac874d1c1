#include "residue.hpp"

#include <algorithm>
#include <set>

namespace recip {

namespace {

void require_same_ring(const QuadInt& x, const QuadInt& y) {
  if (x.ring != y.ring) throw std::domain_error("mixed rings");
}

// Rounded quotient of integers, nearest integer (ties toward +inf).
Int round_div(const Int& u, const Int& n) {
  Int num = 2 * u + n;
  Int den = 2 * n;
  Int q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;  // floor
  return q;
}

}  // namespace

QuadInt QuadInt::conj() const {
  if (ring == Ring::gaussian) return {ring, a, -b};
  return {ring, a - b, -b};  // conj(w) = w^2 = -1 - w
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  return {x.ring, x.a + y.a, x.b + y.b};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  return {x.ring, x.a - y.a, x.b - y.b};
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  if (x.ring == Ring::gaussian)
    return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  return {x.ring, x.a * y.a - x.b * y.b,
          x.a * y.b + x.b * y.a - x.b * y.b};
}

std::string QuadInt::str() const {
  const char* sym = ring == Ring::gaussian ? "i" : "w";
  if (b == 0) return a.str();
  std::string bs = b == 1 ? "" : b == -1 ? "-" : b.str();
  if (a == 0) return bs + sym;
  return a.str() + (b > 0 ? "+" : "") + bs + sym;
}

Int qnorm(const QuadInt& z) {
  if (z.ring == Ring::gaussian) return z.a * z.a + z.b * z.b;
  return z.a * z.a - z.a * z.b + z.b * z.b;
}

std::pair<QuadInt, QuadInt> qdivmod(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero");
  QuadInt t = x * y.conj();
  Int n = qnorm(y);
  QuadInt q{x.ring, round_div(t.a, n), round_div(t.b, n)};
  return {q, x - q * y};
}

QuadInt qmod(const QuadInt& x, const QuadInt& y) { return qdivmod(x, y).second; }

bool divides(const QuadInt& d, const QuadInt& x) {
  return qmod(x, d).is_zero();
}

QuadInt qgcd(QuadInt x, QuadInt y) {
  while (!y.is_zero()) {
    QuadInt r = qmod(x, y);
    x = y;
    y = r;
  }
  return x;
}

std::vector<QuadInt> units(Ring ring) {
  if (ring == Ring::gaussian)
    return {{ring, 1, 0}, {ring, 0, 1}, {ring, -1, 0}, {ring, 0, -1}};
  return {{ring, 1, 0},  {ring, 0, 1},  {ring, -1, -1},
          {ring, -1, 0}, {ring, 0, -1}, {ring, 1, 1}};
}

bool is_unit(const QuadInt& z) { return qnorm(z) == 1; }

bool associates(const QuadInt& x, const QuadInt& y) {
  return qnorm(x) == qnorm(y) && !y.is_zero() && divides(y, x);
}

bool is_prime_element(const QuadInt& z) {
  Int n = qnorm(z);
  if (n <= 1) return false;
  if (is_prime(n)) return true;
  // Inert rational primes: norm q^2 with the defining polynomial
  // irreducible mod q.
  Int q = boost::multiprecision::sqrt(n);
  if (q * q != n || !is_prime(q)) return false;
  bool inert = z.ring == Ring::gaussian ? q % 4 == 3 : q % 3 == 2;
  return inert && associates(z, QuadInt{z.ring, q, 0});
}

QuadInt ramified_prime(Ring ring) {
  if (ring == Ring::gaussian) return {ring, 1, 1};
  return {ring, 1, -1};
}

Ring ring_for_degree(int m) {
  if (m == 3) return Ring::eisenstein;
  if (m == 4) return Ring::gaussian;
  throw std::domain_error("power residue degree must be 3 or 4");
}

bool is_primary(const QuadInt& z, int m) {
  if (z.ring != ring_for_degree(m))
    throw std::domain_error("ring does not match residue degree");
  if (m == 3) {
    auto mod3 = [](const Int& v) { return ((v % 3) + 3) % 3; };
    return mod3(z.a) == 2 && mod3(z.b) == 0;
  }
  QuadInt ram_cubed{Ring::gaussian, 2, 2};  // (1+i)^3 = 2i(1+i) = -2+2i up to units
  return divides(ram_cubed, z - QuadInt{Ring::gaussian, 1, 0});
}

QuadInt primary_associate(const QuadInt& pi, int m) {
  if (pi.ring != ring_for_degree(m))
    throw std::domain_error("ring does not match residue degree");
  if (!is_prime_element(pi))
    throw std::domain_error("not a prime element: " + pi.str());
  Int ram_norm = pi.ring == Ring::gaussian ? 2 : 3;
  if (qnorm(pi) % ram_norm == 0)
    throw std::domain_error("ramified prime has no primary associate");
  for (const QuadInt& u : units(pi.ring)) {
    QuadInt candidate = u * pi;
    if (is_primary(candidate, m)) return candidate;
  }
  throw std::runtime_error("no primary associate found for " + pi.str());
}

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
  if (x.m != y.m) throw std::domain_error("mixed root-of-unity orders");
  return {x.m, (x.k + y.k) % x.m};
}

QuadInt RootOfUnity::value() const {
  Ring ring = ring_for_degree(m);
  QuadInt z{ring, 1, 0};
  QuadInt gen{ring, 0, 1};
  for (int j = 0; j < k; ++j) z = z * gen;
  return z;
}

std::string RootOfUnity::str() const {
  if (k == 0) return "1";
  if (m == 4) return k == 1 ? "i" : k == 2 ? "-1" : "-i";
  return "w^" + std::to_string(k);
}

namespace {

QuadInt qpow_mod(QuadInt base, Int e, const QuadInt& mod) {
  QuadInt result{base.ring, 1, 0};
  base = qmod(base, mod);
  while (e > 0) {
    if (e % 2 == 1) result = qmod(result * base, mod);
    base = qmod(base * base, mod);
    e /= 2;
  }
  return result;
}

}  // namespace

RootOfUnity residue_symbol(const QuadInt& alpha, const QuadInt& pi, int m) {
  Ring ring = ring_for_degree(m);
  if (pi.ring != ring || alpha.ring != ring)
    throw std::domain_error("ring does not match residue degree");
  if (!is_prime_element(pi))
    throw std::domain_error("modulus is not a prime element: " + pi.str());
  Int ram_norm = ring == Ring::gaussian ? 2 : 3;
  if (qnorm(pi) % ram_norm == 0)
    throw std::domain_error("residue symbol undefined at the ramified prime");
  if (divides(pi, alpha))
    throw std::domain_error("not coprime: " + alpha.str() + " mod " +
                            pi.str());
  Int e = qnorm(pi) - 1;
  if (e % m != 0)
    throw std::runtime_error("residue field order not 1 mod m");
  QuadInt power = qpow_mod(alpha, e / m, pi);
  for (int k = 0; k < m; ++k) {
    if (divides(pi, power - RootOfUnity{m, k}.value())) return {m, k};
  }
  throw std::runtime_error("power residue value is not a root of unity");
}

std::pair<RootOfUnity, RootOfUnity> reciprocity_check(const QuadInt& pi,
                                                      const QuadInt& theta,
                                                      int m) {
  if (!is_primary(pi, m) || !is_primary(theta, m))
    throw std::domain_error("reciprocity_check requires primary primes");
  if (associates(pi, theta))
    throw std::domain_error("reciprocity_check requires non-associate primes");
  RootOfUnity lhs = residue_symbol(pi, theta, m);
  RootOfUnity rhs = residue_symbol(theta, pi, m);
  if (m == 4) {
    Int e = ((qnorm(pi) - 1) / 4) * ((qnorm(theta) - 1) / 4);
    if (e % 2 != 0) rhs = rhs * RootOfUnity{4, 2};  // times -1
  }
  return {lhs, rhs};
}

std::vector<QuadInt> primary_primes_below(Ring ring, long norm_bound) {
  Int ram_norm = ring == Ring::gaussian ? 2 : 3;
  std::set<std::pair<Int, Int>> seen;
  std::vector<QuadInt> out;
  long reach = 1;
  while (reach * reach < 2 * norm_bound) ++reach;
  int m = ring == Ring::gaussian ? 4 : 3;
  for (long a = -reach; a <= reach; ++a) {
    for (long b = -reach; b <= reach; ++b) {
      QuadInt z{ring, a, b};
      Int n = qnorm(z);
      if (n <= 1 || n >= norm_bound || n % ram_norm == 0) continue;
      if (!is_prime_element(z)) continue;
      QuadInt primary = primary_associate(z, m);
      if (seen.insert({primary.a, primary.b}).second) out.push_back(primary);
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) {
    Int nx = qnorm(x), ny = qnorm(y);
    return std::tie(nx, x.a, x.b) < std::tie(ny, y.a, y.b);
  });
  return out;
}

QuadInt parse_quadint(const std::string& text, Ring default_ring) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty quadratic-integer literal");

  Ring ring = default_ring;
  bool has_imag = false;
  char last = s.back();
  if (last == 'i' || last == 'w') {
    ring = last == 'i' ? Ring::gaussian : Ring::eisenstein;
    has_imag = true;
    s.pop_back();
  }
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    try {
      return part[0] == '+' ? Int(part.substr(1)) : Int(part);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("bad literal: " + text);
    }
  };
  if (!has_imag) return {ring, parse_int(s), 0};
  // Split `a+b` / `a-b` at the last top-level sign; bare `b` means a = 0.
  size_t split = std::string::npos;
  for (size_t j = 1; j < s.size(); ++j)
    if (s[j] == '+' || s[j] == '-') split = j;
  if (split == std::string::npos) return {ring, 0, parse_int(s)};
  return {ring, parse_int(s.substr(0, split)), parse_int(s.substr(split))};
}

}  // namespace recip
