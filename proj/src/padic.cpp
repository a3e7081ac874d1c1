#include "padic.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace recip {

namespace {

Int pow_int(const Int& p, long e) {
  return boost::multiprecision::pow(p, static_cast<unsigned>(e));
}

long vp_int(Int n, const Int& p) {
  long v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw std::domain_error("not a prime: " + p.str());
}

}  // namespace

PadicApprox PadicApprox::zero(const Int& p, int precision) {
  require_prime(p);
  if (precision < 1) throw std::domain_error("precision must be positive");
  PadicApprox z;
  z.p_ = p;
  z.prec_ = precision;
  z.zero_ = true;
  return z;
}

PadicApprox PadicApprox::from_parts(const Int& p, long valuation, Int mantissa,
                                    int precision) {
  require_prime(p);
  if (precision < 1) throw std::domain_error("precision must be positive");
  Int mod = pow_int(p, precision);
  mantissa %= mod;
  if (mantissa < 0) mantissa += mod;
  if (mantissa % p == 0)
    throw std::domain_error("mantissa must be a p-adic unit");
  PadicApprox x;
  x.p_ = p;
  x.val_ = valuation;
  x.mant_ = mantissa;
  x.prec_ = precision;
  return x;
}

PadicApprox PadicApprox::from_rational(const Rational& x, const Int& p,
                                       int precision) {
  if (x == 0) return zero(p, precision);
  auto [v, u] = vp_decompose(x, p);
  Int mod = pow_int(p, precision);
  Int num = numerator(u) % mod;
  if (num < 0) num += mod;
  Int mant = (num * mod_inverse(denominator(u), mod)) % mod;
  return from_parts(p, v, mant, precision);
}

long PadicApprox::valuation() const {
  if (zero_) throw std::domain_error("the zero element has no valuation");
  return val_;
}

std::string PadicApprox::str() const {
  std::string pe = p_.str();
  if (zero_) return "O(" + pe + "^" + std::to_string(prec_) + ")";
  std::string tail =
      " + O(" + pe + "^" + std::to_string(val_ + prec_) + ")";
  if (val_ == 0) return mant_.str() + tail;
  return pe + "^" + std::to_string(val_) + " * " + mant_.str() + tail;
}

PadicApprox add(const PadicApprox& x, const PadicApprox& y) {
  if (x.p_ != y.p_) throw std::domain_error("mixed primes in p-adic addition");
  const Int& p = x.p_;
  long abs = std::min(x.abs_precision(), y.abs_precision());
  long base = 0;
  if (!x.zero_) base = x.val_;
  if (!y.zero_) base = x.zero_ ? y.val_ : std::min(base, y.val_);
  if (abs - base <= 0)
    throw std::runtime_error("p-adic precision exhausted in addition");
  long digits = abs - base;
  Int mod = pow_int(p, digits);
  Int sum = 0;
  if (!x.zero_) sum += pow_int(p, x.val_ - base) * x.mant_;
  if (!y.zero_) sum += pow_int(p, y.val_ - base) * y.mant_;
  sum %= mod;
  if (sum < 0) sum += mod;
  if (sum == 0) return PadicApprox::zero(p, static_cast<int>(abs));
  long s = vp_int(sum, p);
  return PadicApprox::from_parts(p, base + s, sum / pow_int(p, s),
                                 static_cast<int>(digits - s));
}

PadicApprox mul(const PadicApprox& x, const PadicApprox& y) {
  if (x.p_ != y.p_)
    throw std::domain_error("mixed primes in p-adic multiplication");
  if (x.zero_ || y.zero_) {
    long abs = x.zero_ ? (y.zero_ ? x.prec_ + y.prec_ : x.prec_ + y.val_)
                       : y.prec_ + x.val_;
    if (abs <= 0)
      throw std::runtime_error("p-adic precision exhausted in multiplication");
    return PadicApprox::zero(x.p_, static_cast<int>(abs));
  }
  int prec = std::min(x.prec_, y.prec_);
  Int mod = pow_int(x.p_, prec);
  return PadicApprox::from_parts(x.p_, x.val_ + y.val_,
                                 (x.mant_ * y.mant_) % mod, prec);
}

PadicApprox inv(const PadicApprox& x) {
  if (x.zero_) throw std::domain_error("cannot invert the zero element");
  Int mod = pow_int(x.p_, x.prec_);
  return PadicApprox::from_parts(x.p_, -x.val_, mod_inverse(x.mant_, mod),
                                 x.prec_);
}

PadicApprox neg(const PadicApprox& x) {
  if (x.zero_) return x;
  Int mod = pow_int(x.p_, x.prec_);
  return PadicApprox::from_parts(x.p_, x.val_, mod - x.mant_, x.prec_);
}

bool agree(const PadicApprox& x, const PadicApprox& y) {
  if (x.p_ != y.p_) return false;
  PadicApprox d = add(x, neg(y));
  if (d.is_zero()) return true;
  // A nonzero difference still agrees if it is beyond the shared precision.
  return d.valuation() >= std::min(x.abs_precision(), y.abs_precision());
}

bool is_square(const Rational& x, const Int& p) {
  require_prime(p);
  if (x == 0) throw std::domain_error("is_square requires nonzero input");
  auto [v, u] = vp_decompose(x, p);
  if (v % 2 != 0) return false;
  if (p == 2) {
    Int num = numerator(u) % 8;
    if (num < 0) num += 8;
    return (num * mod_inverse(denominator(u), Int(8))) % 8 == 1;
  }
  return mod_pow(reduce_unit_mod(u, p), (p - 1) / 2, p) == 1;
}

namespace {

// Tonelli-Shanks square root in F_p, p odd, a a nonzero residue.
Int sqrt_mod_p(const Int& a, const Int& p) {
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  Int q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  long m = s;
  Int c = mod_pow(z, q, p);
  Int t = mod_pow(a, q, p);
  Int r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
    }
    Int b = c;
    for (long j = 0; j < m - i - 1; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

}  // namespace

PadicApprox hensel_sqrt(const Rational& x, const Int& p, int precision) {
  require_prime(p);
  if (precision < 1) throw std::domain_error("precision must be positive");
  if (x == 0) throw std::domain_error("hensel_sqrt requires nonzero input");
  if (!is_square(x, p))
    throw std::domain_error("non-residue: " + format_rational(x) +
                            " is not a square in Q_" + p.str());
  auto [v, unit] = vp_decompose(x, p);
  Int target_mod = pow_int(p, precision);
  Int num = numerator(unit) % target_mod;
  if (num < 0) num += target_mod;
  Int u_full = (num * mod_inverse(denominator(unit), target_mod)) % target_mod;

  Int r;
  if (p == 2) {
    // Roots mod 2^m of a unit congruent to 1 mod 8 are determined mod
    // 2^{m-1}; lift one extra digit so r is pinned mod 2^precision.
    long m = 3;
    r = 1;
    Int u_hi = PadicApprox::from_rational(unit, 2, precision + 2).mantissa();
    while (m <= precision) {
      Int mod_next = pow_int(p, m + 1);
      if ((r * r - u_hi) % mod_next != 0) r += pow_int(p, m - 1);
      ++m;
    }
    r %= target_mod;
  } else {
    r = sqrt_mod_p(reduce_unit_mod(unit, p), p);
    long known = 1;
    Int inv2 = mod_inverse(Int(2), target_mod);
    while (known < precision) {
      known = std::min<long>(2 * known, precision);
      Int mod = pow_int(p, known);
      Int u_m = u_full % mod;
      r = ((r + u_m * mod_inverse(r, mod)) % mod * inv2) % mod;
      r %= mod;
    }
  }
  Int other = target_mod - r;
  Int d0 = r % p, d1 = other % p;
  if (d1 < d0 || (d1 == d0 && other < r)) r = other;
  return PadicApprox::from_parts(p, v / 2, r, precision);
}

namespace {

// A primitive projective solution class of A x^2 + B y^2 = z^2 mod p^k,
// scaled so the first unit coordinate equals 1 (that index is pinned and
// never perturbed when extending to higher k).
struct SearchNode {
  std::array<Int, 3> coords;
  int pinned;
};

struct QuadForm {
  Int a, b, p;

  Int eval(const std::array<Int, 3>& v, const Int& mod) const {
    Int q = (a * v[0] % mod * v[0] % mod + b * v[1] % mod * v[1] % mod -
             v[2] * v[2] % mod) %
            mod;
    if (q < 0) q += mod;
    return q;
  }

  std::array<Int, 3> gradient(const std::array<Int, 3>& v,
                              const Int& mod) const {
    auto red = [&](Int g) {
      g %= mod;
      if (g < 0) g += mod;
      return g;
    };
    return {red(2 * a * v[0]), red(2 * b * v[1]), red(-2 * v[2])};
  }
};

// Square-class representative that is an integer with p-valuation 0 or 1.
// Returns the representative and the rational s with rep = x * s^2.
std::pair<Int, Rational> p_reduced_rep(const Rational& x, const Int& p) {
  auto [v, u] = vp_decompose(x, p);
  long vr = ((v % 2) + 2) % 2;
  Int rep = pow_int(p, vr) * numerator(u) * denominator(u);
  Rational s = Rational(denominator(u));
  long half = (vr - v) / 2;
  if (half >= 0)
    s *= Rational(pow_int(p, half));
  else
    s /= Rational(pow_int(p, -half));
  return {rep, s};
}

struct SearchOutcome {
  bool solvable;
  SearchNode node;   // certified node, when solvable
  long level;        // k with Q = 0 mod p^level
  long grad_val;     // exact valuation t of the gradient at the node
  int grad_coord;    // coordinate achieving t
};

constexpr size_t kFrontierLimit = 1 << 20;

SearchOutcome lifting_search(const QuadForm& form) {
  const Int& p = form.p;
  long k0 = 2 * vp_int(4 * form.a * form.b, p) + 3;
  long kmax = k0 + 8;

  std::vector<SearchNode> frontier;
  for (Int y = 0; y < p; ++y)
    for (Int z = 0; z < p; ++z)
      if (form.eval({1, y, z}, p) == 0) frontier.push_back({{1, y, z}, 0});
  for (Int z = 0; z < p; ++z)
    if (form.eval({0, 1, z}, p) == 0) frontier.push_back({{0, 1, z}, 1});
  if (form.eval({0, 0, 1}, p) == 0) frontier.push_back({{0, 0, 1}, 2});

  long k = 1;
  Int mod = p;
  while (true) {
    for (const SearchNode& node : frontier) {
      auto grad = form.gradient(node.coords, mod);
      long t = k;
      int coord = -1;
      for (int i = 0; i < 3; ++i) {
        if (grad[i] == 0) continue;  // valuation at least k; cannot certify
        long ti = vp_int(grad[i], p);
        if (ti < t) {
          t = ti;
          coord = i;
        }
      }
      if (coord >= 0 && k > 2 * t)
        return {true, node, k, t, coord};
    }
    if (frontier.empty()) return {false, {}, k, 0, -1};
    if (k >= kmax)
      throw std::runtime_error(
          "isotropy oracle: deepening bound exceeded without certificate");
    Int mod_next = mod * p;
    std::vector<SearchNode> next;
    for (const SearchNode& node : frontier) {
      int i = node.pinned == 0 ? 1 : 0;
      int j = node.pinned == 2 ? 1 : 2;
      for (Int di = 0; di < p; ++di) {
        for (Int dj = 0; dj < p; ++dj) {
          SearchNode child = node;
          child.coords[i] += di * mod;
          child.coords[j] += dj * mod;
          if (form.eval(child.coords, mod_next) == 0) next.push_back(child);
        }
      }
      if (next.size() > kFrontierLimit)
        throw std::runtime_error("isotropy oracle: search frontier overflow");
    }
    frontier = std::move(next);
    mod = mod_next;
    ++k;
  }
}

// Newton-lift the certified node one digit at a time up to p^target_digits.
std::array<Int, 3> lift_node(const QuadForm& form, const SearchOutcome& out,
                             long target_digits) {
  std::array<Int, 3> v = out.node.coords;
  long t = out.grad_val;
  int i = out.grad_coord;
  Int mod = pow_int(form.p, out.level);
  for (long m = out.level; m < target_digits; ++m) {
    Int mod_next = mod * form.p;
    Int q = form.eval(v, mod_next);
    if (q != 0) {
      Int qm = (q / mod) % form.p;
      Int g = form.gradient(v, mod_next)[i] / pow_int(form.p, t) % form.p;
      Int delta = (form.p - qm * mod_inverse(g, form.p) % form.p) % form.p;
      v[i] += delta * pow_int(form.p, m - t);
    }
    mod = mod_next;
  }
  return v;
}

PadicApprox coord_to_padic(const Int& value, const Int& p, long digits) {
  Int mod = pow_int(p, digits);
  Int c = value % mod;
  if (c < 0) c += mod;
  if (c == 0)
    throw std::runtime_error("isotropy oracle: degenerate lifted witness");
  long v = vp_int(c, p);
  return PadicApprox::from_parts(p, v, c / pow_int(p, v),
                                 static_cast<int>(digits - v));
}

}  // namespace

IsotropyWitness isotropy_oracle(const Rational& a, const Rational& b,
                                const Int& p, int precision) {
  require_prime(p);
  if (a == 0 || b == 0)
    throw std::domain_error("isotropy oracle requires nonzero coefficients");

  auto [A, sa] = p_reduced_rep(a, p);
  auto [B, sb] = p_reduced_rep(b, p);
  QuadForm form{A, B, p};
  SearchOutcome out = lifting_search(form);
  if (!out.solvable) return {false, true, std::nullopt, std::nullopt};

  IsotropyWitness w{true, false, std::nullopt, std::nullopt};
  if (is_square(a, p)) {
    w.x = hensel_sqrt(Rational(1) / a, p, precision);
    w.y = PadicApprox::zero(p, precision);
  } else if (is_square(b, p)) {
    w.x = PadicApprox::zero(p, precision);
    w.y = hensel_sqrt(Rational(1) / b, p, precision);
  } else if (is_square(-a * b, p)) {
    // -b/a = c^2 turns a x^2 + b y^2 into a (x - c y)(x + c y).
    PadicApprox c = hensel_sqrt(-b / a, p, precision + 6);
    w.x = PadicApprox::from_rational((1 + Rational(1) / a) / 2, p,
                                     precision + 6);
    w.y = mul(PadicApprox::from_rational((Rational(1) / a - 1) / 2, p,
                                         precision + 6),
              inv(c));
  } else {
    // All of a, b, -ab are nonsquares, so every isotropic vector of the
    // lifted form has three nonzero coordinates.
    long digits = precision + 2 * out.grad_val + 8;
    auto v = lift_node(form, out, digits);
    PadicApprox xp = coord_to_padic(v[0], p, digits);
    PadicApprox yp = coord_to_padic(v[1], p, digits);
    PadicApprox zp = coord_to_padic(v[2], p, digits);
    PadicApprox zinv = inv(zp);
    w.x = mul(PadicApprox::from_rational(sa, p, static_cast<int>(digits)),
              mul(xp, zinv));
    w.y = mul(PadicApprox::from_rational(sb, p, static_cast<int>(digits)),
              mul(yp, zinv));
  }

  // a x^2 + b y^2 = 1 must hold to the witness precision.
  PadicApprox lhs =
      add(mul(PadicApprox::from_rational(a, p, precision + 6),
              mul(*w.x, *w.x)),
          mul(PadicApprox::from_rational(b, p, precision + 6),
              mul(*w.y, *w.y)));
  if (!agree(lhs, PadicApprox::from_rational(1, p, precision)))
    throw std::runtime_error("isotropy oracle: witness verification failed");
  w.certified = true;
  return w;
}

bool norm_test(const Rational& a, const Rational& b, const Int& p) {
  require_prime(p);
  if (a == 0 || b == 0)
    throw std::domain_error("norm_test requires nonzero arguments");
  if (is_square(b, p)) return true;  // the extension is trivial
  // a is a norm from Q_p(sqrt b) iff x^2 - b y^2 = a is solvable, i.e.
  // (1/a) x^2 + (-b/a) y^2 = 1 is.
  return isotropy_oracle(Rational(1) / a, -b / a, p).solvable;
}

}  // namespace recip
