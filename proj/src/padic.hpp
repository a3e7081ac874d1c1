#pragma once

#include <optional>
#include <string>

#include "arith.hpp"

namespace recip {

/// Truncated p-adic number: p^valuation * mantissa with the mantissa a
/// unit known modulo p^precision. The zero element carries only the
/// absolute power of p modulo which it is known to vanish.
class PadicApprox {
 public:
  static PadicApprox from_rational(const Rational& x, const Int& p,
                                   int precision);
  static PadicApprox zero(const Int& p, int precision);
  static PadicApprox from_parts(const Int& p, long valuation, Int mantissa,
                                int precision);

  bool is_zero() const { return zero_; }
  const Int& prime() const { return p_; }
  long valuation() const;
  const Int& mantissa() const { return mant_; }
  int precision() const { return prec_; }
  /// Power of p modulo which the value is pinned down.
  long abs_precision() const { return zero_ ? prec_ : val_ + prec_; }

  std::string str() const;

  friend PadicApprox add(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox mul(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox inv(const PadicApprox& x);
  friend PadicApprox neg(const PadicApprox& x);
  /// Equal up to the shared guaranteed precision.
  friend bool agree(const PadicApprox& x, const PadicApprox& y);

 private:
  PadicApprox() = default;
  Int p_;
  long val_ = 0;
  Int mant_;
  int prec_ = 0;
  bool zero_ = false;
};

/// True iff x lies in Q_p^{x2}: even valuation and the unit part a
/// square mod p (odd p) or congruent to 1 mod 8 (p = 2).
bool is_square(const Rational& x, const Int& p);

/// Square root by Hensel lifting from a mod-p (mod-8 for p=2) seed.
/// Of the two roots, returns the one whose lowest p-adic digit is
/// smallest, breaking ties by mantissa value.
PadicApprox hensel_sqrt(const Rational& x, const Int& p, int precision);

struct IsotropyWitness {
  bool solvable;
  bool certified;
  std::optional<PadicApprox> x, y;  // present iff solvable
};

/// Decides solvability of a x^2 + b y^2 = 1 in Q_p by a lifting search on
/// the homogenized form, independent of the closed symbol formulas.
IsotropyWitness isotropy_oracle(const Rational& a, const Rational& b,
                                const Int& p, int precision = 20);

/// True iff a is a norm from Q_p(sqrt(b)).
bool norm_test(const Rational& a, const Rational& b, const Int& p);

}  // namespace recip
