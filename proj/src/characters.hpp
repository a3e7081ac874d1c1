#pragma once

#include "arith.hpp"

namespace recip {

/// Legendre character of F_p^x pulled back to the units of Z_(p),
/// evaluated by Euler's criterion. Requires odd p and v_p(a) = 0.
Sign legendre(const Rational& a, const Int& p);

/// The two nontrivial characters of (Z/8Z)^x pulled back to units of Z_(2)
/// via the closed exponent formulas, and their product.
Sign lambda4(const Rational& a);
Sign lambda8(const Rational& a);
Sign lambda48(const Rational& a);

/// Recomputes legendre(a, p) using only multiplicativity and the three
/// reciprocity rules, recursing on strictly smaller moduli.
Sign legendre_via_reciprocity(const Rational& a, const Int& p);

}  // namespace recip
