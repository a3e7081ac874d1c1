#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace recip {

/// One local symbol evaluation; t_value is present only at finite places.
struct LocalSymbolReport {
  Place place;
  Sign symbol;
  std::optional<Rational> t_value;
};

/// Per-place table over support(a,b) plus the global product.
struct ProductReport {
  std::vector<LocalSymbolReport> entries;
  Sign product;
};

/// (a,b)_inf: -1 iff both arguments are negative.
Sign real_symbol(const Rational& a, const Rational& b);

/// t_{a,b} = (-1)^{v(a)v(b)} u_a^{v(b)} u_b^{-v(a)}, a unit of Z_(p).
Rational t_value(const Rational& a, const Rational& b, const Int& p);

Sign symbol_at(const Rational& a, const Rational& b, const Place& v);

ProductReport product_check(const Rational& a, const Rational& b);

/// Rousseau's device: the product of all elements of
/// (F_p^x x F_q^x)/{+-1} taken over the representatives x in [1,(pq-1)/2]
/// coprime to pq, reduced componentwise. Extracting the two Legendre values
/// from the componentwise products gives lhs; rhs is the parity closed form.
std::pair<Sign, Sign> rousseau_check(const Int& p, const Int& q);

}  // namespace recip
