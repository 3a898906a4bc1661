#pragma once

#include "qes/rational.hpp"

#include <string>
#include <vector>

namespace qes {

/// A real root of an exact polynomial: either an exact rational (lower == upper)
/// or an isolating interval [lower, upper] containing exactly one root of `factor`.
struct RealRoot {
  Rational lower;
  Rational upper;
  bool exact = false;
  int multiplicity = 1;
  /// Monic square-free polynomial having this root as a simple root.
  RationalPoly factor;

  Rational midpoint() const { return exact ? lower : Rational((lower + upper) / 2); }
  Rational width() const { return upper - lower; }
  double value() const;
  /// "p/q" when exact, otherwise a decimal of the midpoint with `digits` fractional digits.
  std::string to_string(int digits = 30) const;
};

/// Default enclosure width for irrational roots: 10^-30.
Rational default_root_width();

/// All real roots in (0, inf), ascending. Rational roots are returned exactly; irrational
/// ones as isolating intervals narrower than `max_width`. Throws std::logic_error if `p` is
/// the zero polynomial.
std::vector<RealRoot> isolate_positive_roots(const RationalPoly& p, const Rational& max_width = default_root_width());

/// Sturm sequence of a square-free polynomial.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& f);

/// Number of distinct roots of the square-free `f` in (a, b], via its Sturm sequence.
int count_roots(const std::vector<RationalPoly>& sturm, const Rational& a, const Rational& b);

/// Rational with the smallest denominator in the closed interval [lo, hi], 0 < lo <= hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace qes
