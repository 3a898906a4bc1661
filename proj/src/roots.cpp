#include "qes/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qes {

namespace mp = boost::multiprecision;

namespace {

int sign_variations(const std::vector<RationalPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

BigInt floor_of(const Rational& r) {
  BigInt q = mp::numerator(r) / mp::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

// Cauchy bound: every root has |x| < 1 + max |a_k / a_n|.
Rational root_bound(const RationalPoly& f) {
  Rational bound(0);
  const Rational& lead = f.leading();
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = f.coeff(k) / lead;
    if (r < 0) r = -r;
    bound = std::max(bound, r);
  }
  return bound + 1;
}

struct Interval {
  Rational lo;  // open end
  Rational hi;  // closed end
};

void isolate_factor(const RationalPoly& f, int multiplicity, const Rational& max_width, std::vector<RealRoot>& out) {
  const auto sturm = sturm_sequence(f);
  // a rational root p/q of the primitive integer form has q | lead
  BigInt lead = f.primitive_integer_coeffs().back();
  Rational rational_width = Rational(1) / Rational(lead * lead + 1);
  Rational target = std::min(max_width, rational_width);

  std::vector<Interval> pending{{Rational(0), root_bound(f)}};
  std::vector<Interval> isolated;
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    int count = count_roots(sturm, iv.lo, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    pending.push_back({iv.lo, mid});
    pending.push_back({mid, iv.hi});
  }

  for (auto& iv : isolated) {
    RealRoot root;
    root.multiplicity = multiplicity;
    root.factor = f;
    if (f.sign_at(iv.hi) == 0) {
      root.exact = true;
      root.lower = root.upper = iv.hi;
      out.push_back(std::move(root));
      continue;
    }
    // sign bisection; the root is strictly inside (lo, hi)
    int sign_hi = f.sign_at(iv.hi);
    bool found_exact = false;
    while (iv.hi - iv.lo >= target) {
      Rational mid = (iv.lo + iv.hi) / 2;
      int s = f.sign_at(mid);
      if (s == 0) {
        iv.lo = iv.hi = mid;
        found_exact = true;
        break;
      }
      if (s == sign_hi) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    if (!found_exact && iv.lo > 0) {
      Rational candidate = simplest_rational_between(iv.lo, iv.hi);
      if (f.sign_at(candidate) == 0) {
        iv.lo = iv.hi = candidate;
        found_exact = true;
      }
    }
    root.exact = found_exact;
    root.lower = iv.lo;
    root.upper = iv.hi;
    if (found_exact) root.factor = RationalPoly(std::vector<Rational>{Rational(-iv.lo), Rational(1)});
    out.push_back(std::move(root));
  }
}

}  // namespace

double RealRoot::value() const { return to_double(midpoint()); }

std::string RealRoot::to_string(int digits) const {
  if (exact) return qes::to_string(lower);
  return to_decimal(midpoint(), digits);
}

Rational default_root_width() { return Rational(1) / Rational(mp::pow(BigInt(10), 30)); }

std::vector<RationalPoly> sturm_sequence(const RationalPoly& f) {
  std::vector<RationalPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    RationalPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int count_roots(const std::vector<RationalPoly>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo > 0) || lo > hi) throw std::invalid_argument("simplest rational needs 0 < lo <= hi");
  BigInt fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational frac_lo = lo - Rational(fl);
  Rational frac_hi = hi - Rational(fl);
  return Rational(fl) + 1 / simplest_rational_between(1 / frac_hi, 1 / frac_lo);
}

std::vector<RealRoot> isolate_positive_roots(const RationalPoly& p, const Rational& max_width) {
  if (p.is_zero()) throw std::logic_error("cannot isolate roots of the zero polynomial");
  std::vector<RealRoot> roots;
  auto factors = squarefree_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    isolate_factor(factors[k], static_cast<int>(k) + 1, max_width, roots);
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.upper < b.upper; });
  return roots;
}

}  // namespace qes
