#include "qes/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qes {

namespace mp = boost::multiprecision;

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& r) {
  const BigInt& num = mp::numerator(r);
  const BigInt& den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt num = mp::numerator(r) * scale;
  const BigInt& den = mp::denominator(r);
  BigInt q = num / den;
  // floor, not truncation toward zero
  if (num < 0 && q * den != num) q -= 1;
  bool negative = q < 0;
  std::string s = (negative ? BigInt(-q) : q).str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

std::string to_decimal_ceil(const Rational& r, int digits) {
  std::string s = to_decimal(Rational(-r), digits);
  if (s.front() == '-') return s.substr(1);
  if (s.find_first_not_of("0.") == std::string::npos) return s;
  return "-" + s;
}

double to_double(const Rational& r) {
  BigInt num = mp::numerator(r);
  const BigInt& den = mp::denominator(r);
  if (num == 0) return 0.0;
  bool negative = num < 0;
  if (negative) num = -num;
  long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt((num >> -shift) / den);
  double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -v : v;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("cannot convert non-finite double to rational");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 significant bits as an integer
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{BigInt(scaled)};
  if (exponent > 0) return r * Rational(BigInt(1) << exponent);
  if (exponent < 0) return r / Rational(BigInt(1) << -exponent);
  return r;
}

int sign(const Rational& r) { return r.sign(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly operator-(RationalPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {RationalPoly{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= divisor.degree(); ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    // the leading term cancels exactly; drop it even if normalize() would
    rem.coeffs_.back() = 0;
    rem.normalize();
  }
  return {RationalPoly(std::move(quot)), rem};
}

std::vector<BigInt> RationalPoly::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  BigInt lcm_den(1);
  for (const auto& c : coeffs_) {
    const BigInt& d = mp::denominator(c);
    lcm_den = lcm_den / mp::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  BigInt content(0);
  for (const auto& c : coeffs_) {
    BigInt v = mp::numerator(c) * (lcm_den / mp::denominator(c));
    content = mp::gcd(content, v);
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << qes::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
  if (p.degree() < 1) return {};
  // Yun's algorithm
  std::vector<RationalPoly> factors;
  RationalPoly dp = p.derivative();
  RationalPoly g = gcd(p, dp);
  RationalPoly b = p.divmod(g).first;
  RationalPoly c = dp.divmod(g).first;
  RationalPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    RationalPoly a = gcd(b, d);
    factors.push_back(a);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
  return factors;
}

}  // namespace qes
