#include "confspace/polynomial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "confspace/error.hpp"

namespace confspace {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::Internal, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(k, Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::truncated(std::size_t k) const {
  std::vector<Rational> out(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), k + 1));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << confspace::to_string(mag);
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial derivative(const Polynomial& p) { return p.derivative(); }
Rational evaluate(const Polynomial& p, const Rational& t) { return p.evaluate(t); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {Polynomial(), dividend};
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lc = d.back();
  for (std::size_t k = rem.size(); k-- >= dn;) {
    const Rational factor = rem[k] / lc;
    quot[k - dn + 1] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k - dn + 1 + j] -= factor * d[j];
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

bool Series::nonnegative() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c >= 0; });
}

Series series_inverse(const Polynomial& p, std::size_t order) {
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "series inverse needs p(0) != 0");
  const Rational inv0 = 1 / p[0];
  Series s;
  s.coefficients.resize(order + 1);
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < c.size(); ++j) acc -= c[j] * s.coefficients[k - j];
    s.coefficients[k] = acc * inv0;
  }
  return s;
}

namespace {

Interval mul(const Interval& a, const Interval& b) {
  const std::array<Rational, 4> products{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(products.begin(), products.end());
  return {*mn, *mx};
}

}  // namespace

Interval evaluate_enclosure(const Polynomial& p, const Interval& range) {
  Interval acc{0, 0};
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, range);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace confspace
