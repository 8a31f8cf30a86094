#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "confspace/rational.hpp"

namespace confspace {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k (zero past the degree).
  Rational operator[](std::size_t k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& t) const;
  Polynomial derivative() const;
  /// Multiplies by t^k.
  Polynomial shifted(std::size_t k) const;
  /// Keeps terms of degree <= k.
  Polynomial truncated(std::size_t k) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "1 - 5t + 7t^2 - t^3"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& t);

/// Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// p / gcd(p, p'), made monic. Zero stays zero.
Polynomial squarefree_part(const Polynomial& p);

/// Truncated power series c_0 + c_1 t + ... + c_N t^N.
struct Series {
  std::vector<Rational> coefficients;

  std::size_t order() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool nonnegative() const;
  friend bool operator==(const Series&, const Series&) = default;
};

/// s with p * s == 1 mod t^(order + 1). Throws ZeroConstantTerm if p(0) == 0.
Series series_inverse(const Polynomial& p, std::size_t order);

/// Closed rational interval, used for enclosures.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return Rational(hi - lo); }
};

/// Enclosure of { p(t) : t in range } by interval Horner evaluation.
Interval evaluate_enclosure(const Polynomial& p, const Interval& range);

}  // namespace confspace
