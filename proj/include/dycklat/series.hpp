#pragma once

// Exact truncated power series in x with polynomial coefficients in y, and
// the closed-form generating functions of the families.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "dycklat/dyck_path.hpp"

namespace dycklat {

using Rational = boost::multiprecision::mpq_rational;

/// Dense polynomial in y with exact rational coefficients, kept trimmed.
class YPolynomial {
 public:
  YPolynomial() = default;
  YPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  static YPolynomial monomial(int exponent, Rational coefficient = 1);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  YPolynomial operator-() const;
  /// Division by a nonzero rational.
  YPolynomial divided_by(const Rational& r) const;

  Rational eval(const Rational& y) const;
  YPolynomial deriv() const;
  /// y -> 1 + y.
  YPolynomial shifted() const;

  /// Sparse "k:c" terms separated by spaces, ascending in k; "0:0" for zero.
  std::string to_string() const;

  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Coefficients of x^0 .. x^(order-1) are exact; higher ones are unknown.
class TruncatedSeries {
 public:
  /// Zero series.
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<YPolynomial> coeffs);

  static TruncatedSeries constant(const YPolynomial& c, int order);
  static TruncatedSeries monomial(int x_exponent, const YPolynomial& c, int order);
  static TruncatedSeries x(int order) { return monomial(1, Rational(1), order); }
  static TruncatedSeries y(int order) { return constant(YPolynomial::monomial(1), order); }

  int order() const noexcept { return order_; }
  /// Throws PrecisionExceeded for n >= order.
  const YPolynomial& coeff(int n) const;
  /// Index of the first nonzero coefficient, or order if none is known.
  int valuation() const noexcept;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Throws NonUnitDenominator unless b's constant term is a nonzero y-free rational.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  TruncatedSeries pow(int k) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_;
  std::vector<YPolynomial> c_;
};

inline constexpr int kDefaultOrder = 30;

/// Branch with constant term +1. Throws BadConstantTerm unless s starts with 1.
TruncatedSeries sqrt(const TruncatedSeries& s);
/// a / b after cancelling x^v, v = valuation(b); a must vanish below x^v
/// (NonUnitDenominator otherwise). The result has order min(orders) - v.
TruncatedSeries divide_shifted(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries deriv_y(const TruncatedSeries& s);
TruncatedSeries eval_y(const TruncatedSeries& s, const Rational& y);
/// y -> 1 + y.
TruncatedSeries subst_y_shift(const TruncatedSeries& s);

/// |F_n^p|: 1 / (1 - x - ... - x^p), or (1 - x) / (1 - 2x) for infinity.
TruncatedSeries gf_family_size(FamilyParam p, int order = kDefaultOrder);
/// Elements by number of upper covers.
TruncatedSeries gf_F(FamilyParam p, int order = kDefaultOrder);
/// Boolean intervals by height.
TruncatedSeries gf_B(FamilyParam p, int order = kDefaultOrder);
/// Number of cover pairs (y-free).
TruncatedSeries gf_coverings(FamilyParam p, int order = kDefaultOrder);
/// Number of meet-irreducible elements (y-free).
TruncatedSeries gf_meet_irreducible(FamilyParam p, int order = kDefaultOrder);
/// floor(n^2 (p-1) / (2p)), or n(n-1)/2 for infinity.
std::int64_t closed_b(int n, FamilyParam p);
/// Linear intervals by height.
TruncatedSeries gf_L(FamilyParam p, int order = kDefaultOrder);
/// All intervals of F^infinity by first-ascent difference.
TruncatedSeries gf_I(int order = kDefaultOrder);
/// All intervals of F^2 by first-ascent difference.
TruncatedSeries gf_J(int order = kDefaultOrder);
/// Closed form of J(x, 1) with its 2x denominator factor cancelled.
TruncatedSeries gf_J_at_one(int order = kDefaultOrder);

/// Coefficient of x^n as an integer polynomial in y (exponent -> value).
/// Throws NonIntegral if any coefficient is fractional or too large.
std::map<int, std::int64_t> integer_coefficients(const TruncatedSeries& s, int n);
/// Value at y = 1 of the coefficient of x^n, checked integral.
std::int64_t integer_total(const TruncatedSeries& s, int n);

}  // namespace dycklat
