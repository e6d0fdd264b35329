#include "dycklat/series.hpp"

#include <algorithm>
#include <limits>

namespace dycklat {

// ---- YPolynomial ----

YPolynomial::YPolynomial(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

YPolynomial YPolynomial::monomial(int exponent, Rational coefficient) {
  YPolynomial out;
  if (coefficient == 0) return out;
  out.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
  out.c_.back() = std::move(coefficient);
  return out;
}

void YPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational YPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(exponent)];
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

YPolynomial YPolynomial::operator-() const {
  YPolynomial out = *this;
  for (Rational& r : out.c_) r = -r;
  return out;
}

YPolynomial YPolynomial::divided_by(const Rational& r) const {
  YPolynomial out = *this;
  for (Rational& c : out.c_) c /= r;
  return out;
}

Rational YPolynomial::eval(const Rational& y) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

YPolynomial YPolynomial::deriv() const {
  YPolynomial out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.c_.push_back(c_[k] * static_cast<int>(k));
  out.trim();
  return out;
}

YPolynomial YPolynomial::shifted() const {
  // Horner in (1 + y).
  const YPolynomial one_plus_y = YPolynomial(Rational(1)) + monomial(1);
  YPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * one_plus_y + YPolynomial(*it);
  return acc;
}

std::string YPolynomial::to_string() const {
  if (c_.empty()) return "0:0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ':' + c_[k].str();
  }
  return out;
}

// ---- TruncatedSeries ----

TruncatedSeries::TruncatedSeries(int order) : order_(std::max(order, 0)), c_(static_cast<std::size_t>(order_)) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<YPolynomial> coeffs)
    : order_(std::max(order, 0)), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order_));
}

TruncatedSeries TruncatedSeries::constant(const YPolynomial& c, int order) { return monomial(0, c, order); }

TruncatedSeries TruncatedSeries::monomial(int x_exponent, const YPolynomial& c, int order) {
  TruncatedSeries out(order);
  if (x_exponent >= 0 && x_exponent < out.order_) out.c_[static_cast<std::size_t>(x_exponent)] = c;
  return out;
}

const YPolynomial& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n >= order_) {
    throw Error(ErrorKind::PrecisionExceeded,
                "coefficient " + std::to_string(n) + " of a series known to order " + std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(n)];
}

int TruncatedSeries::valuation() const noexcept {
  for (int n = 0; n < order_; ++n) {
    if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
  }
  return order_;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  c_.resize(static_cast<std::size_t>(order_));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  c_.resize(static_cast<std::size_t>(order_));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  const auto n_max = static_cast<std::size_t>(out.order_);
  for (std::size_t i = 0; i < n_max; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n_max; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  if (order == 0) return TruncatedSeries(0);
  const YPolynomial& lead = b.c_[0];
  if (lead.degree() != 0) {
    throw Error(ErrorKind::NonUnitDenominator, "denominator constant term must be a nonzero rational");
  }
  const Rational inv = 1 / lead.coeff(0);
  TruncatedSeries out(order);
  for (std::size_t n = 0; n < static_cast<std::size_t>(order); ++n) {
    YPolynomial acc = a.c_[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (!b.c_[k].is_zero()) acc -= b.c_[k] * out.c_[n - k];
    }
    out.c_[n] = acc * YPolynomial(inv);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (YPolynomial& c : out.c_) c = -c;
  return out;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  TruncatedSeries out = constant(Rational(1), order_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

TruncatedSeries sqrt(const TruncatedSeries& s) {
  const int order = s.order();
  if (order == 0) return s;
  if (!(s.coeff(0) == YPolynomial(Rational(1)))) {
    throw Error(ErrorKind::BadConstantTerm, "sqrt needs constant term 1");
  }
  std::vector<YPolynomial> r(static_cast<std::size_t>(order));
  r[0] = YPolynomial(Rational(1));
  // (sum r_k x^k)^2 = s gives 2 r_n = s_n - sum_{0<k<n} r_k r_{n-k}.
  for (int n = 1; n < order; ++n) {
    YPolynomial acc = s.coeff(n);
    for (int k = 1; k < n; ++k) {
      acc -= r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
    }
    r[static_cast<std::size_t>(n)] = acc.divided_by(Rational(2));
  }
  return TruncatedSeries(order, std::move(r));
}

TruncatedSeries divide_shifted(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int v = b.valuation();
  const int order = std::min(a.order(), b.order());
  if (v >= order) throw Error(ErrorKind::NonUnitDenominator, "denominator vanishes to the known order");
  if (a.valuation() < v) {
    throw Error(ErrorKind::NonUnitDenominator, "numerator valuation below denominator valuation");
  }
  std::vector<YPolynomial> ca;
  std::vector<YPolynomial> cb;
  for (int n = v; n < order; ++n) {
    ca.push_back(a.coeff(n));
    cb.push_back(b.coeff(n));
  }
  return TruncatedSeries(order - v, std::move(ca)) / TruncatedSeries(order - v, std::move(cb));
}

namespace {

template <typename F>
TruncatedSeries map_coeffs(const TruncatedSeries& s, F f) {
  std::vector<YPolynomial> out;
  out.reserve(static_cast<std::size_t>(s.order()));
  for (int n = 0; n < s.order(); ++n) out.push_back(f(s.coeff(n)));
  return TruncatedSeries(s.order(), std::move(out));
}

}  // namespace

TruncatedSeries deriv_y(const TruncatedSeries& s) {
  return map_coeffs(s, [](const YPolynomial& c) { return c.deriv(); });
}

TruncatedSeries eval_y(const TruncatedSeries& s, const Rational& y) {
  return map_coeffs(s, [&](const YPolynomial& c) { return YPolynomial(c.eval(y)); });
}

TruncatedSeries subst_y_shift(const TruncatedSeries& s) {
  return map_coeffs(s, [](const YPolynomial& c) { return c.shifted(); });
}

// ---- generating functions ----

namespace {

// Small builder so closed forms read close to their usual notation.
struct Ring {
  int order;
  TruncatedSeries num(long c) const { return TruncatedSeries::constant(Rational(c), order); }
  TruncatedSeries x(int k = 1) const { return TruncatedSeries::monomial(k, Rational(1), order); }
  TruncatedSeries y(int k = 1) const { return TruncatedSeries::constant(YPolynomial::monomial(k), order); }
  TruncatedSeries xy(int i, int j) const { return TruncatedSeries::monomial(i, YPolynomial::monomial(j), order); }
};

// G_p = 1 - x - ... - x^p.
TruncatedSeries fib_denominator(const Ring& r, int p) {
  TruncatedSeries g = r.num(1);
  for (int k = 1; k <= p; ++k) g -= r.x(k);
  return g;
}

TruncatedSeries gf_L2(const Ring& r) {
  const TruncatedSeries first = (r.xy(4, 4) + r.xy(4, 3) + r.num(1)) / (r.num(1) - r.x() - r.x(2));
  const TruncatedSeries num = r.xy(2, 1) * (r.x(2) - r.num(1)) * (r.xy(3, 2) - r.num(1));
  const TruncatedSeries den =
      (r.xy(1, 1) - r.num(1)) * (r.x(2) + r.x() - r.num(1)).pow(2) * (r.xy(2, 1) - r.num(1));
  return first + num / den;
}

TruncatedSeries gf_Lp(const Ring& r, int p) {
  const TruncatedSeries g = fib_denominator(r, p);
  const TruncatedSeries one = r.num(1);
  TruncatedSeries v(r.order);
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 2; j <= p; ++j) {
      TruncatedSeries head(r.order);
      for (int k = 1; k <= p - (j - i); ++k) head += r.x(k);
      v += r.xy(j, j - i) * (one + head / g);
    }
  }
  const TruncatedSeries w = r.y() * (one - r.x(p)) * (r.x(2) - r.x(p + 1)) * (one - r.xy(p + 1, 2)) /
                            ((one - r.x()) * (one - r.xy(1, 1)) * (one - r.xy(p, 1)) * g);
  const TruncatedSeries chain = r.xy(3, 3) * (one - r.x(p - 2)) / (one - r.x());
  return (one + chain + v + w) / g;
}

TruncatedSeries gf_Linf(const Ring& r) {
  const TruncatedSeries y = r.y();
  const TruncatedSeries one = r.num(1);
  const TruncatedSeries num = one - y.pow(2) * (one + y).pow(2) * r.x(4) + r.num(2) * r.xy(5, 4) -
                              (r.num(3) - y - y.pow(2)) * r.xy(3, 1) + r.num(2) * (r.num(2) * y + one) * r.x(2) -
                              (r.num(3) + y) * r.x();
  const TruncatedSeries den = (one - r.xy(1, 1)) * (one - r.num(2) * r.x()).pow(2);
  return num / den;
}

TruncatedSeries j_radical(const Ring& r) {
  return sqrt(r.x(4) - r.num(2) * r.x(3) - r.x(2) - r.num(2) * r.x() + r.num(1));
}

}  // namespace

TruncatedSeries gf_family_size(FamilyParam p, int order) {
  const Ring r{order};
  if (p.is_infinite()) return (r.num(1) - r.x()) / (r.num(1) - r.num(2) * r.x());
  return r.num(1) / fib_denominator(r, p.value());
}

TruncatedSeries gf_F(FamilyParam p, int order) {
  const Ring r{order};
  const TruncatedSeries one = r.num(1);
  const TruncatedSeries ym1 = r.y() - one;
  if (p.is_infinite()) return (one - r.x()) / (one - r.num(2) * r.x() + (one - r.y()) * r.x(2));
  const int q = p.value();
  const TruncatedSeries num = (one - r.x()) * (one + ym1 * r.x(q));
  const TruncatedSeries den = one - r.num(2) * r.x() + r.x(q + 1) - ym1 * (r.x(2) - r.x(q) + r.x(q + 1) - r.x(q + 2));
  return num / den;
}

TruncatedSeries gf_B(FamilyParam p, int order) {
  const Ring r{order};
  const TruncatedSeries one = r.num(1);
  if (p.is_infinite()) return (one - r.x()) / (one - r.num(2) * r.x() - r.xy(2, 1));
  const int q = p.value();
  const TruncatedSeries num = (one - r.x()) * (one + r.xy(q, 1));
  const TruncatedSeries den =
      one - r.num(2) * r.x() + r.x(q + 1) - r.y() * (r.x(2) - r.x(q) + r.x(q + 1) - r.x(q + 2));
  return num / den;
}

TruncatedSeries gf_coverings(FamilyParam p, int order) {
  const Ring r{order};
  const TruncatedSeries one = r.num(1);
  if (p.is_infinite()) return (one - r.x()) * r.x(2) / (one - r.num(2) * r.x()).pow(2);
  const int q = p.value();
  return (one - r.x()) * (r.x(2) - r.x(q + 1)) * (one - r.x(q)) / (one - r.num(2) * r.x() + r.x(q + 1)).pow(2);
}

TruncatedSeries gf_meet_irreducible(FamilyParam p, int order) {
  const Ring r{order};
  const TruncatedSeries one = r.num(1);
  if (p.is_infinite()) return r.x(2) / (one - r.x()).pow(3);
  const int q = p.value();
  return (r.x(2) - r.x(q + 1)) / ((one - r.x()).pow(3) * (one - r.x(q)));
}

std::int64_t closed_b(int n, FamilyParam p) {
  const std::int64_t nn = n;
  if (p.is_infinite()) return nn * (nn - 1) / 2;
  const std::int64_t q = p.value();
  return nn * nn * (q - 1) / (2 * q);
}

TruncatedSeries gf_L(FamilyParam p, int order) {
  const Ring r{order};
  if (p.is_infinite()) return gf_Linf(r);
  if (p.value() == 2) return gf_L2(r);
  return gf_Lp(r, p.value());
}

TruncatedSeries gf_I(int order) {
  const Ring r{order};
  const TruncatedSeries den = r.num(1) - r.num(2) * r.x() - r.num(2) * r.xy(1, 1) + sqrt(r.num(1) - r.num(4) * r.x());
  return r.num(1) + r.num(2) * r.x() / den;
}

TruncatedSeries gf_J(int order) {
  const Ring r{order};
  const TruncatedSeries s = j_radical(r);
  const TruncatedSeries num = r.num(1) + r.x() - r.x(2) + s;
  const TruncatedSeries den = (r.num(1) - r.x(2)) * s + r.num(1) + r.x(4) - r.x(3) -
                              r.num(2) * (r.y() + r.num(1)) * r.x(2) - r.x();
  return num / den;
}

TruncatedSeries gf_J_at_one(int order) {
  const Ring r{order + 1};
  const TruncatedSeries num = -r.x(2) + r.num(3) * r.x() - r.num(1) + j_radical(r);
  const TruncatedSeries den = r.num(2) * r.x() * (r.x(2) - r.num(3) * r.x() + r.num(1)) * (r.x() + r.num(1));
  return divide_shifted(num, den);
}

std::map<int, std::int64_t> integer_coefficients(const TruncatedSeries& s, int n) {
  std::map<int, std::int64_t> out;
  const YPolynomial& c = s.coeff(n);
  for (int k = 0; k <= c.degree(); ++k) {
    const Rational v = c.coeff(k);
    if (v == 0) continue;
    if (boost::multiprecision::denominator(v) != 1) {
      throw Error(ErrorKind::NonIntegral, "coefficient of x^" + std::to_string(n) + " y^" + std::to_string(k) +
                                              " is " + v.str());
    }
    const auto num = boost::multiprecision::numerator(v);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorKind::NonIntegral, "coefficient of x^" + std::to_string(n) + " exceeds 64 bits");
    }
    out[k] = num.convert_to<std::int64_t>();
  }
  return out;
}

std::int64_t integer_total(const TruncatedSeries& s, int n) {
  const auto coeffs = integer_coefficients(eval_y(s, Rational(1)), n);
  return coeffs.empty() ? 0 : coeffs.begin()->second;
}

}  // namespace dycklat
