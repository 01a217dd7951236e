#include "isoperiod/series.hpp"

#include <algorithm>

#include "isoperiod/errors.hpp"

namespace isoperiod {

TruncatedSeries::TruncatedSeries(std::size_t order, std::string var)
    : coeffs_(order + 1, Rational(0)), var_(std::move(var)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order,
                                          std::string var) {
  TruncatedSeries s(order, std::move(var));
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order, std::string var) {
  TruncatedSeries s(order, std::move(var));
  if (order >= 1) s[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min(order + 1, coeffs_.size()));
  c.resize(order + 1, Rational(0));
  return TruncatedSeries(std::move(c), var_);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n, a.var());
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n, a.var());
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n, a.var());
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    r[i] = acc;
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r(a);
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] *= c;
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  if (order() != other.order()) return false;
  return coeffs_ == other.coeffs_;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner[0] != 0)
    throw NonzeroConstantInner("series_compose: inner series has nonzero constant term");
  std::size_t n = std::min(order(), inner.order());
  // Horner over the truncated outer coefficients.
  TruncatedSeries in = inner.truncated(n);
  TruncatedSeries acc = TruncatedSeries::constant(coeffs_[n], n, inner.var());
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * in;
    acc[0] += coeffs_[k];
  }
  return acc;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw NotInvertible("reciprocal: constant term is zero");
  std::size_t n = order();
  TruncatedSeries r(n, var_);
  r[0] = Rational(1) / coeffs_[0];
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc(0);
    for (std::size_t k = 1; k <= i; ++k) acc += coeffs_[k] * r[i - k];
    r[i] = -acc / coeffs_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  std::size_t n = order();
  TruncatedSeries r(n == 0 ? 0 : n - 1, var_);
  for (std::size_t i = 1; i <= n; ++i) r[i - 1] = Rational(i) * coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::reversion() const {
  if (coeffs_[0] != 0 || (order() >= 1 && coeffs_[1] == 0) || order() < 1)
    throw NotInvertible("series_reversion: requires c0 = 0 and c1 != 0");
  std::size_t n = order();
  // Newton with order doubling: g <- g - (f(g) - t) / f'(g), correct order
  // doubles each pass. All intermediates carried at full order n.
  TruncatedSeries g(n, var_);
  g[1] = Rational(1) / coeffs_[1];
  TruncatedSeries id = TruncatedSeries::identity(n, var_);
  TruncatedSeries fp = derivative().truncated(n);
  for (std::size_t correct = 1; correct < n; correct *= 2) {
    TruncatedSeries residual = compose(g) - id;
    g = g - residual * fp.compose(g).reciprocal();
  }
  return g;
}

TruncatedSeries TruncatedSeries::binomial_pow(const Rational& alpha) const {
  if (coeffs_[0] != 0)
    throw NonzeroConstantInner("binomial_pow: series must have zero constant term");
  std::size_t n = order();
  // sum_k C(alpha, k) u^k; u^k has valuation >= k so the sum is finite.
  TruncatedSeries acc = TruncatedSeries::constant(1, n, var_);
  TruncatedSeries upow = TruncatedSeries::constant(1, n, var_);
  Rational coef(1);
  for (std::size_t k = 1; k <= n; ++k) {
    upow = upow * (*this);
    coef *= (alpha - Rational(k - 1)) / Rational(k);
    acc = acc + coef * upow;
  }
  return acc;
}

double TruncatedSeries::eval(double t) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    acc = acc * t + to_double(coeffs_[k]);
  return acc;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  return outer.compose(inner);
}
TruncatedSeries series_reversion(const TruncatedSeries& f) { return f.reversion(); }
TruncatedSeries series_powhalf_reciprocal(const TruncatedSeries& u) {
  return u.binomial_pow(Rational(-1, 2));
}
TruncatedSeries series_sqrt1p(const TruncatedSeries& u) {
  return u.binomial_pow(Rational(1, 2));
}

}  // namespace isoperiod
