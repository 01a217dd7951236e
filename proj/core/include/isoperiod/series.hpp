#ifndef ISOPERIOD_SERIES_HPP
#define ISOPERIOD_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "isoperiod/rational.hpp"

namespace isoperiod {

// Truncated power series over exact rationals. A series of order N stores the
// coefficients of t^0 .. t^N; everything beyond t^N is unknown, not zero.
// Arithmetic between series of different orders truncates to the smaller one.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order, std::string var = "t");
  TruncatedSeries(std::vector<Rational> coeffs, std::string var = "t");

  static TruncatedSeries constant(const Rational& c, std::size_t order,
                                  std::string var = "t");
  // The series t.
  static TruncatedSeries identity(std::size_t order, std::string var = "t");

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  // Cauchy product, truncated at min(order(a), order(b)).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

  bool operator==(const TruncatedSeries& other) const;

  // Substitutes `inner` (which must have zero constant term) for t.
  // Throws NonzeroConstantInner.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  // Compositional inverse g with f(g(t)) = t up to the truncation order.
  // Requires c0 = 0 and c1 != 0; throws NotInvertible. Newton iteration with
  // order doubling.
  TruncatedSeries reversion() const;

  // Multiplicative inverse; requires c0 != 0 (throws NotInvertible).
  TruncatedSeries reciprocal() const;

  // (1 + this)^alpha for rational alpha; requires zero constant term
  // (throws NonzeroConstantInner).
  TruncatedSeries binomial_pow(const Rational& alpha) const;

  TruncatedSeries derivative() const;

  double eval(double t) const;

 private:
  std::vector<Rational> coeffs_;
  std::string var_;
};

// Free-function aliases for the class operations.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
TruncatedSeries series_reversion(const TruncatedSeries& f);
// Binomial expansion of (1+u)^(-1/2).
TruncatedSeries series_powhalf_reciprocal(const TruncatedSeries& u);
// Binomial expansion of (1+u)^(1/2).
TruncatedSeries series_sqrt1p(const TruncatedSeries& u);

constexpr std::size_t kDefaultOrder = 12;

}  // namespace isoperiod

#endif
