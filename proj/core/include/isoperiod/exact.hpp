#ifndef ISOPERIOD_EXACT_HPP
#define ISOPERIOD_EXACT_HPP

#include <map>
#include <string>
#include <utility>

#include "isoperiod/rational.hpp"

namespace isoperiod {

// Exact scalar of the form  sum_j q_j * sqrt(rho_j) * pi^p_j  with rational
// q_j and positive rational rho_j. Radicands are canonicalized (square part
// extracted, denominator cleared) so equal values share a key; distinct
// square-free radicands are linearly independent over Q and pi is
// transcendental, which makes the zero test exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& q);  // NOLINT: rational is an ExactScalar
  ExactScalar(long v) : ExactScalar(Rational(v)) {}

  // q * sqrt(rho) * pi^pi_pow, canonicalized.
  static ExactScalar term(const Rational& q, const Rational& rho, int pi_pow);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Rational part (the coefficient of sqrt(1)*pi^0).
  Rational rational_part() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& o);
  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

  double value() const;

  // Human-readable exact form, e.g. "2", "1/2*sqrt(2)*pi", "2 - 1/2*pi".
  std::string str() const;

  // key: (canonical integer radicand, pi power) -> coefficient
  using TermMap = std::map<std::pair<Integer, int>, Rational>;
  const TermMap& terms() const { return terms_; }

 private:
  void add_term(const Integer& radicand, int pi_pow, const Rational& q);
  TermMap terms_;
};

ExactScalar operator*(const Rational& c, const ExactScalar& a);

}  // namespace isoperiod

#endif
