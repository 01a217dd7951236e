#include "isoperiod/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isoperiod {

namespace {

// Splits n = s^2 * m with m as small as practical: trial division up to 10^6,
// then a perfect-square check on the remainder. Radicands in this code base
// come from small user coefficients, so this is exact in practice.
void extract_square(const Integer& n, Integer& s, Integer& m) {
  s = 1;
  m = 1;
  Integer rest = n;
  for (Integer p = 2; p <= 1000000 && p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  Integer r = boost::multiprecision::sqrt(rest);
  if (r * r == rest) {
    s *= r;
  } else {
    m *= rest;
  }
}

}  // namespace

ExactScalar::ExactScalar(const Rational& q) {
  if (q != 0) terms_[{Integer(1), 0}] = q;
}

void ExactScalar::add_term(const Integer& radicand, int pi_pow, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_pair(radicand, pi_pow);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = q;
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactScalar ExactScalar::term(const Rational& q, const Rational& rho, int pi_pow) {
  if (rho <= 0) throw std::invalid_argument("ExactScalar: radicand must be positive");
  ExactScalar r;
  if (q == 0) return r;
  // sqrt(a/b) = sqrt(a*b)/b; then pull the square part out of a*b.
  Integer a = boost::multiprecision::numerator(rho);
  Integer b = boost::multiprecision::denominator(rho);
  Integer s, m;
  extract_square(a * b, s, m);
  r.add_term(m, pi_pow, q * Rational(s, b));
  return r;
}

bool ExactScalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == std::make_pair(Integer(1), 0);
}

Rational ExactScalar::rational_part() const {
  auto it = terms_.find({Integer(1), 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
  return *this;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r(a);
  r += b;
  return r;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r(a);
  r += -b;
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      // sqrt(m1)*sqrt(m2) = sqrt(m1*m2), re-canonicalized.
      r += ExactScalar::term(va * vb, Rational(ka.first * kb.first),
                             ka.second + kb.second);
    }
  return r;
}

ExactScalar operator*(const Rational& c, const ExactScalar& a) {
  return ExactScalar(c) * a;
}

double ExactScalar::value() const {
  double acc = 0.0;
  for (const auto& [k, v] : terms_) {
    double t = to_double(v) * std::sqrt(k.first.convert_to<double>());
    for (int i = 0; i < k.second; ++i) t *= M_PI;
    acc += t;
  }
  return acc;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational q = v;
    if (first) {
      if (q < 0) {
        out << "-";
        q = -q;
      }
    } else {
      out << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    bool has_factor = (k.first != 1) || (k.second > 0);
    if (!has_factor || q != 1) {
      out << q.str();
      if (has_factor) out << "*";
    }
    if (k.first != 1) {
      out << "sqrt(" << k.first.str() << ")";
      if (k.second > 0) out << "*";
    }
    if (k.second == 1) out << "pi";
    else if (k.second > 1) out << "pi^" << k.second;
  }
  return out.str();
}

}  // namespace isoperiod
