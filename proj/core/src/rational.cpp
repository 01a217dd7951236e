#include "isoperiod/rational.hpp"

#include <stdexcept>

namespace isoperiod {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::runtime_error("parse_rational: empty string");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::runtime_error("parse_rational: cannot parse '" + s + "'");
  }
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (q == 0) {
    root = 0;
    return true;
  }
  Integer n = boost::multiprecision::numerator(q);
  Integer d = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn == n && rd * rd == d) {
    root = Rational(rn, rd);
    return true;
  }
  return false;
}

}  // namespace isoperiod
