#ifndef ISOPERIOD_RATIONAL_HPP
#define ISOPERIOD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isoperiod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" or a plain integer literal; throws std::runtime_error on garbage.
Rational parse_rational(const std::string& s);

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// True iff q = (p/r)^2 for some rational p/r; on success root is set to the
// nonnegative square root.
bool rational_sqrt(const Rational& q, Rational& root);

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace isoperiod

#endif
