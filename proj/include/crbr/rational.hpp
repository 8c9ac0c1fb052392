#ifndef CRBR_RATIONAL_HPP
#define CRBR_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crbr {

// All evidential arithmetic is exact. Values are only rounded when a report
// is rendered, never in between.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fixed-point rendering with exactly four fractional digits, rounding half
// away from zero (so 0.29075 -> "0.2908").
std::string decimal4(const Rational& value);

}  // namespace crbr

#endif  // CRBR_RATIONAL_HPP
