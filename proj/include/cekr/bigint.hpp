#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cekr {

// All counts are exact; they overflow 64 bits well inside the supported
// parameter ranges (40! has 48 digits), so an arbitrary-precision integer is
// the only acceptable representation.  Serialized as decimal strings.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with positive denominator (the backend
// canonicalizes on construction and after every operation).
using ExactRatio = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline BigCount ratio_num(const ExactRatio& r) { return boost::multiprecision::numerator(r); }
inline BigCount ratio_den(const ExactRatio& r) { return boost::multiprecision::denominator(r); }

}  // namespace cekr
