#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ellarr {

/// Arbitrary-precision signed integer used for every exact quantity.
using Integer = boost::multiprecision::cpp_int;

/// Raised for malformed user input (bad parameters, bad files, bad subsets).
/// The CLI maps it to exit code 2.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
  input_error(const std::string& context, const std::string& what)
      : std::invalid_argument(context.empty() ? what : context + ": " + what) {}
};

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

/// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline Integer gcd(const Integer& a, const Integer& b, const Integer& c) {
  return gcd(gcd(a, b), c);
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace ellarr
