#ifndef LATGRAPH_RATIONAL_HPP
#define LATGRAPH_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "latgraph/error.hpp"

namespace latgraph {

// Exact rational scalar used throughout; all lattice quantities at desk scale
// keep numerators/denominators far below 2^63.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline long long to_integer(const Rat& r) {
  require(is_integer(r), ErrorKind::Internal, "rational is not an integer");
  return r.numerator();
}

// Canonical serialization: reduced "p/q" with q >= 1, including "0/1".
inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p" or "p/q".
inline Rat parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    require(den != 0, ErrorKind::BadInput, "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::BadInput, "malformed rational '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(ErrorKind::BadInput, "rational out of range '" + s + "'");
  }
}

}  // namespace latgraph

#endif  // LATGRAPH_RATIONAL_HPP
