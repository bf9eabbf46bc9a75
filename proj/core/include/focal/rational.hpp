#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace focal {

/// Exact rational scalar. Every quantity in the pipeline is a Rat; there is
/// no floating point anywhere in the library.
using Rat = boost::rational<long long>;

/// Renders a rational as "p" or "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      const long long p = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return Rat(p);
    }
    size_t pos = 0;
    const long long p = std::stoll(s.substr(0, slash), &pos);
    if (pos != slash) throw std::invalid_argument(s);
    const std::string den = s.substr(slash + 1);
    const long long q = std::stoll(den, &pos);
    if (pos != den.size() || q == 0) throw std::invalid_argument(s);
    return Rat(p, q);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + s);
  }
}

}  // namespace focal
