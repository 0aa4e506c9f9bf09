#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lefcon {

/// Exact rational backed by GMP. mpq_class canonicalizes after every
/// arithmetic operation (positive denominator, reduced).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace lefcon
