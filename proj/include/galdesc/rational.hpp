#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace galdesc {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalize(), which every constructor below runs.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Serialization is "p/q", with "/q" omitted when q = 1.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_from_string(const std::string& s);

using Poly = std::vector<Rational>;  // coefficient list, index = exponent

}  // namespace galdesc
