#pragma once

#include <random>

#include "galdesc/matrix.hpp"

namespace galdesc::testing {

// Deterministic generator. Raw mt19937 draws only (no std distributions),
// so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint32_t seed) : eng_(seed) {}

  int below(int n) { return static_cast<int>(eng_() % static_cast<uint32_t>(n)); }

  Rational small_rational() {
    int num = below(9) - 4;           // -4 .. 4
    int den = 1 + below(3);           // 1 .. 3
    return rat(num, den);
  }

  FieldElement element(const FieldPtr& f) {
    std::vector<Rational> c;
    for (int i = 0; i < field_degree(f); ++i) c.push_back(small_rational());
    return FieldElement(f, c);
  }

  RatMatrix matrix(int rows, int cols, const FieldPtr& f) {
    RatMatrix m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = element(f);
    return m;
  }

  RatMatrix invertible(int n, const FieldPtr& f) {
    for (;;) {
      RatMatrix m = matrix(n, n, f);
      if (is_invertible(m)) return m;
    }
  }

 private:
  std::mt19937 eng_;
};

}  // namespace galdesc::testing
