#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galdesc/errors.hpp"
#include "galdesc/rational.hpp"

namespace galdesc {

class NumberField;
// nullptr stands for the rationals themselves.
using FieldPtr = std::shared_ptr<const NumberField>;

// A number field Q[x]/(m) in its power basis. The minimal polynomial is
// monic; irreducibility is fully checked up to degree 4 (rational roots
// plus quadratic-factor search). Above that the constructor trusts the
// caller and sets asserted_irreducible.
class NumberField {
 public:
  static FieldPtr make(Poly monic_minpoly);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const Poly& minpoly() const { return minpoly_; }
  bool asserted_irreducible() const { return asserted_; }

 private:
  explicit NumberField(Poly p, bool asserted) : minpoly_(std::move(p)), asserted_(asserted) {}
  Poly minpoly_;
  bool asserted_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
int field_degree(const FieldPtr& f);  // 1 for Q

// Element of Q or of a number field, as power-basis coordinates.
class FieldElement {
 public:
  FieldElement() : field_(nullptr), coords_(1, Rational(0)) {}
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  // Rational constant in the given field (field may be nullptr).
  static FieldElement constant(const FieldPtr& field, const Rational& c);
  // The power-basis generator of a number field.
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;           // all coords above the constant vanish
  Rational rational_part() const;     // requires is_rational()

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;       // throws Error on zero
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement scaled(const Rational& c) const;
  // Substitute this element into a polynomial with coefficients in the
  // same field (used for automorphism application).
  static FieldElement eval_poly(const std::vector<FieldElement>& coeffs, const FieldElement& x);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Polynomial utilities over Q (dense, index = exponent).
namespace polyq {
Poly trim(Poly p);
int deg(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
// quotient/remainder by a nonzero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
// g = gcd, plus s with s*a = g mod m (enough for inverses mod m)
Poly inverse_mod(const Poly& a, const Poly& m);  // throws Error if not invertible
Rational eval(const Poly& p, const Rational& x);
// Full decision up to degree 4; returns true above degree 4 without deciding.
bool irreducible_or_asserted(const Poly& monic, bool* decided);
}  // namespace polyq

}  // namespace galdesc
