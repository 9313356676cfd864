#pragma once

#include "galdesc/group.hpp"
#include "galdesc/matrix.hpp"
#include "galdesc/numberfield.hpp"

namespace galdesc {

// A finite Galois extension l/Q with explicit automorphism group.
// Automorphisms are stored by the image of the power-basis generator;
// application is polynomial evaluation followed by reduction.
class GaloisExtension {
 public:
  // Verifies that each image is a root of the minimal polynomial and that
  // composition of the images closes into a group of order = degree whose
  // fixed field is Q. Throws NotAutomorphism / NotGalois.
  static GaloisExtension make(FieldPtr top, std::vector<FieldElement> generator_images,
                              std::vector<std::string> names = {});

  const FieldPtr& top() const { return top_; }
  int degree() const { return top_->degree(); }
  const GroupTable& group() const { return group_; }
  const FieldElement& generator_image(int g) const;

  FieldElement apply(int g, const FieldElement& x) const;
  // Sum over the group; lands in Q.
  FieldElement trace(const FieldElement& x) const;
  // Matrix of multiplication by x in the power basis (regular representation).
  RatMatrix regular_rep(const FieldElement& x) const;

 private:
  FieldPtr top_;
  std::vector<FieldElement> images_;
  GroupTable group_;
};

// Shipped test fields.
GaloisExtension gaussian_extension();        // Q(i), Z/2
GaloisExtension cyclic_cubic_extension();    // x^3+x^2-2x-1, Z/3
GaloisExtension biquadratic_extension();     // x^4-2x^2+9 = Q(i, sqrt 2), Z/2 x Z/2
GaloisExtension trivial_extension();         // Q itself presented as Q[x]/(x), trivial group

}  // namespace galdesc
