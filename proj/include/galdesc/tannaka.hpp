#pragma once

// Tannakian side of the descent calculus: the universal extension of a
// fibre functor, its pushout along a monoid map, the etale algebra of a
// Galois descent setting, the endomorphism algebra of the extended unit
// (with a connectedness verdict), and the exact-sequence diagnostics for
// the shipped normal-subgroup pairs.
//
// All shipped settings come with a forgetful fibre functor to plain
// matrices over the base field; it acts as the identity on matrices, so
// functor images below reuse the same rational data with group actions
// stripped.

#include <memory>
#include <string>
#include <vector>

#include "galdesc/descent.hpp"
#include "galdesc/grouprep.hpp"
#include "galdesc/monoid.hpp"

namespace galdesc {

// The universal extension of the fibre functor: modules over the image of
// the direct-image algebra, inside the plain matrix category over the base
// field.
struct UniversalExtension {
  MatCategory target;  // plain matrices over the base field
  MonoidObject r;      // image of the direct-image algebra in that category
};

UniversalExtension universal_extension(const DescentEngine& eng);

// The extended functor on objects upstairs: the direct image, made into a
// module over the extension's algebra. On morphisms it is the direct image
// map (the fibre functor is the identity on matrices).
ModuleObject extended_functor(const DescentEngine& eng, const UniversalExtension& ue,
                              const Obj& c);

// Base-change map: free module on the fibre of a, compared with the
// extended functor applied to the pullback of a. Returned as the carrier
// matrix; it is checked to be an invertible module map and throws
// BadMonoidMap otherwise.
RatMatrix base_change(const DescentEngine& eng, const UniversalExtension& ue, const Obj& a);

// Monoidal comparison of the extended functor: the induced map from the
// module tensor product of the extended images to the extended image of
// the tensor product. Throws BadMonoidMap if the canonical lax structure
// does not factor or the induced map is not invertible.
struct MonoidalComparison {
  TensorOverR tensor;  // presentation of extended(c) (x)_R extended(d)
  RatMatrix map;       // induced iso onto extended(c (x) d)
};
MonoidalComparison monoidal_comparison(const DescentEngine& eng, const UniversalExtension& ue,
                                       const Obj& c, const Obj& d);

// Pushout of the extension along an algebra map beta: extension of scalars
// applied to a module. Composing with the free-module functor recovers the
// identity up to canonical iso (verified in tests).
ExtendedModule pushout_functor(const MatCategory& cat, const MonoidMorphism& beta,
                               const ModuleObject& m);

// The etale algebra of the setting: the direct image of the unit, together
// with the Galois action matrices and the assembled splitting
// comparison E (x) E -> prod_Gamma E.
struct EtaleAlgebra {
  MonoidObject e;                 // the algebra, in the plain target category
  std::vector<RatMatrix> action;  // one action matrix on E per group element
  RatMatrix comparison;           // stacked components mu_E . (1 (x) action_g)
};
EtaleAlgebra etale_algebra(const DescentEngine& eng, const UniversalExtension& ue);

// Endomorphism algebra of the unit module (the algebra acting on itself),
// with a field/connectedness verdict. The verdict is decided exactly:
// degenerate trace form or an explicit zero divisor refutes, an
// irreducible minimal polynomial of a primitive element confirms.
struct EndOfUnit {
  std::vector<RatMatrix> basis;  // module endomorphisms of the regular module
  bool is_field = false;
  std::string witness;  // zero divisor / nilpotent / minimal polynomial evidence
};
EndOfUnit end_of_unit(const MatCategory& cat, const MonoidObject& r);

// One named diagnostic outcome; also the unit of CLI reports.
struct CheckResult {
  std::string check;
  bool pass = false;
  std::string witness;
};

// Exact-sequence diagnostics for a normal-subgroup setting (supported:
// the order-6 and order-8 shipped pairs). Sub-checks:
//  - trivial-restriction objects are exactly those factoring through the
//    quotient, on all irreducibles;
//  - the induced functor to quotient-group representations is an
//    equivalence on those objects (hom counts + essential surjectivity);
//  - subrepresentations of such objects again restrict trivially;
//  - a sampled tensor-transformation descends iff it is the identity on
//    the trivial-restriction subcategory, cross-checked against the
//    image criterion.
std::vector<CheckResult> exact_sequence_check(const std::shared_ptr<GroupRepSetting>& pair);

}  // namespace galdesc
