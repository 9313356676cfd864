#pragma once

#include "galdesc/descent.hpp"
#include "galdesc/setting.hpp"

namespace galdesc {

// A commutative monoid object (R, eta, mu) in a matrix tensor-category.
struct MonoidObject {
  Obj carrier;
  RatMatrix mu;   // R (x) R -> R
  RatMatrix eta;  // 1 -> R
  bool commutative = true;

  bool operator==(const MonoidObject& o) const {
    return carrier.dim == o.carrier.dim && mu == o.mu && eta == o.eta;
  }
};

// A left module (X, nu) over a monoid. The monoid is carried along so that
// binary operations can reject mismatched scalars.
struct ModuleObject {
  MonoidObject monoid;
  Obj carrier;
  RatMatrix nu;  // R (x) X -> X
};

struct MonoidMorphism {
  MonoidObject source;
  MonoidObject target;
  RatMatrix map;
};

bool valid_monoid(const MatCategory& cat, const MonoidObject& r);
bool valid_module(const MatCategory& cat, const ModuleObject& x);
bool valid_monoid_morphism(const MatCategory& cat, const MonoidMorphism& phi);
void require_monoid(const MatCategory& cat, const MonoidObject& r);     // BadMonoidMap
void require_module(const MatCategory& cat, const ModuleObject& x);    // BadMonoidMap
void require_monoid_morphism(const MatCategory& cat, const MonoidMorphism& phi);

// The unit object with its trivial structure.
MonoidObject unit_monoid(const MatCategory& cat);

// f_+1 with the multiplication induced by the lax structure of f_+
// restricted to the unit: mu = f_+(eps (x) eps) . unit, eta = unit of the
// adjunction at 1.
MonoidObject monoid_from_direct_image(const DescentSetting& s);

// Free module R (x) X0 with action mu (x) 1.
ModuleObject free_module(const MatCategory& cat, const MonoidObject& r, const Obj& x0);
// R as a module over itself.
ModuleObject regular_module(const MatCategory& cat, const MonoidObject& r);

// A chosen presentation of a quotient of X by the image of a map into X:
// projection . section = identity of the quotient, kernel(projection) = image.
struct QuotientPresentation {
  Obj carrier;
  RatMatrix projection;
  RatMatrix section;
};
QuotientPresentation quotient_by_image(const MatCategory& cat, const Obj& x,
                                       const RatMatrix& into_x);

// X (x)_R Y as the cokernel of nu_X (x) 1 - 1 (x) nu_Y, with its chosen
// presentation by the underlying tensor product.
struct TensorOverR {
  ModuleObject module;
  RatMatrix projection;  // X (x) Y -> carrier
  RatMatrix section;     // carrier -> X (x) Y, projection . section = id
};
TensorOverR tensor_over_R(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y);

// Induced map (X (x)_R Y) -> (X' (x)_R Y') of a pair of module maps.
RatMatrix tensor_over_R_mor(const TensorOverR& src, const TensorOverR& dst,
                            const RatMatrix& phi, const RatMatrix& psi);

// Structure isomorphisms of the (x)_R monoidal structure, as matrices on
// the chosen presentations (each recomputed deterministically).
struct IsoPair {
  RatMatrix forward;
  RatMatrix backward;
};
IsoPair unit_left_iso(const MatCategory& cat, const ModuleObject& x);   // R (x)_R X -> X
IsoPair unit_right_iso(const MatCategory& cat, const ModuleObject& x);  // X (x)_R R -> X
IsoPair symmetry_iso(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y);
IsoPair assoc_iso(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y,
                  const ModuleObject& z);  // (X (x)_R Y) (x)_R Z -> X (x)_R (Y (x)_R Z)

// Dual module with evaluation/coevaluation over (x)_R.
struct DualModule {
  ModuleObject dual;
  RatMatrix ev;    // (X* (x)_R X) carrier -> R
  RatMatrix coev;  // R -> (X (x)_R X*) carrier
};
DualModule dual_module(const MatCategory& cat, const ModuleObject& x);

// Extension of scalars along a monoid morphism, as the cokernel
// presentation of S (x) X.
struct ExtendedModule {
  ModuleObject module;   // over phi.target
  RatMatrix projection;  // S (x) X -> carrier
  RatMatrix section;
  RatMatrix unit;        // X -> carrier, the adjunction unit
};
ExtendedModule extend_scalars(const MatCategory& cat, const MonoidMorphism& phi,
                              const ModuleObject& x);
// Adjunction Hom_S(u_! X, Y) ~ Hom_R(X, u* Y): both directions.
RatMatrix extend_hom_forward(const ExtendedModule& ext, const RatMatrix& h);
RatMatrix extend_hom_backward(const MatCategory& cat, const MonoidMorphism& phi,
                              const ModuleObject& x, const ExtendedModule& ext,
                              const ModuleObject& y, const RatMatrix& k);

// Basis of module homomorphisms (equivariant when the category demands it,
// and R-linear), over the category's coefficient field.
std::vector<RatMatrix> module_hom_basis(const MatCategory& cat, const ModuleObject& x,
                                        const ModuleObject& y);

// Kernel and cokernel of a module map, with the induced actions.
struct ModuleKernel {
  ModuleObject module;
  RatMatrix inclusion;
};
ModuleKernel module_kernel(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y,
                           const RatMatrix& h);
struct ModuleCokernel {
  ModuleObject module;
  RatMatrix projection;
};
ModuleCokernel module_cokernel(const MatCategory& cat, const ModuleObject& x,
                               const ModuleObject& y, const RatMatrix& h);

// The comparison functor K(C) = (f_+C, f_+ eps_C), with the algebra
// structure rewritten through the weak projection isomorphism.
ModuleObject comparison_K(const DescentEngine& eng, const Obj& c);
RatMatrix comparison_K_mor(const DescentEngine& eng, const Obj& src, const Obj& dst,
                           const RatMatrix& psi);
RatMatrix comparison_K_hom_inverse(const DescentEngine& eng, const Obj& src, const Obj& dst,
                                   const RatMatrix& h);
// Reconstruct the upstairs object from a module (semilinear settings):
// returns C and a module isomorphism K(C) -> (X, nu).
struct ReconstructedObject {
  Obj upstairs;
  RatMatrix iso;  // f_+ C -> X
};
ReconstructedObject comparison_K_inverse(const DescentEngine& eng, const ModuleObject& x);

// Split-coequalizer identities of the fork T^3 => T^2 -> T for T = R (x) -,
// applied at the object a.
struct SplitCoequalizerReport {
  bool fork_commutes = false;      // mu . T(mu) = mu . mu_T
  bool section_splits = false;     // mu . s = id with s = eta T
  bool top_splits = false;         // mu_T . t = id with t = eta T^2
  bool interchange = false;        // T(mu) . t = s . mu
  bool all() const { return fork_commutes && section_splits && top_splits && interchange; }
};
SplitCoequalizerReport split_coequalizer_check(const MatCategory& cat, const MonoidObject& r,
                                               const Obj& a);

}  // namespace galdesc
