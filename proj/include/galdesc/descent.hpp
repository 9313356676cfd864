#pragma once

#include <cstdint>

#include "galdesc/setting.hpp"

namespace galdesc {

// An object C upstairs with isomorphisms b_g : g*C -> C satisfying the
// 1-coboundary condition  b_h . h*(b_g) = b_{gh} . c_{g,h}.
struct DescentDatum {
  Obj c;
  std::vector<RatMatrix> b;  // indexed by the group
};

struct DescentResult {
  Obj descended;           // B downstairs
  RatMatrix iso;           // f*B -> C, an isomorphism of descent data
  RatMatrix iso_inverse;   // j : C -> f*B
  RatMatrix idempotent;    // e = (1/|Gamma|) sum of brackets, on f_+C
  IdempotentSplitting splitting;
};

// Gamma-representation attached to an object whose pullback splits as
// copies of the unit; entries live in End(1) of the base category.
struct ArtinImage {
  int rank = 0;
  std::vector<RatMatrix> action;  // one invertible matrix per group element
};

struct ArtinResult {
  Obj object;       // downstairs object
  RatMatrix witness;  // f*(object) -> n . 1 upstairs
};

// The calculus of a descent setting: twisted counits, the bracket
// endomorphisms of f_+C, the explicit splitting of f*f_+, traces, the
// constructive descent algorithm and its companions.
class DescentEngine {
 public:
  explicit DescentEngine(SettingPtr setting);

  const DescentSetting& setting() const { return *setting_; }
  const GroupTable& gamma() const { return setting_->gamma(); }

  DescentDatum canonical_datum(const Obj& a) const;  // (f*A, i_g(A))
  bool datum_valid(const DescentDatum& d) const;
  void require_valid(const DescentDatum& d) const;  // throws CocycleViolation

  // b_g^Y . g*(phi) . (b_g^X)^{-1} for phi : C_X -> C_Y
  RatMatrix twist_hom(int g, const DescentDatum& x, const DescentDatum& y,
                      const RatMatrix& phi) const;

  // twisted counit  f* f_+ C -> C : b_g . g*(eps_C) . i_g(f_+C)^{-1}
  RatMatrix counit_g(int g, const DescentDatum& d) const;
  // [g] = f_+(counit_g) . unit_{f_+C}, an endomorphism of f_+C
  RatMatrix bracket(int g, const DescentDatum& d) const;
  // (1/|Gamma|) sum of all brackets
  RatMatrix averaging_idempotent(const DescentDatum& d) const;

  struct Cartesian {
    RatMatrix u;          // f* f_+ C -> (+)_g g*C
    RatMatrix u_inverse;
    RatMatrix sigma;      // section C -> f* f_+ C of the counit
  };
  Cartesian cartesian(const Obj& c) const;  // throws NotCartesian

  // the same splitting with the datum's b composed in; g-component counit_g
  RatMatrix twisted_splitting(const DescentDatum& d) const;

  RatMatrix weak_projection(const Obj& a) const;  // w_A : A (x) f_+1 -> f_+f*A
  RatMatrix trace_map(const Obj& a) const;        // f_+f*A -> A

  DescentResult descend(const DescentDatum& d) const;

  // basis of the fixed space Hom(C_X, C_Y)^Gamma, over the base
  // category's coefficients
  std::vector<RatMatrix> invariant_homs(const DescentDatum& x, const DescentDatum& y) const;
  // (1G) for canonical data: f* on Hom, and its transfer inverse
  RatMatrix hom_alpha(const RatMatrix& phi) const { return setting_->pull_mor(phi); }
  RatMatrix hom_alpha_inverse(const Obj& a, const Obj& b, const RatMatrix& psi) const;

  // rho(v)_C = eps_C . v . sigma_C for v given at f_+C (fiber-level)
  RatMatrix retraction_rho(const Obj& c, const RatMatrix& v) const;
  // image criterion at the unit: v (at f_+ f*1, fiber-level, with value
  // v1 at 1) commutes with the counit of f*1
  bool image_criterion(const RatMatrix& v_at_one, const RatMatrix& v_at_push_one) const;

  ArtinImage artin_functor(const Obj& a, const RatMatrix& witness) const;
  ArtinImage artin_functor(const Obj& a) const;  // solves for a witness
  ArtinResult artin_inverse(const ArtinImage& rep) const;
  // equivariant isomorphism f*A -> n.1, throws NotArtin if none exists
  RatMatrix artin_witness(const Obj& a) const;

  struct AdjointReport {
    bool first_identity = false;   // tr_{f_+C} . f_+(sigma_C) = id
    bool second_identity = false;  // f*(tr_A) . sigma_{f*A} = id
  };
  AdjointReport left_adjoint_check(const Obj& a, const Obj& c) const;

  // coboundary datum b_g = Q . i_g(A) . g*(Q)^{-1} on f*A, deterministic in seed
  DescentDatum random_datum(const Obj& a, uint32_t seed) const;

 private:
  Obj n_units(int n) const;  // n . 1 upstairs
  SettingPtr setting_;
};

}  // namespace galdesc
