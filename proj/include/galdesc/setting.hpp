#pragma once

#include <memory>
#include <string>

#include "galdesc/matcat.hpp"

namespace galdesc {

// A descent situation: an adjunction f* -| f_+ between two matrix
// tensor-categories, together with a finite group acting upstairs by
// twist functors g*, comparison isomorphisms i_g : g* f* => f* and
// 2-cocycle isomorphisms c_{g,h} : h* g* => (gh)*.
//
// Conventions used throughout the engine:
//   unit(A)        : A -> f_+ f* A
//   counit(C)      : f* f_+ C -> C
//   comparison(g,A): g*(f* A) -> f* A
//   cocycle(g,h,C) : h*(g* C) -> (gh)* C
//   weak_trace()   : f_+ 1 -> 1, with  weak_trace . unit(1) = |Gamma| . id
class DescentSetting {
 public:
  virtual ~DescentSetting();

  virtual const GroupTable& gamma() const = 0;
  virtual const MatCategory& base() const = 0;      // downstairs category
  virtual const MatCategory& upstairs() const = 0;  // category acted on

  virtual Obj pull_obj(const Obj& a) const = 0;
  virtual RatMatrix pull_mor(const RatMatrix& phi) const = 0;
  virtual Obj push_obj(const Obj& c) const = 0;
  virtual RatMatrix push_mor(const Obj& src, const Obj& dst, const RatMatrix& phi) const = 0;

  virtual RatMatrix unit(const Obj& a) const = 0;
  virtual RatMatrix counit(const Obj& c) const = 0;

  virtual Obj twist_obj(int g, const Obj& c) const = 0;
  virtual RatMatrix twist_mor(int g, const RatMatrix& phi) const = 0;
  virtual RatMatrix comparison(int g, const Obj& a) const = 0;
  virtual RatMatrix cocycle(int g, int h, const Obj& c) const = 0;

  virtual RatMatrix weak_trace() const = 0;

  // Whether g* acts trivially on the entries of morphism matrices. When
  // false (semilinear case) twist-invariance conditions are only Q-linear
  // and solvers must restrict scalars.
  virtual bool twist_fixes_entries() const = 0;

  virtual std::string kind() const = 0;
};

using SettingPtr = std::shared_ptr<const DescentSetting>;

}  // namespace galdesc
