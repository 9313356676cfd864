#pragma once

#include <optional>

#include "galdesc/group.hpp"
#include "galdesc/matrix.hpp"

namespace galdesc {

// Object of a matrix tensor-category: a dimension, plus (for representation
// categories) one acting matrix per group element.
struct Obj {
  int dim = 0;
  std::vector<RatMatrix> action;  // empty for plain matrix categories

  bool is_rep() const { return !action.empty(); }
};

struct DualData {
  Obj dual;
  RatMatrix ev;    // dual (x) X -> 1
  RatMatrix coev;  // 1 -> X (x) dual
};

// A matrix tensor-category over a fixed coefficient field: either plain
// (objects are dimensions, morphisms arbitrary matrices) or a category of
// representations of a finite group (morphisms are equivariant matrices).
// Associativity of (x) is strict on dimensions; only symmetry and unit
// constraints carry explicit permutation matrices.
class MatCategory {
 public:
  MatCategory() = default;
  explicit MatCategory(FieldPtr field) : field_(std::move(field)) {}
  MatCategory(FieldPtr field, GroupTable group) : field_(std::move(field)), group_(std::move(group)) {}

  const FieldPtr& field() const { return field_; }
  bool is_rep_category() const { return group_.has_value(); }
  const GroupTable& group() const { return *group_; }

  Obj unit() const;
  Obj object(int dim) const;  // plain categories only
  Obj object(int dim, std::vector<RatMatrix> action) const;
  Obj zero_object() const { return unit_dim(0); }

  bool valid_object(const Obj& x) const;
  bool valid_morphism(const Obj& src, const Obj& dst, const RatMatrix& m) const;
  void require_morphism(const Obj& src, const Obj& dst, const RatMatrix& m) const;

  RatMatrix id(const Obj& x) const { return RatMatrix::identity(x.dim, field_); }
  RatMatrix zero(const Obj& src, const Obj& dst) const { return RatMatrix::zero(dst.dim, src.dim, field_); }

  Obj tensor(const Obj& x, const Obj& y) const;
  RatMatrix tensor_mor(const RatMatrix& f, const RatMatrix& g) const { return f.kron(g); }
  Obj dsum(const Obj& x, const Obj& y) const;
  RatMatrix dsum_mor(const RatMatrix& f, const RatMatrix& g) const { return f.dsum(g); }
  // biproduct structure maps for x (+) y
  RatMatrix incl1(const Obj& x, const Obj& y) const;
  RatMatrix incl2(const Obj& x, const Obj& y) const;
  RatMatrix proj1(const Obj& x, const Obj& y) const;
  RatMatrix proj2(const Obj& x, const Obj& y) const;

  // symmetry x (x) y -> y (x) x as a permutation matrix
  RatMatrix symmetry(const Obj& x, const Obj& y) const;
  DualData dual_object(const Obj& x) const;

  // Basis of Hom(src, dst) over the coefficient field (equivariant
  // matrices for representation categories), deterministically ordered.
  std::vector<RatMatrix> hom_basis(const Obj& src, const Obj& dst) const;
  // Basis of the same space over Q (each field-basis morphism multiplied
  // by the powers of the field generator).
  std::vector<RatMatrix> hom_basis_q(const Obj& src, const Obj& dst) const;

 private:
  Obj unit_dim(int d) const;
  FieldPtr field_;
  std::optional<GroupTable> group_;
};

// Express a morphism in a Q-basis of its Hom space; throws if not in the span.
std::vector<Rational> coords_in_q_basis(const std::vector<RatMatrix>& basis, const RatMatrix& m);
RatMatrix combine_q_basis(const std::vector<RatMatrix>& basis, const std::vector<Rational>& coords);

}  // namespace galdesc
