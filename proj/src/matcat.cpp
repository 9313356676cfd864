#include "galdesc/matcat.hpp"

namespace galdesc {

Obj MatCategory::unit_dim(int d) const {
  Obj x;
  x.dim = d;
  if (group_) {
    for (int g = 0; g < group_->order; ++g) x.action.push_back(RatMatrix::identity(d, field_));
  }
  return x;
}

Obj MatCategory::unit() const { return unit_dim(1); }

Obj MatCategory::object(int dim) const {
  if (group_) throw Error("representation category object needs acting matrices");
  Obj x;
  x.dim = dim;
  return x;
}

Obj MatCategory::object(int dim, std::vector<RatMatrix> action) const {
  Obj x;
  x.dim = dim;
  x.action = std::move(action);
  if (!valid_object(x)) throw Error("acting matrices do not define a representation");
  return x;
}

bool MatCategory::valid_object(const Obj& x) const {
  if (x.dim < 0) return false;
  if (!group_) return x.action.empty();
  if (static_cast<int>(x.action.size()) != group_->order) return false;
  for (const auto& m : x.action) {
    if (m.rows() != x.dim || m.cols() != x.dim || !same_field(m.field(), field_)) return false;
    if (!is_invertible(m)) return false;
  }
  if (!x.action[static_cast<size_t>(group_->identity)].is_identity()) return false;
  for (int g = 0; g < group_->order; ++g)
    for (int h = 0; h < group_->order; ++h)
      if (x.action[static_cast<size_t>(g)] * x.action[static_cast<size_t>(h)] !=
          x.action[static_cast<size_t>(group_->mul(g, h))])
        return false;
  return true;
}

bool MatCategory::valid_morphism(const Obj& src, const Obj& dst, const RatMatrix& m) const {
  if (m.rows() != dst.dim || m.cols() != src.dim) return false;
  if (!same_field(m.field(), field_)) return false;
  if (group_) {
    for (int g = 0; g < group_->order; ++g)
      if (m * src.action[static_cast<size_t>(g)] != dst.action[static_cast<size_t>(g)] * m)
        return false;
  }
  return true;
}

void MatCategory::require_morphism(const Obj& src, const Obj& dst, const RatMatrix& m) const {
  if (!valid_morphism(src, dst, m)) throw Error("not a morphism of the category");
}

Obj MatCategory::tensor(const Obj& x, const Obj& y) const {
  Obj z;
  z.dim = x.dim * y.dim;
  if (group_) {
    for (int g = 0; g < group_->order; ++g)
      z.action.push_back(x.action[static_cast<size_t>(g)].kron(y.action[static_cast<size_t>(g)]));
  }
  return z;
}

Obj MatCategory::dsum(const Obj& x, const Obj& y) const {
  Obj z;
  z.dim = x.dim + y.dim;
  if (group_) {
    for (int g = 0; g < group_->order; ++g)
      z.action.push_back(x.action[static_cast<size_t>(g)].dsum(y.action[static_cast<size_t>(g)]));
  }
  return z;
}

RatMatrix MatCategory::incl1(const Obj& x, const Obj& y) const {
  return RatMatrix::identity(x.dim, field_).vstack(RatMatrix::zero(y.dim, x.dim, field_));
}
RatMatrix MatCategory::incl2(const Obj& x, const Obj& y) const {
  return RatMatrix::zero(x.dim, y.dim, field_).vstack(RatMatrix::identity(y.dim, field_));
}
RatMatrix MatCategory::proj1(const Obj& x, const Obj& y) const {
  return RatMatrix::identity(x.dim, field_).hstack(RatMatrix::zero(x.dim, y.dim, field_));
}
RatMatrix MatCategory::proj2(const Obj& x, const Obj& y) const {
  return RatMatrix::zero(y.dim, x.dim, field_).hstack(RatMatrix::identity(y.dim, field_));
}

RatMatrix MatCategory::symmetry(const Obj& x, const Obj& y) const {
  RatMatrix s(x.dim * y.dim, x.dim * y.dim, field_);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j)
      s.at(j * x.dim + i, i * y.dim + j) = FieldElement::constant(field_, 1);
  return s;
}

DualData MatCategory::dual_object(const Obj& x) const {
  DualData d;
  d.dual.dim = x.dim;
  if (group_) {
    for (const auto& m : x.action) d.dual.action.push_back(inverse(m).transpose());
  }
  // ev : X* (x) X -> 1, (xi, v) -> xi(v); coev : 1 -> X (x) X*
  RatMatrix ev(1, x.dim * x.dim, field_);
  RatMatrix coev(x.dim * x.dim, 1, field_);
  for (int i = 0; i < x.dim; ++i) {
    ev.at(0, i * x.dim + i) = FieldElement::constant(field_, 1);
    coev.at(i * x.dim + i, 0) = FieldElement::constant(field_, 1);
  }
  d.ev = ev;
  d.coev = coev;
  return d;
}

std::vector<RatMatrix> MatCategory::hom_basis(const Obj& src, const Obj& dst) const {
  std::vector<RatMatrix> out;
  if (!group_) {
    for (int i = 0; i < dst.dim; ++i)
      for (int j = 0; j < src.dim; ++j) {
        RatMatrix e(dst.dim, src.dim, field_);
        e.at(i, j) = FieldElement::constant(field_, 1);
        out.push_back(e);
      }
    return out;
  }
  // equivariance: dst.action[g] * F - F * src.action[g] = 0 for all g.
  // Unknowns = entries of F (row-major), as a linear system over the field.
  const int nunk = dst.dim * src.dim;
  std::vector<RatMatrix> rows;
  RatMatrix sys(group_->order * nunk, nunk, field_);
  int r = 0;
  for (int g = 0; g < group_->order; ++g) {
    const RatMatrix& a = dst.action[static_cast<size_t>(g)];
    const RatMatrix& b = src.action[static_cast<size_t>(g)];
    // (A F - F B)(i, j) = sum_k A(i,k) F(k,j) - sum_k F(i,k) B(k,j)
    for (int i = 0; i < dst.dim; ++i)
      for (int j = 0; j < src.dim; ++j) {
        for (int k = 0; k < dst.dim; ++k)
          sys.at(r, k * src.dim + j) = sys.at(r, k * src.dim + j) + a.at(i, k);
        for (int k = 0; k < src.dim; ++k)
          sys.at(r, i * src.dim + k) = sys.at(r, i * src.dim + k) - b.at(k, j);
        ++r;
      }
  }
  auto dec = mat_rank_kernel_image(sys);
  for (int c = 0; c < dec.kernel_basis.cols(); ++c) {
    RatMatrix f(dst.dim, src.dim, field_);
    for (int i = 0; i < dst.dim; ++i)
      for (int j = 0; j < src.dim; ++j) f.at(i, j) = dec.kernel_basis.at(i * src.dim + j, c);
    out.push_back(f);
  }
  return out;
}

std::vector<RatMatrix> MatCategory::hom_basis_q(const Obj& src, const Obj& dst) const {
  auto fb = hom_basis(src, dst);
  int d = field_degree(field_);
  if (d == 1) return fb;
  std::vector<RatMatrix> out;
  FieldElement theta = FieldElement::generator(field_);
  for (const auto& m : fb) {
    FieldElement pw = FieldElement::constant(field_, 1);
    for (int t = 0; t < d; ++t) {
      out.push_back(m.scaled(pw));
      pw = pw * theta;
    }
  }
  return out;
}

std::vector<Rational> coords_in_q_basis(const std::vector<RatMatrix>& basis, const RatMatrix& m) {
  RatMatrix big = flatten_columns_q(basis);
  auto target = flatten_q(m);
  RatMatrix b(static_cast<int>(target.size()), 1, nullptr);
  for (size_t i = 0; i < target.size(); ++i)
    b.at(static_cast<int>(i), 0) = FieldElement::constant(nullptr, target[i]);
  auto sol = solve_linear(big, b);
  if (!sol) throw Error("morphism is not in the span of the basis");
  std::vector<Rational> out;
  for (int i = 0; i < sol->particular.rows(); ++i)
    out.push_back(sol->particular.at(i, 0).rational_part());
  return out;
}

RatMatrix combine_q_basis(const std::vector<RatMatrix>& basis, const std::vector<Rational>& coords) {
  if (basis.empty()) throw Error("empty basis");
  RatMatrix acc = RatMatrix::zero(basis[0].rows(), basis[0].cols(), basis[0].field());
  for (size_t i = 0; i < basis.size(); ++i) acc = acc + basis[i].scaled(coords[i]);
  return acc;
}

}  // namespace galdesc
