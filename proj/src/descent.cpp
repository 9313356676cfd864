#include "galdesc/descent.hpp"

#include <random>

#include "galdesc/errors.hpp"

namespace galdesc {

namespace {

// vec of a matrix over its own field, row-major, as a column
RatMatrix vec_entries(const RatMatrix& m) {
  RatMatrix out(m.rows() * m.cols(), 1, m.field());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i * m.cols() + j, 0) = m.at(i, j);
  return out;
}

}  // namespace

DescentEngine::DescentEngine(SettingPtr setting) : setting_(std::move(setting)) {}

Obj DescentEngine::n_units(int n) const {
  const MatCategory& up = setting_->upstairs();
  if (!up.is_rep_category()) return up.object(n);
  std::vector<RatMatrix> act(static_cast<size_t>(up.group().order),
                             RatMatrix::identity(n, up.field()));
  return up.object(n, std::move(act));
}

DescentDatum DescentEngine::canonical_datum(const Obj& a) const {
  DescentDatum d;
  d.c = setting_->pull_obj(a);
  d.b.reserve(static_cast<size_t>(gamma().order));
  for (int g = 0; g < gamma().order; ++g) d.b.push_back(setting_->comparison(g, a));
  return d;
}

bool DescentEngine::datum_valid(const DescentDatum& d) const {
  const GroupTable& grp = gamma();
  if (!setting_->upstairs().valid_object(d.c)) return false;
  if (static_cast<int>(d.b.size()) != grp.order) return false;
  for (int g = 0; g < grp.order; ++g) {
    const Obj tw = setting_->twist_obj(g, d.c);
    if (!setting_->upstairs().valid_morphism(tw, d.c, d.b[static_cast<size_t>(g)])) return false;
    if (!is_invertible(d.b[static_cast<size_t>(g)])) return false;
  }
  if (!d.b[static_cast<size_t>(grp.identity)].is_identity()) return false;
  for (int g = 0; g < grp.order; ++g)
    for (int h = 0; h < grp.order; ++h) {
      RatMatrix lhs = d.b[static_cast<size_t>(h)] * setting_->twist_mor(h, d.b[static_cast<size_t>(g)]);
      RatMatrix rhs =
          d.b[static_cast<size_t>(grp.mul(g, h))] * setting_->cocycle(g, h, d.c);
      if (lhs != rhs) return false;
    }
  return true;
}

void DescentEngine::require_valid(const DescentDatum& d) const {
  if (!datum_valid(d)) throw CocycleViolation();
}

RatMatrix DescentEngine::twist_hom(int g, const DescentDatum& x, const DescentDatum& y,
                                   const RatMatrix& phi) const {
  return y.b[static_cast<size_t>(g)] * setting_->twist_mor(g, phi) *
         inverse(x.b[static_cast<size_t>(g)]);
}

RatMatrix DescentEngine::counit_g(int g, const DescentDatum& d) const {
  const Obj fc = setting_->push_obj(d.c);
  return d.b[static_cast<size_t>(g)] * setting_->twist_mor(g, setting_->counit(d.c)) *
         inverse(setting_->comparison(g, fc));
}

RatMatrix DescentEngine::bracket(int g, const DescentDatum& d) const {
  const Obj fc = setting_->push_obj(d.c);
  return setting_->push_mor(setting_->pull_obj(fc), d.c, counit_g(g, d)) * setting_->unit(fc);
}

RatMatrix DescentEngine::averaging_idempotent(const DescentDatum& d) const {
  const int n = gamma().order;
  RatMatrix sum = bracket(0, d);
  for (int g = 1; g < n; ++g) sum = sum + bracket(g, d);
  return sum.scaled(Rational(1) / Rational(n));
}

DescentEngine::Cartesian DescentEngine::cartesian(const Obj& c) const {
  const Obj fc = setting_->push_obj(c);
  const RatMatrix eps = setting_->counit(c);
  RatMatrix u;
  for (int g = 0; g < gamma().order; ++g) {
    RatMatrix ug = setting_->twist_mor(g, eps) * inverse(setting_->comparison(g, fc));
    u = (g == 0) ? ug : u.vstack(ug);
  }
  if (!is_invertible(u)) throw NotCartesian();
  Cartesian cart;
  cart.u_inverse = inverse(u);
  cart.sigma = cart.u_inverse.block(0, gamma().identity * c.dim, u.cols(), c.dim);
  cart.u = std::move(u);
  return cart;
}

RatMatrix DescentEngine::twisted_splitting(const DescentDatum& d) const {
  RatMatrix out;
  for (int g = 0; g < gamma().order; ++g) {
    RatMatrix row = counit_g(g, d);
    out = (g == 0) ? row : out.vstack(row);
  }
  return out;
}

RatMatrix DescentEngine::weak_projection(const Obj& a) const {
  const MatCategory& down = setting_->base();
  const Obj r = setting_->push_obj(down.unit());
  const Obj ar = down.tensor(a, r);
  const Obj pa = setting_->pull_obj(a);
  // f* is strictly monoidal: f*(A (x) f_+1) = f*A (x) f*f_+1 on the nose
  RatMatrix phi = RatMatrix::identity(pa.dim, setting_->upstairs().field())
                      .kron(setting_->counit(down.unit()));
  RatMatrix w = setting_->push_mor(setting_->pull_obj(ar), pa, phi) * setting_->unit(ar);
  if (!is_invertible(w)) throw WeakProjectionFails();
  return w;
}

RatMatrix DescentEngine::trace_map(const Obj& a) const {
  RatMatrix w = weak_projection(a);
  return RatMatrix::identity(a.dim, setting_->base().field()).kron(setting_->weak_trace()) *
         inverse(w);
}

DescentResult DescentEngine::descend(const DescentDatum& d) const {
  require_valid(d);
  const MatCategory& down = setting_->base();
  const Obj fc = setting_->push_obj(d.c);
  RatMatrix e = averaging_idempotent(d);
  IdempotentSplitting split = split_idempotent(e);

  Obj b;
  if (down.is_rep_category()) {
    std::vector<RatMatrix> act;
    act.reserve(fc.action.size());
    for (const RatMatrix& rho : fc.action)
      act.push_back(split.projection * rho * split.inclusion);
    b = down.object(split.image_dim, std::move(act));
  } else {
    b = down.object(split.image_dim);
  }

  DescentResult res;
  res.descended = b;
  res.iso = setting_->counit(d.c) * setting_->pull_mor(split.inclusion);
  // inverse: fold the twisted copies back with b^{-1}, invert the splitting
  RatMatrix delta;
  for (int g = 0; g < gamma().order; ++g) {
    RatMatrix row = inverse(d.b[static_cast<size_t>(g)]);
    delta = (g == 0) ? row : delta.vstack(row);
  }
  Cartesian cart = cartesian(d.c);
  res.iso_inverse = setting_->pull_mor(split.projection) * cart.u_inverse * delta;
  res.idempotent = std::move(e);
  res.splitting = std::move(split);
  return res;
}

std::vector<RatMatrix> DescentEngine::invariant_homs(const DescentDatum& x,
                                                     const DescentDatum& y) const {
  const MatCategory& up = setting_->upstairs();
  const GroupTable& grp = gamma();
  std::vector<RatMatrix> out;
  if (setting_->twist_fixes_entries()) {
    // twist-invariance is linear over the coefficient field
    std::vector<RatMatrix> basis = up.hom_basis(x.c, y.c);
    const int m = static_cast<int>(basis.size());
    if (m == 0) return out;
    RatMatrix bmat = vec_entries(basis[0]);
    for (int j = 1; j < m; ++j) bmat = bmat.hstack(vec_entries(basis[static_cast<size_t>(j)]));
    RatMatrix sys;
    bool have = false;
    for (int g = 0; g < grp.order; ++g) {
      if (g == grp.identity) continue;
      RatMatrix mg(m, m, up.field());
      for (int j = 0; j < m; ++j) {
        RatMatrix tv = vec_entries(twist_hom(g, x, y, basis[static_cast<size_t>(j)]));
        auto sol = solve_linear(bmat, tv);
        if (!sol) throw Error("twisted morphism left the hom space");
        for (int i = 0; i < m; ++i) mg.at(i, j) = sol->particular.at(i, 0);
      }
      RatMatrix diff = mg - RatMatrix::identity(m, up.field());
      sys = have ? sys.vstack(diff) : diff;
      have = true;
    }
    if (!have) return basis;  // trivial group
    RankDecomposition rd = mat_rank_kernel_image(sys);
    for (int j = 0; j < rd.kernel_basis.cols(); ++j) {
      RatMatrix acc = RatMatrix::zero(y.c.dim, x.c.dim, up.field());
      for (int i = 0; i < m; ++i)
        acc = acc + basis[static_cast<size_t>(i)].scaled(rd.kernel_basis.at(i, j));
      out.push_back(std::move(acc));
    }
  } else {
    // semilinear twist: restrict scalars and solve over Q
    std::vector<RatMatrix> basis = up.hom_basis_q(x.c, y.c);
    const int m = static_cast<int>(basis.size());
    if (m == 0) return out;
    RatMatrix sys;
    bool have = false;
    for (int g = 0; g < grp.order; ++g) {
      if (g == grp.identity) continue;
      RatMatrix mg(m, m, nullptr);
      for (int j = 0; j < m; ++j) {
        std::vector<Rational> coords =
            coords_in_q_basis(basis, twist_hom(g, x, y, basis[static_cast<size_t>(j)]));
        for (int i = 0; i < m; ++i) mg.at(i, j) = FieldElement::constant(nullptr, coords[static_cast<size_t>(i)]);
      }
      RatMatrix diff = mg - RatMatrix::identity(m, nullptr);
      sys = have ? sys.vstack(diff) : diff;
      have = true;
    }
    if (!have) return basis;
    RankDecomposition rd = mat_rank_kernel_image(sys);
    for (int j = 0; j < rd.kernel_basis.cols(); ++j) {
      std::vector<Rational> coords;
      coords.reserve(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) coords.push_back(rd.kernel_basis.at(i, j).rational_part());
      out.push_back(combine_q_basis(basis, coords));
    }
  }
  return out;
}

RatMatrix DescentEngine::hom_alpha_inverse(const Obj& a, const Obj& b,
                                           const RatMatrix& psi) const {
  RatMatrix t = trace_map(b) * setting_->push_mor(setting_->pull_obj(a), setting_->pull_obj(b), psi) *
                setting_->unit(a);
  return t.scaled(Rational(1) / Rational(gamma().order));
}

RatMatrix DescentEngine::retraction_rho(const Obj& c, const RatMatrix& v) const {
  return setting_->counit(c) * setting_->pull_mor(v) * cartesian(c).sigma;
}

bool DescentEngine::image_criterion(const RatMatrix& v_at_one,
                                    const RatMatrix& v_at_push_one) const {
  const RatMatrix eps = setting_->counit(setting_->base().unit());
  return setting_->pull_mor(v_at_one) * eps == eps * setting_->pull_mor(v_at_push_one);
}

RatMatrix DescentEngine::artin_witness(const Obj& a) const {
  const Obj p = setting_->pull_obj(a);
  for (const RatMatrix& rho : p.action)
    if (!rho.is_identity()) throw NotArtin();
  return RatMatrix::identity(p.dim, setting_->upstairs().field());
}

ArtinImage DescentEngine::artin_functor(const Obj& a, const RatMatrix& witness) const {
  const Obj p = setting_->pull_obj(a);
  const Obj units = n_units(p.dim);
  setting_->upstairs().require_morphism(p, units, witness);
  if (!is_invertible(witness)) throw NotArtin();

  const GroupTable& grp = gamma();
  const bool fixed = setting_->twist_fixes_entries();
  ArtinImage img;
  img.rank = p.dim;
  img.action.reserve(static_cast<size_t>(grp.order));
  for (int g = 0; g < grp.order; ++g) {
    const int idx = fixed ? grp.inv(g) : g;
    RatMatrix m = witness * setting_->comparison(idx, a) *
                  inverse(setting_->twist_mor(idx, witness));
    if (fixed) {
      img.action.push_back(std::move(m));
    } else {
      // entries must descend to the base coefficients
      RatMatrix down(m.rows(), m.cols(), setting_->base().field());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          if (!m.at(i, j).is_rational()) throw NotArtin();
          down.at(i, j) =
              FieldElement::constant(setting_->base().field(), m.at(i, j).rational_part());
        }
      img.action.push_back(std::move(down));
    }
  }
  // the matrices must represent the group
  if (!img.action[static_cast<size_t>(grp.identity)].is_identity()) throw NotArtin();
  for (int g = 0; g < grp.order; ++g)
    for (int h = 0; h < grp.order; ++h)
      if (img.action[static_cast<size_t>(g)] * img.action[static_cast<size_t>(h)] !=
          img.action[static_cast<size_t>(grp.mul(g, h))])
        throw NotArtin();
  return img;
}

ArtinImage DescentEngine::artin_functor(const Obj& a) const {
  return artin_functor(a, artin_witness(a));
}

ArtinResult DescentEngine::artin_inverse(const ArtinImage& rep) const {
  const GroupTable& grp = gamma();
  if (static_cast<int>(rep.action.size()) != grp.order) throw NotArtin();
  const bool fixed = setting_->twist_fixes_entries();
  DescentDatum d;
  d.c = n_units(rep.rank);
  d.b.reserve(static_cast<size_t>(grp.order));
  for (int g = 0; g < grp.order; ++g)
    d.b.push_back(setting_->pull_mor(rep.action[static_cast<size_t>(fixed ? grp.inv(g) : g)]));
  require_valid(d);
  DescentResult res = descend(d);
  return ArtinResult{res.descended, res.iso};
}

DescentEngine::AdjointReport DescentEngine::left_adjoint_check(const Obj& a, const Obj& c) const {
  AdjointReport rep;
  const Obj fc = setting_->push_obj(c);
  RatMatrix first =
      trace_map(fc) * setting_->push_mor(c, setting_->pull_obj(fc), cartesian(c).sigma);
  rep.first_identity = first.is_identity();
  RatMatrix second = setting_->pull_mor(trace_map(a)) * cartesian(setting_->pull_obj(a)).sigma;
  rep.second_identity = second.is_identity();
  return rep;
}

DescentDatum DescentEngine::random_datum(const Obj& a, uint32_t seed) const {
  std::mt19937 eng(seed);
  const MatCategory& up = setting_->upstairs();
  const Obj p = setting_->pull_obj(a);
  std::vector<RatMatrix> basis = up.hom_basis(p, p);
  const int deg = field_degree(up.field());
  RatMatrix q;
  for (int attempt = 0; attempt < 256; ++attempt) {
    RatMatrix cand = RatMatrix::zero(p.dim, p.dim, up.field());
    for (const RatMatrix& bm : basis) {
      std::vector<Rational> coords(static_cast<size_t>(deg));
      for (Rational& r : coords) {
        const long num = static_cast<long>(eng() % 9) - 4;
        const long den = static_cast<long>(eng() % 3) + 1;
        r = Rational(num) / Rational(den);
      }
      cand = cand + bm.scaled(FieldElement(up.field(), std::move(coords)));
    }
    if (is_invertible(cand)) {
      q = std::move(cand);
      break;
    }
  }
  if (q.rows() == 0) throw Error("failed to sample an invertible coboundary");

  DescentDatum d;
  d.c = p;
  d.b.reserve(static_cast<size_t>(gamma().order));
  for (int g = 0; g < gamma().order; ++g)
    d.b.push_back(q * setting_->comparison(g, a) * inverse(setting_->twist_mor(g, q)));
  return d;
}

}  // namespace galdesc
