#include "galdesc/monoid.hpp"

#include "galdesc/errors.hpp"
#include "galdesc/semilinear.hpp"

namespace galdesc {

namespace {

RatMatrix vec_col(const RatMatrix& m) {
  RatMatrix out(m.rows() * m.cols(), 1, m.field());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i * m.cols() + j, 0) = m.at(i, j);
  return out;
}

// X with inclusion * X = target, column by column; throws if impossible
RatMatrix solve_through(const RatMatrix& inclusion, const RatMatrix& target) {
  RatMatrix out(inclusion.cols(), target.cols(), inclusion.field());
  for (int j = 0; j < target.cols(); ++j) {
    auto sol = solve_linear(inclusion, target.col(j));
    if (!sol) throw Error("map does not factor through the inclusion");
    for (int i = 0; i < inclusion.cols(); ++i) out.at(i, j) = sol->particular.at(i, 0);
  }
  return out;
}

}  // namespace

bool valid_monoid(const MatCategory& cat, const MonoidObject& r) {
  if (!cat.valid_object(r.carrier)) return false;
  const Obj rr = cat.tensor(r.carrier, r.carrier);
  if (!cat.valid_morphism(rr, r.carrier, r.mu)) return false;
  if (!cat.valid_morphism(cat.unit(), r.carrier, r.eta)) return false;
  const RatMatrix idr = cat.id(r.carrier);
  if (r.mu * r.mu.kron(idr) != r.mu * idr.kron(r.mu)) return false;
  if (r.mu * r.eta.kron(idr) != idr) return false;
  if (r.mu * idr.kron(r.eta) != idr) return false;
  if (r.commutative && r.mu * cat.symmetry(r.carrier, r.carrier) != r.mu) return false;
  return true;
}

bool valid_module(const MatCategory& cat, const ModuleObject& x) {
  if (!valid_monoid(cat, x.monoid)) return false;
  if (!cat.valid_object(x.carrier)) return false;
  const MonoidObject& r = x.monoid;
  const Obj rx = cat.tensor(r.carrier, x.carrier);
  if (!cat.valid_morphism(rx, x.carrier, x.nu)) return false;
  const RatMatrix idx = cat.id(x.carrier);
  if (x.nu * r.mu.kron(idx) != x.nu * cat.id(r.carrier).kron(x.nu)) return false;
  if (x.nu * r.eta.kron(idx) != idx) return false;
  return true;
}

bool valid_monoid_morphism(const MatCategory& cat, const MonoidMorphism& phi) {
  if (!valid_monoid(cat, phi.source) || !valid_monoid(cat, phi.target)) return false;
  if (!cat.valid_morphism(phi.source.carrier, phi.target.carrier, phi.map)) return false;
  if (phi.map * phi.source.mu != phi.target.mu * phi.map.kron(phi.map)) return false;
  if (phi.map * phi.source.eta != phi.target.eta) return false;
  return true;
}

void require_monoid(const MatCategory& cat, const MonoidObject& r) {
  if (!valid_monoid(cat, r)) throw BadMonoidMap("monoid axioms violated");
}

void require_module(const MatCategory& cat, const ModuleObject& x) {
  if (!valid_module(cat, x)) throw BadMonoidMap("module axioms violated");
}

void require_monoid_morphism(const MatCategory& cat, const MonoidMorphism& phi) {
  if (!valid_monoid_morphism(cat, phi)) throw BadMonoidMap();
}

MonoidObject unit_monoid(const MatCategory& cat) {
  MonoidObject r;
  r.carrier = cat.unit();
  r.mu = RatMatrix::identity(1, cat.field());
  r.eta = RatMatrix::identity(1, cat.field());
  return r;
}

MonoidObject monoid_from_direct_image(const DescentSetting& s) {
  const MatCategory& down = s.base();
  MonoidObject r;
  r.carrier = s.push_obj(down.unit());
  r.eta = s.unit(down.unit());
  const Obj rr = down.tensor(r.carrier, r.carrier);
  const RatMatrix eps = s.counit(down.unit());
  r.mu = s.push_mor(s.pull_obj(rr), down.unit(), eps.kron(eps)) * s.unit(rr);
  require_monoid(down, r);
  return r;
}

ModuleObject free_module(const MatCategory& cat, const MonoidObject& r, const Obj& x0) {
  ModuleObject x;
  x.monoid = r;
  x.carrier = cat.tensor(r.carrier, x0);
  x.nu = r.mu.kron(RatMatrix::identity(x0.dim, cat.field()));
  return x;
}

ModuleObject regular_module(const MatCategory& cat, const MonoidObject& r) {
  ModuleObject x;
  x.monoid = r;
  x.carrier = r.carrier;
  x.nu = r.mu;
  (void)cat;
  return x;
}

QuotientPresentation quotient_by_image(const MatCategory& cat, const Obj& x,
                                       const RatMatrix& into_x) {
  if (into_x.rows() != x.dim) throw ShapeError();
  RankDecomposition rd = mat_rank_kernel_image(into_x);
  const int n = x.dim;
  const int r = rd.rank;
  // pivot rows of the column-echelon image basis
  std::vector<bool> pivot(static_cast<size_t>(n), false);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i)
      if (!rd.image_basis.at(i, j).is_zero()) {
        pivot[static_cast<size_t>(i)] = true;
        break;
      }
  // basis of x: image columns, then standard vectors at the non-pivot rows
  RatMatrix b(n, n, cat.field());
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) b.at(i, j) = rd.image_basis.at(i, j);
  RatMatrix section(n, n - r, cat.field());
  int col = r;
  for (int i = 0; i < n; ++i)
    if (!pivot[static_cast<size_t>(i)]) {
      b.at(i, col) = FieldElement::constant(cat.field(), rat(1));
      section.at(i, col - r) = FieldElement::constant(cat.field(), rat(1));
      ++col;
    }
  RatMatrix projection = inverse(b).block(r, 0, n - r, n);

  QuotientPresentation q;
  if (cat.is_rep_category()) {
    std::vector<RatMatrix> act;
    act.reserve(x.action.size());
    for (const RatMatrix& rho : x.action) act.push_back(projection * rho * section);
    q.carrier = cat.object(n - r, std::move(act));
  } else {
    q.carrier = cat.object(n - r);
  }
  q.projection = std::move(projection);
  q.section = std::move(section);
  return q;
}

TensorOverR tensor_over_R(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y) {
  if (!(x.monoid == y.monoid)) throw MonoidMismatch();
  const MonoidObject& r = x.monoid;
  const RatMatrix idx = cat.id(x.carrier);
  const RatMatrix idy = cat.id(y.carrier);
  // X (x) R (x) Y => X (x) Y : act on the left or on the right factor
  RatMatrix act_left = (x.nu * cat.symmetry(x.carrier, r.carrier)).kron(idy);
  RatMatrix act_right = idx.kron(y.nu);
  QuotientPresentation q =
      quotient_by_image(cat, cat.tensor(x.carrier, y.carrier), act_left - act_right);

  TensorOverR t;
  t.module.monoid = r;
  t.module.carrier = q.carrier;
  t.module.nu = q.projection * x.nu.kron(idy) * cat.id(r.carrier).kron(q.section);
  t.projection = std::move(q.projection);
  t.section = std::move(q.section);
  require_module(cat, t.module);
  return t;
}

RatMatrix tensor_over_R_mor(const TensorOverR& src, const TensorOverR& dst,
                            const RatMatrix& phi, const RatMatrix& psi) {
  return dst.projection * phi.kron(psi) * src.section;
}

IsoPair unit_left_iso(const MatCategory& cat, const ModuleObject& x) {
  TensorOverR t = tensor_over_R(cat, regular_module(cat, x.monoid), x);
  IsoPair p;
  p.forward = x.nu * t.section;
  p.backward = t.projection * x.monoid.eta.kron(cat.id(x.carrier));
  return p;
}

IsoPair unit_right_iso(const MatCategory& cat, const ModuleObject& x) {
  TensorOverR t = tensor_over_R(cat, x, regular_module(cat, x.monoid));
  IsoPair p;
  p.forward = x.nu * cat.symmetry(x.carrier, x.monoid.carrier) * t.section;
  p.backward = t.projection * cat.id(x.carrier).kron(x.monoid.eta);
  return p;
}

IsoPair symmetry_iso(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y) {
  TensorOverR txy = tensor_over_R(cat, x, y);
  TensorOverR tyx = tensor_over_R(cat, y, x);
  IsoPair p;
  p.forward = tyx.projection * cat.symmetry(x.carrier, y.carrier) * txy.section;
  p.backward = txy.projection * cat.symmetry(y.carrier, x.carrier) * tyx.section;
  return p;
}

IsoPair assoc_iso(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y,
                  const ModuleObject& z) {
  TensorOverR txy = tensor_over_R(cat, x, y);
  TensorOverR txy_z = tensor_over_R(cat, txy.module, z);
  TensorOverR tyz = tensor_over_R(cat, y, z);
  TensorOverR tx_yz = tensor_over_R(cat, x, tyz.module);
  const RatMatrix idx = cat.id(x.carrier);
  const RatMatrix idz = cat.id(z.carrier);
  IsoPair p;
  p.forward = tx_yz.projection * idx.kron(tyz.projection) * txy.section.kron(idz) * txy_z.section;
  p.backward = txy_z.projection * txy.projection.kron(idz) * idx.kron(tyz.section) * tx_yz.section;
  return p;
}

DualModule dual_module(const MatCategory& cat, const ModuleObject& x) {
  const MonoidObject& r = x.monoid;
  DualData dd = cat.dual_object(x.carrier);
  const int n = x.carrier.dim;
  const int rd = r.carrier.dim;
  const FieldPtr& f = cat.field();
  const RatMatrix idn = RatMatrix::identity(n, f);

  // nu on the dual: insert coevaluation, act on X, evaluate
  RatMatrix s1 = RatMatrix::identity(rd * n, f).kron(dd.coev);
  RatMatrix s2 = RatMatrix::identity(rd, f).kron(cat.symmetry(dd.dual, x.carrier).kron(idn));
  RatMatrix s3 = x.nu.kron(RatMatrix::identity(n * n, f));
  RatMatrix s4 = cat.symmetry(x.carrier, dd.dual).kron(idn);
  RatMatrix s5 = dd.ev.kron(idn);

  DualModule out;
  out.dual.monoid = r;
  out.dual.carrier = dd.dual;
  out.dual.nu = s5 * s4 * s3 * s2 * s1;
  require_module(cat, out.dual);

  ModuleObject reg = regular_module(cat, r);
  TensorOverR t_dx = tensor_over_R(cat, out.dual, x);
  TensorOverR t_xd = tensor_over_R(cat, x, out.dual);

  // coevaluation over R: push the base coevaluation through the action
  out.coev = t_xd.projection * x.nu.kron(idn) * cat.id(r.carrier).kron(dd.coev);

  // evaluation over R: the unique module map satisfying both zig-zags
  std::vector<RatMatrix> cands = module_hom_basis(cat, t_dx.module, reg);
  if (cands.empty()) throw Error("no candidate evaluation for the dual module");

  // zig-zag on X: X -> R(x)_R X -> (X(x)_R X*)(x)_R X -> X(x)_R (X*(x)_R X) -> X(x)_R R -> X
  TensorOverR t_rx = tensor_over_R(cat, reg, x);
  TensorOverR t_xd_x = tensor_over_R(cat, t_xd.module, x);
  TensorOverR t_x_dx = tensor_over_R(cat, x, t_dx.module);
  TensorOverR t_xr = tensor_over_R(cat, x, reg);
  IsoPair lam_x = unit_left_iso(cat, x);
  IsoPair rho_x = unit_right_iso(cat, x);
  IsoPair a_xdx = assoc_iso(cat, x, out.dual, x);
  RatMatrix pre_x = a_xdx.forward *
                    tensor_over_R_mor(t_rx, t_xd_x, out.coev, cat.id(x.carrier)) *
                    lam_x.backward;

  // zig-zag on X*: X* -> X*(x)_R R -> X*(x)_R (X(x)_R X*) -> (X*(x)_R X)(x)_R X* -> R(x)_R X* -> X*
  TensorOverR t_dr = tensor_over_R(cat, out.dual, reg);
  TensorOverR t_d_xd = tensor_over_R(cat, out.dual, t_xd.module);
  TensorOverR t_dx_d = tensor_over_R(cat, t_dx.module, out.dual);
  TensorOverR t_rd = tensor_over_R(cat, reg, out.dual);
  IsoPair lam_d = unit_left_iso(cat, out.dual);
  IsoPair rho_d = unit_right_iso(cat, out.dual);
  IsoPair a_dxd = assoc_iso(cat, out.dual, x, out.dual);
  RatMatrix pre_d = a_dxd.backward *
                    tensor_over_R_mor(t_dr, t_d_xd, cat.id(dd.dual), out.coev) *
                    rho_d.backward;

  // both zig-zag outcomes are linear in the unknown evaluation map
  RatMatrix sys, rhs;
  bool have = false;
  for (const RatMatrix& h : cands) {
    RatMatrix z2 = rho_x.forward * tensor_over_R_mor(t_x_dx, t_xr, cat.id(x.carrier), h) * pre_x;
    RatMatrix z1 = lam_d.forward * tensor_over_R_mor(t_dx_d, t_rd, h, cat.id(dd.dual)) * pre_d;
    RatMatrix colv = vec_col(z2).vstack(vec_col(z1));
    sys = have ? sys.hstack(colv) : colv;
    have = true;
  }
  RatMatrix target = vec_col(RatMatrix::identity(n, f)).vstack(vec_col(idn));
  auto sol = solve_linear(sys, target);
  if (!sol) throw Error("dual module has no evaluation satisfying the zig-zags");
  RatMatrix ev = RatMatrix::zero(rd, t_dx.module.carrier.dim, f);
  for (size_t i = 0; i < cands.size(); ++i)
    ev = ev + cands[i].scaled(sol->particular.at(static_cast<int>(i), 0));
  out.ev = std::move(ev);
  return out;
}

ExtendedModule extend_scalars(const MatCategory& cat, const MonoidMorphism& phi,
                              const ModuleObject& x) {
  require_monoid_morphism(cat, phi);
  if (!(x.monoid == phi.source)) throw MonoidMismatch();
  const MonoidObject& s = phi.target;
  const RatMatrix ids = cat.id(s.carrier);
  const RatMatrix idx = cat.id(x.carrier);
  RatMatrix m1 = ids.kron(x.nu);
  RatMatrix m2 = s.mu.kron(idx) * ids.kron(phi.map.kron(idx));
  QuotientPresentation q =
      quotient_by_image(cat, cat.tensor(s.carrier, x.carrier), m1 - m2);

  ExtendedModule out;
  out.module.monoid = s;
  out.module.carrier = q.carrier;
  out.module.nu = q.projection * s.mu.kron(idx) * ids.kron(q.section);
  out.unit = q.projection * s.eta.kron(idx);
  out.projection = std::move(q.projection);
  out.section = std::move(q.section);
  require_module(cat, out.module);
  return out;
}

RatMatrix extend_hom_forward(const ExtendedModule& ext, const RatMatrix& h) {
  return h * ext.unit;
}

RatMatrix extend_hom_backward(const MatCategory& cat, const MonoidMorphism& phi,
                              const ModuleObject& x, const ExtendedModule& ext,
                              const ModuleObject& y, const RatMatrix& k) {
  (void)phi;
  (void)x;
  RatMatrix lift = y.nu * cat.id(ext.module.monoid.carrier).kron(k);
  RatMatrix h = lift * ext.section;
  if (h * ext.projection != lift) throw BadMonoidMap("map does not descend to the extension");
  return h;
}

std::vector<RatMatrix> module_hom_basis(const MatCategory& cat, const ModuleObject& x,
                                        const ModuleObject& y) {
  if (!(x.monoid == y.monoid)) throw MonoidMismatch();
  std::vector<RatMatrix> basis = cat.hom_basis(x.carrier, y.carrier);
  std::vector<RatMatrix> out;
  if (basis.empty()) return out;
  const RatMatrix idr = cat.id(x.monoid.carrier);
  RatMatrix sys;
  bool have = false;
  for (const RatMatrix& b : basis) {
    RatMatrix defect = b * x.nu - y.nu * idr.kron(b);
    RatMatrix colv = vec_col(defect);
    sys = have ? sys.hstack(colv) : colv;
    have = true;
  }
  RankDecomposition rd = mat_rank_kernel_image(sys);
  for (int j = 0; j < rd.kernel_basis.cols(); ++j) {
    RatMatrix acc = RatMatrix::zero(y.carrier.dim, x.carrier.dim, cat.field());
    for (size_t i = 0; i < basis.size(); ++i)
      acc = acc + basis[i].scaled(rd.kernel_basis.at(static_cast<int>(i), j));
    out.push_back(std::move(acc));
  }
  return out;
}

ModuleKernel module_kernel(const MatCategory& cat, const ModuleObject& x, const ModuleObject& y,
                           const RatMatrix& h) {
  if (!(x.monoid == y.monoid)) throw MonoidMismatch();
  cat.require_morphism(x.carrier, y.carrier, h);
  RankDecomposition rd = mat_rank_kernel_image(h);
  const RatMatrix& inc = rd.kernel_basis;
  ModuleKernel out;
  out.module.monoid = x.monoid;
  if (cat.is_rep_category()) {
    std::vector<RatMatrix> act;
    for (const RatMatrix& rho : x.carrier.action) act.push_back(solve_through(inc, rho * inc));
    out.module.carrier = cat.object(inc.cols(), std::move(act));
  } else {
    out.module.carrier = cat.object(inc.cols());
  }
  out.module.nu = solve_through(inc, x.nu * cat.id(x.monoid.carrier).kron(inc));
  out.inclusion = inc;
  require_module(cat, out.module);
  return out;
}

ModuleCokernel module_cokernel(const MatCategory& cat, const ModuleObject& x,
                               const ModuleObject& y, const RatMatrix& h) {
  if (!(x.monoid == y.monoid)) throw MonoidMismatch();
  cat.require_morphism(x.carrier, y.carrier, h);
  QuotientPresentation q = quotient_by_image(cat, y.carrier, h);
  ModuleCokernel out;
  out.module.monoid = y.monoid;
  out.module.carrier = q.carrier;
  out.module.nu = q.projection * y.nu * cat.id(y.monoid.carrier).kron(q.section);
  out.projection = std::move(q.projection);
  require_module(cat, out.module);
  return out;
}

ModuleObject comparison_K(const DescentEngine& eng, const Obj& c) {
  const DescentSetting& s = eng.setting();
  MonoidObject r = monoid_from_direct_image(s);
  ModuleObject m;
  m.monoid = r;
  m.carrier = s.push_obj(c);
  RatMatrix push_eps = s.push_mor(s.pull_obj(m.carrier), c, s.counit(c));
  m.nu = push_eps * eng.weak_projection(m.carrier) * s.base().symmetry(r.carrier, m.carrier);
  require_module(s.base(), m);
  return m;
}

RatMatrix comparison_K_mor(const DescentEngine& eng, const Obj& src, const Obj& dst,
                           const RatMatrix& psi) {
  return eng.setting().push_mor(src, dst, psi);
}

RatMatrix comparison_K_hom_inverse(const DescentEngine& eng, const Obj& src, const Obj& dst,
                                   const RatMatrix& h) {
  const DescentSetting& s = eng.setting();
  return s.counit(dst) * s.pull_mor(h) * eng.cartesian(src).sigma;
}

ReconstructedObject comparison_K_inverse(const DescentEngine& eng, const ModuleObject& x) {
  const auto* sl = dynamic_cast<const SemilinearSetting*>(&eng.setting());
  if (sl == nullptr)
    throw Error("module reconstruction is implemented for semilinear settings only");
  require_module(sl->base(), x);
  const int d = sl->extension().degree();
  const int m = x.carrier.dim;
  if (m % d != 0) throw BadMonoidMap("carrier dimension is not a multiple of the field degree");
  const int n = m / d;

  // multiplication by the power-basis elements of the field
  std::vector<RatMatrix> t;
  for (int j = 0; j < d; ++j) {
    RatMatrix pick = RatMatrix::zero(d, 1, nullptr);
    pick.at(j, 0) = FieldElement::constant(nullptr, rat(1));
    t.push_back(x.nu * pick.kron(RatMatrix::identity(m, nullptr)));
  }

  // greedily assemble a basis adapted to the field action
  RatMatrix p(m, 0, nullptr);
  RatMatrix chosen;
  int filled = 0;
  for (int v = 0; v < m && filled < n; ++v) {
    RatMatrix cand = RatMatrix::zero(m, 1, nullptr);
    cand.at(v, 0) = FieldElement::constant(nullptr, rat(1));
    RatMatrix trial = filled == 0 ? cand : chosen.hstack(cand);
    if (mat_rank_kernel_image(trial).rank != filled * d + 1) continue;
    // append the whole orbit of the power basis
    RatMatrix block = t[0] * cand;
    for (int j = 1; j < d; ++j) block = block.hstack(t[static_cast<size_t>(j)] * cand);
    chosen = filled == 0 ? block : chosen.hstack(block);
    ++filled;
  }
  if (filled < n || !is_invertible(chosen))
    throw BadMonoidMap("module carrier is not free over the field action");

  ReconstructedObject out;
  out.upstairs = sl->upstairs().object(n);
  out.iso = chosen;
  // the assembled basis must transport the canonical module structure
  ModuleObject canon = comparison_K(eng, out.upstairs);
  if (out.iso * canon.nu !=
      x.nu * RatMatrix::identity(d, nullptr).kron(out.iso))
    throw BadMonoidMap("reconstructed action does not match the module structure");
  return out;
}

SplitCoequalizerReport split_coequalizer_check(const MatCategory& cat, const MonoidObject& r,
                                               const Obj& a) {
  const FieldPtr& f = cat.field();
  const int rd = r.carrier.dim;
  const int ad = a.dim;
  RatMatrix mu_a = r.mu.kron(RatMatrix::identity(ad, f));
  RatMatrix t_mu = RatMatrix::identity(rd, f).kron(mu_a);
  RatMatrix mu_t = r.mu.kron(RatMatrix::identity(rd * ad, f));
  RatMatrix s = r.eta.kron(RatMatrix::identity(rd * ad, f));
  RatMatrix t = r.eta.kron(RatMatrix::identity(rd * rd * ad, f));

  SplitCoequalizerReport rep;
  rep.fork_commutes = (mu_a * t_mu == mu_a * mu_t);
  rep.section_splits = (mu_a * s).is_identity();
  rep.top_splits = (mu_t * t).is_identity();
  rep.interchange = (t_mu * t == s * mu_a);
  return rep;
}

}  // namespace galdesc
