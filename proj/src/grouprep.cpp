#include "galdesc/grouprep.hpp"

#include <algorithm>
#include <array>

#include "galdesc/errors.hpp"

namespace galdesc {

GroupRepSetting::GroupRepSetting(GroupTable g, std::vector<int> subgroup, FieldPtr field)
    : g_(std::move(g)), h_elems_(std::move(subgroup)) {
  validate_group(g_);
  std::sort(h_elems_.begin(), h_elems_.end());
  if (h_elems_.empty() || h_elems_[0] != g_.identity)
    throw NonNormal("subgroup must contain the identity");
  pos_in_h_.assign(static_cast<size_t>(g_.order), -1);
  for (int i = 0; i < static_cast<int>(h_elems_.size()); ++i) {
    int x = h_elems_[static_cast<size_t>(i)];
    if (x < 0 || x >= g_.order || pos_in_h_[static_cast<size_t>(x)] != -1)
      throw BadGroupElement("bad subgroup element list");
    pos_in_h_[static_cast<size_t>(x)] = i;
  }
  for (int a : h_elems_)
    for (int b : h_elems_)
      if (pos_in_h_[static_cast<size_t>(g_.mul(a, b))] < 0)
        throw NonNormal("subgroup is not closed under multiplication");
  for (int x = 0; x < g_.order; ++x)
    for (int a : h_elems_)
      if (pos_in_h_[static_cast<size_t>(g_.mul(g_.mul(x, a), g_.inv(x)))] < 0) throw NonNormal();

  const int hn = static_cast<int>(h_elems_.size());
  std::vector<std::vector<int>> htab(static_cast<size_t>(hn), std::vector<int>(static_cast<size_t>(hn)));
  std::vector<std::string> hnames(static_cast<size_t>(hn));
  for (int i = 0; i < hn; ++i) {
    hnames[static_cast<size_t>(i)] = g_.names[static_cast<size_t>(h_elems_[static_cast<size_t>(i)])];
    for (int j = 0; j < hn; ++j)
      htab[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos_in_h_[static_cast<size_t>(
          g_.mul(h_elems_[static_cast<size_t>(i)], h_elems_[static_cast<size_t>(j)]))];
  }
  h_ = GroupTable::from_table(htab, hnames);

  // Left cosets in order of their smallest element; the identity coset
  // comes first and every transversal representative is that smallest
  // element, so the representative of the trivial coset is the identity.
  coset_of_.assign(static_cast<size_t>(g_.order), -1);
  for (int x = 0; x < g_.order; ++x) {
    if (coset_of_[static_cast<size_t>(x)] != -1) continue;
    int id = static_cast<int>(transversal_.size());
    transversal_.push_back(x);
    for (int a : h_elems_) coset_of_[static_cast<size_t>(g_.mul(x, a))] = id;
  }
  const int q = static_cast<int>(transversal_.size());
  std::vector<std::vector<int>> qtab(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  std::vector<std::string> qnames(static_cast<size_t>(q));
  for (int a = 0; a < q; ++a) {
    qnames[static_cast<size_t>(a)] = g_.names[static_cast<size_t>(transversal_[static_cast<size_t>(a)])];
    for (int b = 0; b < q; ++b)
      qtab[static_cast<size_t>(a)][static_cast<size_t>(b)] = coset_of_[static_cast<size_t>(
          g_.mul(transversal_[static_cast<size_t>(a)], transversal_[static_cast<size_t>(b)]))];
  }
  gamma_ = GroupTable::from_table(qtab, qnames);

  base_ = MatCategory(field, g_);
  up_ = MatCategory(std::move(field), h_);
}

int GroupRepSetting::h_index(int x) const {
  if (x < 0 || x >= g_.order || pos_in_h_[static_cast<size_t>(x)] < 0)
    throw BadGroupElement("element is not in the subgroup");
  return pos_in_h_[static_cast<size_t>(x)];
}

Obj GroupRepSetting::pull_obj(const Obj& a) const {
  std::vector<RatMatrix> act;
  act.reserve(h_elems_.size());
  for (int x : h_elems_) act.push_back(a.action[static_cast<size_t>(x)]);
  return up_.object(a.dim, std::move(act));
}

RatMatrix GroupRepSetting::pull_mor(const RatMatrix& phi) const { return phi; }

Obj GroupRepSetting::push_obj(const Obj& c) const {
  const int q = gamma_.order;
  const int n = c.dim;
  std::vector<RatMatrix> act;
  act.reserve(static_cast<size_t>(g_.order));
  for (int x = 0; x < g_.order; ++x) {
    RatMatrix m = RatMatrix::zero(q * n, q * n, base_.field());
    for (int a = 0; a < q; ++a) {
      int xta = g_.mul(x, transversal_[static_cast<size_t>(a)]);
      int b = coset_of_[static_cast<size_t>(xta)];
      int h = g_.mul(g_.inv(transversal_[static_cast<size_t>(b)]), xta);
      const RatMatrix& blk = c.action[static_cast<size_t>(h_index(h))];
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) m.at(b * n + r, a * n + s) = blk.at(r, s);
    }
    act.push_back(std::move(m));
  }
  return base_.object(q * n, std::move(act));
}

RatMatrix GroupRepSetting::push_mor(const Obj& src, const Obj& dst, const RatMatrix& phi) const {
  up_.require_morphism(src, dst, phi);
  RatMatrix out = phi;
  for (int a = 1; a < gamma_.order; ++a) out = out.dsum(phi);
  return out;
}

RatMatrix GroupRepSetting::unit(const Obj& a) const {
  RatMatrix out = a.action[static_cast<size_t>(g_.inv(transversal_[0]))];
  for (int b = 1; b < gamma_.order; ++b)
    out = out.vstack(a.action[static_cast<size_t>(g_.inv(transversal_[static_cast<size_t>(b)]))]);
  return out;
}

RatMatrix GroupRepSetting::counit(const Obj& c) const {
  RatMatrix out = RatMatrix::zero(c.dim, gamma_.order * c.dim, up_.field());
  for (int i = 0; i < c.dim; ++i) out.at(i, i) = FieldElement::constant(up_.field(), 1);
  return out;
}

Obj GroupRepSetting::twist_obj(int g, const Obj& c) const {
  gamma_.mul(g, g);
  int t = transversal_[static_cast<size_t>(g)];
  std::vector<RatMatrix> act;
  act.reserve(h_elems_.size());
  for (int x : h_elems_)
    act.push_back(c.action[static_cast<size_t>(h_index(g_.mul(g_.mul(t, x), g_.inv(t))))]);
  return up_.object(c.dim, std::move(act));
}

RatMatrix GroupRepSetting::twist_mor(int g, const RatMatrix& phi) const {
  gamma_.mul(g, g);
  return phi;
}

RatMatrix GroupRepSetting::comparison(int g, const Obj& a) const {
  return a.action[static_cast<size_t>(g_.inv(transversal_[static_cast<size_t>(g)]))];
}

RatMatrix GroupRepSetting::cocycle(int g, int h, const Obj& c) const {
  int gh = gamma_.mul(g, h);
  int m = g_.mul(transversal_[static_cast<size_t>(gh)],
                 g_.inv(g_.mul(transversal_[static_cast<size_t>(g)], transversal_[static_cast<size_t>(h)])));
  return c.action[static_cast<size_t>(h_index(m))];
}

RatMatrix GroupRepSetting::weak_trace() const {
  RatMatrix out(1, gamma_.order, up_.field());
  for (int a = 0; a < gamma_.order; ++a) out.at(0, a) = FieldElement::constant(up_.field(), 1);
  return out;
}

std::shared_ptr<GroupRepSetting> make_grouprep(GroupTable g, std::vector<int> subgroup,
                                               FieldPtr field) {
  return std::make_shared<GroupRepSetting>(std::move(g), std::move(subgroup), std::move(field));
}

Obj regular_object(const MatCategory& cat) {
  const GroupTable& grp = cat.group();
  std::vector<RatMatrix> act;
  act.reserve(static_cast<size_t>(grp.order));
  for (int x = 0; x < grp.order; ++x) {
    RatMatrix m = RatMatrix::zero(grp.order, grp.order, cat.field());
    for (int j = 0; j < grp.order; ++j) m.at(grp.mul(x, j), j) = FieldElement::constant(cat.field(), 1);
    act.push_back(std::move(m));
  }
  return cat.object(grp.order, std::move(act));
}

std::vector<Obj> s3_irreducibles(const MatCategory& cat) {
  const FieldPtr& k = cat.field();
  auto one = FieldElement::constant(k, 1);
  // element order matches GroupTable::symmetric3(): e, (01), (02), (12), (012), (021)
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<RatMatrix> triv, sign, stand;
  for (const auto& p : perms) {
    RatMatrix t(1, 1, k);
    t.at(0, 0) = one;
    triv.push_back(t);
    // parity: count inversions
    int inv = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (p[static_cast<size_t>(a)] > p[static_cast<size_t>(b)]) ++inv;
    RatMatrix s(1, 1, k);
    s.at(0, 0) = FieldElement::constant(k, inv % 2 ? -1 : 1);
    sign.push_back(s);
    // standard representation on the sum-zero plane with basis
    // v1 = e0 - e1, v2 = e1 - e2; a zero-sum vector x has coordinates (x0, -x2)
    RatMatrix m = RatMatrix::zero(2, 2, k);
    std::array<std::array<int, 2>, 2> basis = {{{0, 1}, {1, 2}}};
    for (int col = 0; col < 2; ++col) {
      std::array<int, 3> x = {0, 0, 0};
      x[static_cast<size_t>(p[static_cast<size_t>(basis[static_cast<size_t>(col)][0])])] += 1;
      x[static_cast<size_t>(p[static_cast<size_t>(basis[static_cast<size_t>(col)][1])])] -= 1;
      m.at(0, col) = FieldElement::constant(k, x[0]);
      m.at(1, col) = FieldElement::constant(k, -x[2]);
    }
    stand.push_back(m);
  }
  return {cat.object(1, std::move(triv)), cat.object(1, std::move(sign)),
          cat.object(2, std::move(stand))};
}

std::vector<Obj> d4_irreducibles(const MatCategory& cat) {
  const FieldPtr& k = cat.field();
  std::vector<Obj> out;
  // element order matches GroupTable::dihedral4(): r^i s^j at index i + 4j
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      std::vector<RatMatrix> act(8, RatMatrix(1, 1, k));
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 4; ++i) {
          int val = (a == -1 && i % 2 ? -1 : 1) * (b == -1 && j ? -1 : 1);
          act[static_cast<size_t>(i + 4 * j)].at(0, 0) = FieldElement::constant(k, val);
        }
      out.push_back(cat.object(1, std::move(act)));
    }
  RatMatrix rot = RatMatrix::zero(2, 2, k), flip = RatMatrix::zero(2, 2, k);
  rot.at(0, 1) = FieldElement::constant(k, -1);
  rot.at(1, 0) = FieldElement::constant(k, 1);
  flip.at(0, 0) = FieldElement::constant(k, 1);
  flip.at(1, 1) = FieldElement::constant(k, -1);
  std::vector<RatMatrix> plane;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      RatMatrix m = RatMatrix::identity(2, k);
      for (int t = 0; t < i; ++t) m = m * rot;
      if (j) m = m * flip;
      plane.push_back(std::move(m));
    }
  out.push_back(cat.object(2, std::move(plane)));
  return out;
}

std::shared_ptr<GroupRepSetting> s3_pair() {
  return make_grouprep(GroupTable::symmetric3(), {0, 4, 5},
                       NumberField::make({rat(1), rat(1), rat(1)}));
}

std::shared_ptr<GroupRepSetting> d4_pair() {
  return make_grouprep(GroupTable::dihedral4(), {0, 1, 2, 3},
                       NumberField::make({rat(1), rat(0), rat(1)}));
}

}  // namespace galdesc
