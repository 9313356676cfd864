#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galdesc/descent.hpp"
#include "galdesc/grouprep.hpp"
#include "galdesc/semilinear.hpp"
#include "helpers.hpp"

using namespace galdesc;
using galdesc::testing::Rng;

namespace {

// permutation matrices of left translation: a representation of any group
std::vector<RatMatrix> regular_perm_rep(const GroupTable& grp, const FieldPtr& field) {
  std::vector<RatMatrix> act;
  for (int g = 0; g < grp.order; ++g) {
    RatMatrix p = RatMatrix::zero(grp.order, grp.order, field);
    for (int h = 0; h < grp.order; ++h)
      p.at(grp.mul(g, h), h) = FieldElement::constant(field, rat(1));
    act.push_back(std::move(p));
  }
  return act;
}

void check_descend_roundtrip(const DescentEngine& eng, const DescentDatum& d) {
  REQUIRE(eng.datum_valid(d));
  DescentResult res = eng.descend(d);
  const DescentSetting& s = eng.setting();
  CHECK(res.descended.dim == d.c.dim);
  CHECK(s.base().valid_object(res.descended));
  CHECK((res.iso_inverse * res.iso).is_identity());
  CHECK((res.iso * res.iso_inverse).is_identity());
  // iso is a map of descent data: canonical on the result -> d
  DescentDatum canon = eng.canonical_datum(res.descended);
  for (int g = 0; g < s.gamma().order; ++g)
    CHECK(res.iso * canon.b[static_cast<size_t>(g)] ==
          d.b[static_cast<size_t>(g)] * s.twist_mor(g, res.iso));
}

void check_engine_basics(const DescentEngine& eng, const std::vector<Obj>& base_objs,
                         const std::vector<Obj>& up_objs) {
  const DescentSetting& s = eng.setting();
  const GroupTable& gam = eng.gamma();
  for (const Obj& a : base_objs) {
    DescentDatum canon = eng.canonical_datum(a);
    CHECK(eng.datum_valid(canon));
    check_descend_roundtrip(eng, canon);
    // trace against the unit of the adjunction
    RatMatrix t = eng.trace_map(a) * s.unit(a);
    CHECK(t == s.base().id(a).scaled(rat(gam.order)));
  }
  for (const Obj& c : up_objs) {
    auto cart = eng.cartesian(c);
    CHECK((cart.u * cart.u_inverse).is_identity());
    CHECK(s.counit(c) * cart.sigma == s.upstairs().id(c));
    auto adj = eng.left_adjoint_check(base_objs.front(), c);
    CHECK(adj.first_identity);
    CHECK(adj.second_identity);
  }
}

void check_bracket_laws(const DescentEngine& eng, const DescentDatum& d) {
  const GroupTable& gam = eng.gamma();
  CHECK(eng.bracket(gam.identity, d).is_identity());
  std::vector<RatMatrix> br;
  for (int g = 0; g < gam.order; ++g) br.push_back(eng.bracket(g, d));
  for (int g = 0; g < gam.order; ++g)
    for (int h = 0; h < gam.order; ++h)
      CHECK(br[static_cast<size_t>(g)] * br[static_cast<size_t>(h)] ==
            br[static_cast<size_t>(gam.mul(g, h))]);
  RatMatrix e = eng.averaging_idempotent(d);
  CHECK(e * e == e);
}

void check_hom_transfer(const DescentEngine& eng, const Obj& a, const Obj& b, Rng& rng) {
  const DescentSetting& s = eng.setting();
  std::vector<RatMatrix> down_basis = s.base().hom_basis(a, b);
  // alpha followed by the transfer inverse is the identity on Hom(a, b)
  for (const RatMatrix& phi : down_basis)
    CHECK(eng.hom_alpha_inverse(a, b, eng.hom_alpha(phi)) == phi);
  // the fixed homs upstairs are exactly the pullbacks: same count, and
  // alpha_inverse followed by alpha fixes each of them
  std::vector<RatMatrix> fixed = eng.invariant_homs(eng.canonical_datum(a), eng.canonical_datum(b));
  std::vector<RatMatrix> expected;
  for (const RatMatrix& phi : down_basis) expected.push_back(eng.hom_alpha(phi));
  CHECK(fixed.size() == expected.size());
  for (const RatMatrix& psi : fixed) {
    RatMatrix back = eng.hom_alpha(eng.hom_alpha_inverse(a, b, psi));
    CHECK(back == psi);
    // and psi really is invariant under every twisted conjugation
    DescentDatum dx = eng.canonical_datum(a), dy = eng.canonical_datum(b);
    for (int g = 0; g < eng.gamma().order; ++g)
      CHECK(eng.twist_hom(g, dx, dy, psi) == psi);
  }
  (void)rng;
}

void check_artin_regular_roundtrip(const DescentEngine& eng) {
  const DescentSetting& s = eng.setting();
  ArtinImage rep;
  rep.rank = eng.gamma().order;
  rep.action = regular_perm_rep(eng.gamma(), s.base().field());
  ArtinResult inv = eng.artin_inverse(rep);
  CHECK(inv.object.dim == rep.rank);
  ArtinImage back = eng.artin_functor(inv.object, inv.witness);
  CHECK(back.rank == rep.rank);
  for (int g = 0; g < eng.gamma().order; ++g)
    CHECK(back.action[static_cast<size_t>(g)] == rep.action[static_cast<size_t>(g)]);
}

}  // namespace

TEST_CASE("hilbert 90 datum over Q(i) descends to a line") {
  auto s = make_semilinear(gaussian_extension());
  DescentEngine eng(s);
  auto l = s->extension().top();

  DescentDatum d;
  d.c = s->upstairs().object(1);
  RatMatrix be = RatMatrix::identity(1, l);
  RatMatrix bs(1, 1, l);
  bs.at(0, 0) = FieldElement::generator(l);  // b_sigma = i
  d.b = {be, bs};
  CHECK(eng.datum_valid(d));
  check_bracket_laws(eng, d);
  check_descend_roundtrip(eng, d);

  DescentResult res = eng.descend(d);
  CHECK(res.descended.dim == 1);
  // the descended generator z satisfies z = i . sigma(z); 1 + i is one
  FieldElement z = res.iso.at(0, 0);
  FieldElement gen = FieldElement::generator(l);
  CHECK(z == gen * s->extension().apply(1, z));
  // so z is a rational multiple of 1 + i
  FieldElement one_plus_i(l, {rat(1), rat(1)});
  CHECK((z / one_plus_i).is_rational());

  // scaling the datum by a non-coboundary-compatible factor breaks the cocycle
  DescentDatum bad = d;
  bad.b[1] = bad.b[1].scaled(rat(2));
  CHECK_FALSE(eng.datum_valid(bad));
  CHECK_THROWS_AS(eng.descend(bad), CocycleViolation);

  // b at the identity must be the identity
  DescentDatum bad2 = d;
  bad2.b[0] = bad2.b[0].scaled(rat(-1));
  CHECK_FALSE(eng.datum_valid(bad2));
}

TEST_CASE("engine basics on all shipped settings") {
  std::vector<std::shared_ptr<const DescentSetting>> settings = {
      make_semilinear(gaussian_extension()), make_semilinear(cyclic_cubic_extension()),
      make_semilinear(biquadratic_extension()), s3_pair(), d4_pair()};
  for (const auto& sp : settings) {
    CAPTURE(sp->kind());
    DescentEngine eng(sp);
    std::vector<Obj> base_objs, up_objs;
    if (sp->base().is_rep_category()) {
      base_objs = {sp->base().unit(), regular_object(sp->base())};
      up_objs = {sp->upstairs().unit(), regular_object(sp->upstairs())};
    } else {
      base_objs = {sp->base().unit(), sp->base().object(2), sp->base().object(3)};
      up_objs = {sp->upstairs().unit(), sp->upstairs().object(2)};
    }
    check_engine_basics(eng, base_objs, up_objs);
    for (const Obj& a : base_objs) check_bracket_laws(eng, eng.canonical_datum(a));
    // weak trace normalization
    CHECK(eng.trace_map(sp->base().unit()) == sp->weak_trace());
  }
}

TEST_CASE("random coboundary data descend and round-trip") {
  std::vector<std::shared_ptr<const DescentSetting>> settings = {
      make_semilinear(gaussian_extension()), make_semilinear(cyclic_cubic_extension()),
      make_semilinear(biquadratic_extension()), s3_pair(), d4_pair()};
  uint32_t seed = 421;
  for (const auto& sp : settings) {
    CAPTURE(sp->kind());
    DescentEngine eng(sp);
    std::vector<Obj> base_objs;
    if (sp->base().is_rep_category())
      base_objs = {sp->base().unit(), regular_object(sp->base())};
    else
      base_objs = {sp->base().object(1), sp->base().object(2), sp->base().object(3)};
    for (const Obj& a : base_objs)
      for (int rep = 0; rep < 3; ++rep) {
        DescentDatum d = eng.random_datum(a, seed++);
        check_bracket_laws(eng, d);
        check_descend_roundtrip(eng, d);
      }
  }
}

TEST_CASE("hom transfer inverts pullback on homs") {
  std::vector<std::shared_ptr<const DescentSetting>> settings = {
      make_semilinear(gaussian_extension()), make_semilinear(cyclic_cubic_extension()), s3_pair()};
  Rng rng(7);
  for (const auto& sp : settings) {
    CAPTURE(sp->kind());
    DescentEngine eng(sp);
    if (sp->base().is_rep_category()) {
      Obj reg = regular_object(sp->base());
      check_hom_transfer(eng, sp->base().unit(), reg, rng);
      check_hom_transfer(eng, reg, reg, rng);
    } else {
      check_hom_transfer(eng, sp->base().object(2), sp->base().object(3), rng);
      check_hom_transfer(eng, sp->base().object(2), sp->base().object(2), rng);
    }
  }
}

TEST_CASE("retraction is a left inverse of pushforward on endomorphisms") {
  std::vector<std::shared_ptr<const DescentSetting>> settings = {
      make_semilinear(gaussian_extension()), make_semilinear(biquadratic_extension()), s3_pair()};
  Rng rng(99);
  for (const auto& sp : settings) {
    CAPTURE(sp->kind());
    DescentEngine eng(sp);
    std::vector<Obj> up_objs;
    if (sp->upstairs().is_rep_category())
      up_objs = {sp->upstairs().unit(), regular_object(sp->upstairs())};
    else
      up_objs = {sp->upstairs().object(1), sp->upstairs().object(3)};
    for (const Obj& c : up_objs) {
      auto basis = sp->upstairs().hom_basis(c, c);
      for (const RatMatrix& u : basis)
        CHECK(eng.retraction_rho(c, sp->push_mor(c, c, u)) == u);
      (void)rng;
    }
  }
}

TEST_CASE("group elements detected through the unit retraction") {
  auto sp = s3_pair();
  DescentEngine eng(sp);
  Obj one_up = sp->upstairs().unit();
  Obj pushed = sp->push_obj(sp->base().unit());  // the induced representation of 1
  const GroupTable& g = sp->ambient();
  for (int x = 0; x < g.order; ++x) {
    bool in_h = false;
    for (int h : sp->subgroup_elements()) in_h = in_h || (h == x);
    RatMatrix v = pushed.action[static_cast<size_t>(x)];
    RatMatrix r = eng.retraction_rho(one_up, v);
    CHECK(r == RatMatrix::identity(1, sp->base().field()).scaled(rat(in_h ? 1 : 0)));
    RatMatrix v1 = RatMatrix::identity(1, sp->base().field());
    CHECK(eng.image_criterion(v1, v) == in_h);
  }
}

TEST_CASE("artin correspondence on the regular representation") {
  std::vector<std::shared_ptr<const DescentSetting>> settings = {
      make_semilinear(gaussian_extension()), make_semilinear(cyclic_cubic_extension()),
      make_semilinear(biquadratic_extension()), s3_pair(), d4_pair()};
  for (const auto& sp : settings) {
    CAPTURE(sp->kind());
    DescentEngine eng(sp);
    check_artin_regular_roundtrip(eng);
  }
}

TEST_CASE("pushforward of the unit realizes the regular image") {
  auto sp = make_semilinear(gaussian_extension());
  DescentEngine eng(sp);
  Obj r = sp->push_obj(sp->base().unit());
  // witness: the splitting of f*f_+1 into twisted copies of 1
  auto cart = eng.cartesian(sp->upstairs().unit());
  ArtinImage img = eng.artin_functor(r, cart.u);
  CHECK(img.rank == 2);
  CHECK(img.action[0].is_identity());
  CHECK(img.action[1] == RatMatrix::from_rationals(2, 2, {rat(0), rat(1), rat(1), rat(0)}));
}

TEST_CASE("artin images in the representation pair") {
  auto sp = s3_pair();
  DescentEngine eng(sp);
  const FieldPtr k = sp->base().field();
  const GroupTable& g = sp->ambient();

  // sign representation of S3: trivial on A3, so it is an Artin object
  std::vector<RatMatrix> sgn;
  for (int x = 0; x < g.order; ++x) {
    bool even = false;
    for (int h : sp->subgroup_elements()) even = even || (h == x);
    sgn.push_back(RatMatrix::identity(1, k).scaled(rat(even ? 1 : -1)));
  }
  Obj sign_rep = sp->base().object(1, sgn);
  ArtinImage img = eng.artin_functor(sign_rep);
  CHECK(img.rank == 1);
  CHECK(img.action[sp->gamma().identity].is_identity());
  bool found_minus = false;
  for (const RatMatrix& m : img.action) found_minus = found_minus || (m.at(0, 0) == FieldElement::constant(k, rat(-1)));
  CHECK(found_minus);

  // round trip back to a representation of S3
  ArtinResult back = eng.artin_inverse(img);
  CHECK(back.object.dim == 1);
  for (int x = 0; x < g.order; ++x)
    CHECK(back.object.action[static_cast<size_t>(x)] == sgn[static_cast<size_t>(x)]);

  // the regular representation of S3 restricts nontrivially: not Artin
  CHECK_THROWS_AS(eng.artin_witness(regular_object(sp->base())), NotArtin);
}
