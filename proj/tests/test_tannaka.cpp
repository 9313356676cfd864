#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galdesc/grouprep.hpp"
#include "galdesc/semilinear.hpp"
#include "galdesc/tannaka.hpp"
#include "helpers.hpp"

using namespace galdesc;

namespace {

// Q x Q with componentwise multiplication, in the idempotent basis.
MonoidObject split_quadratic(const MatCategory& cat) {
  MonoidObject r;
  r.carrier = cat.object(2);
  r.mu = RatMatrix::from_rationals(2, 4, {rat(1), rat(0), rat(0), rat(0),
                                          rat(0), rat(0), rat(0), rat(1)});
  r.eta = RatMatrix::from_rationals(2, 1, {rat(1), rat(1)});
  return r;
}

// group algebra of Z/2 in the basis {1, s}
MonoidObject group_algebra_z2(const MatCategory& cat) {
  MonoidObject r;
  r.carrier = cat.object(2);
  r.mu = RatMatrix::from_rationals(2, 4, {rat(1), rat(0), rat(0), rat(1),
                                          rat(0), rat(1), rat(1), rat(0)}, cat.field());
  r.eta = RatMatrix::from_rationals(2, 1, {rat(1), rat(0)}, cat.field());
  return r;
}

std::vector<SettingPtr> all_settings() {
  return {make_semilinear(gaussian_extension()), make_semilinear(cyclic_cubic_extension()),
          make_semilinear(biquadratic_extension()), s3_pair(), d4_pair()};
}

Obj small_upstairs(const DescentSetting& s, int n) {
  const MatCategory& up = s.upstairs();
  if (!up.is_rep_category()) return up.object(n);
  Obj reg = regular_object(up);
  Obj out = up.unit();
  for (int i = 1; i < n; ++i) out = up.dsum(out, i % 2 ? reg : up.unit());
  return out;
}

void check_extension(const SettingPtr& s) {
  DescentEngine eng{s};
  UniversalExtension ue = universal_extension(eng);
  REQUIRE(valid_monoid(ue.target, ue.r));
  CHECK(ue.r.carrier.dim == s->push_obj(s->upstairs().unit()).dim);

  // the extended unit carries the algebra's own multiplication
  ModuleObject unit_image = extended_functor(eng, ue, s->upstairs().unit());
  CHECK(unit_image.nu == ue.r.mu);

  // base change is an invertible module map on plain and structured fibres
  for (int n = 1; n <= 2; ++n) {
    Obj a = s->base().is_rep_category()
                ? (n == 1 ? s->base().unit() : regular_object(s->base()))
                : s->base().object(n);
    RatMatrix bc = base_change(eng, ue, a);
    CHECK(bc.rows() == ue.r.carrier.dim * a.dim);
  }

  // the monoidal comparison is a well-defined isomorphism
  for (int n = 1; n <= 2; ++n) {
    Obj c = small_upstairs(*s, n);
    Obj d = small_upstairs(*s, 1);
    MonoidalComparison mc = monoidal_comparison(eng, ue, c, d);
    Obj prod = s->upstairs().tensor(c, d);
    CHECK(mc.map.rows() == s->push_obj(prod).dim);
    CHECK(mc.map.cols() == mc.tensor.module.carrier.dim);
    CHECK(is_invertible(mc.map));
  }
}

}  // namespace

TEST_CASE("universal extension of the fibre functor") {
  for (const SettingPtr& s : all_settings()) check_extension(s);
}

TEST_CASE("pushout along an algebra map") {
  MatCategory cat{nullptr};
  MonoidObject r = split_quadratic(cat);

  // identity pushout changes nothing
  MonoidMorphism idm{r, r, cat.id(r.carrier)};
  ModuleObject reg = regular_module(cat, r);
  ExtendedModule same = pushout_functor(cat, idm, reg);
  CHECK(same.module.carrier.dim == reg.carrier.dim);
  CHECK(is_invertible(same.unit));

  // pushing the free module on X along the first projection gives X back
  MonoidObject one = unit_monoid(cat);
  MonoidMorphism proj{r, one, RatMatrix::from_rationals(1, 2, {rat(1), rat(0)})};
  require_monoid_morphism(cat, proj);
  for (int n = 1; n <= 3; ++n) {
    ModuleObject fr = free_module(cat, r, cat.object(n));
    ExtendedModule pushed = pushout_functor(cat, proj, fr);
    CHECK(pushed.module.carrier.dim == n);
  }
}

TEST_CASE("etale algebra splits the direct image of the unit") {
  for (const SettingPtr& s : all_settings()) {
    DescentEngine eng{s};
    UniversalExtension ue = universal_extension(eng);
    EtaleAlgebra et = etale_algebra(eng, ue);
    int order = s->gamma().order;
    CHECK(et.e.carrier.dim == order);
    REQUIRE(static_cast<int>(et.action.size()) == order);
    CHECK(et.action[static_cast<size_t>(s->gamma().identity)].is_identity());
    for (const RatMatrix& a : et.action) CHECK(is_invertible(a));
    CHECK(et.comparison.rows() == order * order);
    CHECK(is_invertible(et.comparison));
  }
}

TEST_CASE("etale comparison over the quadratic field matches the hand table") {
  DescentEngine eng{make_semilinear(gaussian_extension())};
  EtaleAlgebra et = etale_algebra(eng, universal_extension(eng));
  // conjugation acts by diag(1, -1) in the power basis {1, i}
  CHECK(et.action[1] == RatMatrix::from_rationals(2, 2, {rat(1), rat(0), rat(0), rat(-1)}));
  RatMatrix expected = RatMatrix::from_rationals(
      4, 4, {rat(1), rat(0), rat(0), rat(-1),
             rat(0), rat(1), rat(1), rat(0),
             rat(1), rat(0), rat(0), rat(1),
             rat(0), rat(-1), rat(1), rat(0)});
  CHECK(et.comparison == expected);
}

TEST_CASE("endomorphism algebra of the unit module and connectedness") {
  MatCategory cat{nullptr};

  EndOfUnit triv = end_of_unit(cat, unit_monoid(cat));
  CHECK(triv.is_field);

  EndOfUnit split = end_of_unit(cat, split_quadratic(cat));
  CHECK_FALSE(split.is_field);
  CHECK(!split.witness.empty());

  EndOfUnit grp = end_of_unit(cat, group_algebra_z2(cat));
  CHECK_FALSE(grp.is_field);

  // fields stay connected, for all three shipped extensions
  for (GaloisExtension ext :
       {gaussian_extension(), cyclic_cubic_extension(), biquadratic_extension()}) {
    auto s = make_semilinear(std::move(ext));
    EndOfUnit e = end_of_unit(s->base(), monoid_from_direct_image(*s));
    CHECK(e.is_field);
  }

  // the coset algebras of the group pairs have one-dimensional equivariant
  // endomorphism algebras
  for (auto pair : {s3_pair(), d4_pair()}) {
    EndOfUnit e = end_of_unit(pair->base(), monoid_from_direct_image(*pair));
    CHECK(e.is_field);
    CHECK(e.basis.size() == 1);
  }
}

TEST_CASE("irreducible lists are complete and pairwise disjoint") {
  struct Row {
    std::shared_ptr<GroupRepSetting> pair;
    std::vector<Obj> irreps;
  };
  std::vector<Row> rows;
  rows.push_back({s3_pair(), {}});
  rows.back().irreps = s3_irreducibles(rows.back().pair->base());
  rows.push_back({d4_pair(), {}});
  rows.back().irreps = d4_irreducibles(rows.back().pair->base());
  for (const Row& row : rows) {
    const MatCategory& cat = row.pair->base();
    int sum = 0;
    for (size_t i = 0; i < row.irreps.size(); ++i) {
      REQUIRE(cat.valid_object(row.irreps[i]));
      sum += row.irreps[i].dim * row.irreps[i].dim;
      for (size_t j = 0; j < row.irreps.size(); ++j)
        CHECK(cat.hom_basis(row.irreps[i], row.irreps[j]).size() == (i == j ? 1u : 0u));
    }
    CHECK(sum == row.pair->ambient().order);
  }
}

TEST_CASE("exact sequence diagnostics for the shipped pairs") {
  for (auto pair : {s3_pair(), d4_pair()}) {
    std::vector<CheckResult> report = exact_sequence_check(pair);
    REQUIRE(report.size() == 4);
    for (const CheckResult& r : report) {
      INFO(r.check, ": ", r.witness);
      CHECK(r.pass);
    }
  }
}
