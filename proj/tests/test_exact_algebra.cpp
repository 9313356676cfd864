#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galdesc/errors.hpp"
#include "galdesc/matrix.hpp"
#include "galdesc/numberfield.hpp"
#include "helpers.hpp"

using namespace galdesc;
using galdesc::testing::Rng;

static RatMatrix qmat(int rows, int cols, std::vector<long> vals) {
  std::vector<Rational> r;
  for (long v : vals) r.push_back(rat(v));
  return RatMatrix::from_rationals(rows, cols, r);
}

TEST_CASE("rational strings") {
  CHECK(rat_to_string(rat(3, 6)) == "1/2");
  CHECK(rat_to_string(rat(-4, 2)) == "-2");
  CHECK(rat_from_string("7/3") == rat(7, 3));
  CHECK(rat_from_string("-5") == rat(-5));
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
}

TEST_CASE("polynomial division and gcd inverse") {
  Poly m = {rat(1), rat(0), rat(1)};  // x^2 + 1
  Poly x = {rat(0), rat(1)};
  Poly inv = polyq::inverse_mod(x, m);  // 1/x = -x mod x^2+1
  CHECK(polyq::trim(polyq::mod(polyq::mul(inv, x), m)) == Poly{rat(1)});
}

TEST_CASE("irreducibility decisions") {
  CHECK(NumberField::make({rat(1), rat(0), rat(1)})->degree() == 2);
  CHECK_THROWS_AS(NumberField::make({rat(-1), rat(0), rat(1)}), Error);  // x^2-1
  CHECK_THROWS_AS(NumberField::make({rat(0), rat(0), rat(1)}), Error);   // x^2
  // x^3+x^2-2x-1 has no rational root
  CHECK(NumberField::make({rat(-1), rat(-2), rat(1), rat(1)})->degree() == 3);
  CHECK_THROWS_AS(NumberField::make({rat(-8), rat(0), rat(0), rat(1)}), Error);  // x^3-8
  // x^4-2x^2+9 irreducible; x^4-1 and (x^2+1)^2 are not
  CHECK(NumberField::make({rat(9), rat(0), rat(-2), rat(0), rat(1)})->degree() == 4);
  CHECK_THROWS_AS(NumberField::make({rat(-1), rat(0), rat(0), rat(0), rat(1)}), Error);
  CHECK_THROWS_AS(NumberField::make({rat(1), rat(0), rat(2), rat(0), rat(1)}), Error);
  // x^4+4 = (x^2-2x+2)(x^2+2x+2): no rational root, quadratic factors only
  CHECK_THROWS_AS(NumberField::make({rat(4), rat(0), rat(0), rat(0), rat(1)}), Error);
  // degree 5 is accepted on trust and flagged
  auto f5 = NumberField::make({rat(2), rat(0), rat(0), rat(0), rat(0), rat(1)});
  CHECK(f5->asserted_irreducible());
  CHECK_FALSE(NumberField::make({rat(1), rat(0), rat(1)})->asserted_irreducible());
  CHECK_THROWS_AS(NumberField::make({rat(1), rat(2)}), Error);  // not monic
}

TEST_CASE("field element arithmetic in Q(i)") {
  auto f = NumberField::make({rat(1), rat(0), rat(1)});
  FieldElement i(f, {rat(0), rat(1)});
  FieldElement one = FieldElement::constant(f, 1);
  CHECK(i * i == -one);
  CHECK((one + i) * (one - i) == FieldElement::constant(f, 2));
  FieldElement z(f, {rat(3), rat(2)});
  CHECK(z * z.inverse() == one);
  CHECK(z.inverse() == FieldElement(f, {rat(3, 13), rat(-2, 13)}));
  CHECK_THROWS_AS(FieldElement::constant(f, 0).inverse(), Error);
  CHECK(z.to_string() == "[3,2]");
  CHECK_FALSE(z.is_rational());
  CHECK(FieldElement::constant(f, 5).rational_part() == rat(5));
}

TEST_CASE("mixed fields are rejected") {
  auto f = NumberField::make({rat(1), rat(0), rat(1)});
  auto g = NumberField::make({rat(-2), rat(0), rat(1)});
  FieldElement a(f, {rat(1), rat(0)});
  FieldElement b(g, {rat(1), rat(0)});
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("rank, kernel, image") {
  auto dec = mat_rank_kernel_image(RatMatrix::identity(2, nullptr));
  CHECK(dec.rank == 2);
  CHECK(dec.kernel_basis.cols() == 0);

  dec = mat_rank_kernel_image(RatMatrix::zero(2, 2, nullptr));
  CHECK(dec.rank == 0);
  CHECK(dec.kernel_basis.cols() == 2);

  dec = mat_rank_kernel_image(qmat(2, 2, {1, 2, 2, 4}));
  CHECK(dec.rank == 1);
  REQUIRE(dec.kernel_basis.cols() == 1);
  // reduced column echelon normalization: leading entry 1
  CHECK(dec.kernel_basis.at(0, 0).rational_part() == rat(1));
  CHECK(dec.kernel_basis.at(1, 0).rational_part() == rat(-1, 2));
  CHECK(dec.image_basis.cols() == 1);
}

TEST_CASE("split idempotent") {
  auto s = split_idempotent(RatMatrix::identity(3, nullptr));
  CHECK(s.image_dim == 3);
  CHECK(s.inclusion.is_identity());
  CHECK(s.projection.is_identity());

  s = split_idempotent(RatMatrix::zero(3, 3, nullptr));
  CHECK(s.image_dim == 0);

  RatMatrix e = qmat(2, 2, {1, 1, 1, 1}).scaled(rat(1, 2));
  s = split_idempotent(e);
  CHECK(s.image_dim == 1);
  CHECK(s.projection * s.inclusion == RatMatrix::identity(1, nullptr));
  CHECK(s.inclusion * s.projection == e);
  // image spanned by (1,1)
  CHECK(s.inclusion.at(0, 0) == s.inclusion.at(1, 0));

  CHECK_THROWS_AS(split_idempotent(qmat(2, 2, {1, 1, 0, 1})), NotIdempotent);
  CHECK_THROWS_AS(split_idempotent(qmat(1, 2, {1, 0})), NotIdempotent);
}

TEST_CASE("solve linear") {
  RatMatrix b = qmat(2, 1, {5, 7});
  auto sol = solve_linear(RatMatrix::identity(2, nullptr), b);
  REQUIRE(sol);
  CHECK(sol->particular == b);
  CHECK(sol->kernel_basis.cols() == 0);

  CHECK_FALSE(solve_linear(RatMatrix::zero(2, 2, nullptr), b));

  sol = solve_linear(qmat(1, 2, {1, 1}), qmat(1, 1, {2}));
  REQUIRE(sol);
  CHECK(sol->particular.at(0, 0).rational_part() + sol->particular.at(1, 0).rational_part() == rat(2));
  REQUIRE(sol->kernel_basis.cols() == 1);
  CHECK(sol->kernel_basis.at(0, 0).rational_part() == -sol->kernel_basis.at(1, 0).rational_part());

  CHECK_THROWS_AS(solve_linear(qmat(1, 2, {1, 1}), qmat(2, 1, {1, 2})), ShapeError);
}

TEST_CASE("matrix inverse and invertibility") {
  RatMatrix m = qmat(2, 2, {1, 2, 3, 4});
  CHECK(is_invertible(m));
  CHECK(inverse(m) * m == RatMatrix::identity(2, nullptr));
  CHECK_FALSE(is_invertible(qmat(2, 2, {1, 2, 2, 4})));
  CHECK_THROWS_AS(inverse(qmat(2, 2, {1, 2, 2, 4})), Error);
}

TEST_CASE("kernel and image properties on random matrices") {
  Rng rng(7);
  auto qi = NumberField::make({rat(1), rat(0), rat(1)});
  for (int trial = 0; trial < 40; ++trial) {
    FieldPtr f = trial % 2 ? qi : nullptr;
    int rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    RatMatrix m = rng.matrix(rows, cols, f);
    auto dec = mat_rank_kernel_image(m);
    CHECK(dec.rank + dec.kernel_basis.cols() == cols);
    CHECK((m * dec.kernel_basis).is_zero());
    // image columns solve m x = col
    for (int j = 0; j < dec.image_basis.cols(); ++j)
      CHECK(solve_linear(m, dec.image_basis.col(j)).has_value());
  }
}

TEST_CASE("idempotent splitting on random conjugates") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + rng.below(4);
    int k = rng.below(n + 1);
    RatMatrix q = rng.invertible(n, nullptr);
    RatMatrix d = RatMatrix::zero(n, n, nullptr);
    for (int i = 0; i < k; ++i) d.at(i, i) = FieldElement::constant(nullptr, 1);
    RatMatrix e = q * d * inverse(q);
    auto s = split_idempotent(e);
    CHECK(s.image_dim == k);
    CHECK(s.projection * s.inclusion == RatMatrix::identity(k, nullptr));
    CHECK(s.inclusion * s.projection == e);
  }
}

TEST_CASE("solve_linear verifies exactly on random systems") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    RatMatrix a = rng.matrix(rows, cols, nullptr);
    RatMatrix x = rng.matrix(cols, 1, nullptr);
    RatMatrix b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a * sol->particular == b);
    CHECK((a * sol->kernel_basis).is_zero());
  }
}

TEST_CASE("restriction of scalars flattening") {
  auto f = NumberField::make({rat(1), rat(0), rat(1)});
  RatMatrix m(1, 1, f);
  m.at(0, 0) = FieldElement(f, {rat(2), rat(3)});
  auto flat = flatten_q(m);
  REQUIRE(flat.size() == 2);
  CHECK(flat[0] == rat(2));
  CHECK(flat[1] == rat(3));
}
