#include "galdesc/galois.hpp"

#include <algorithm>

namespace galdesc {

GaloisExtension GaloisExtension::make(FieldPtr top, std::vector<FieldElement> generator_images,
                                      std::vector<std::string> names) {
  GaloisExtension e;
  e.top_ = std::move(top);
  e.images_ = std::move(generator_images);
  const int d = e.top_->degree();
  if (static_cast<int>(e.images_.size()) != d)
    throw NotGalois("need exactly degree-many automorphisms, got " + std::to_string(e.images_.size()));

  // every image must be a root of the minimal polynomial
  std::vector<FieldElement> lifted;
  for (const auto& c : e.top_->minpoly()) lifted.push_back(FieldElement::constant(e.top_, c));
  for (const auto& im : e.images_) {
    if (!same_field(im.field(), e.top_)) throw NotAutomorphism("image lies in a different field");
    if (!FieldElement::eval_poly(lifted, im).is_zero()) throw NotAutomorphism();
  }
  // distinctness
  for (size_t a = 0; a < e.images_.size(); ++a)
    for (size_t b = a + 1; b < e.images_.size(); ++b)
      if (e.images_[a] == e.images_[b]) throw NotGalois("repeated automorphism image");

  // composition table: (g . h)(theta) = g(h(theta))
  std::vector<std::vector<int>> table(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), -1));
  for (int g = 0; g < d; ++g)
    for (int h = 0; h < d; ++h) {
      std::vector<FieldElement> hc;
      for (const auto& c : e.images_[static_cast<size_t>(h)].coords())
        hc.push_back(FieldElement::constant(e.top_, c));
      FieldElement comp = FieldElement::eval_poly(hc, e.images_[static_cast<size_t>(g)]);
      auto it = std::find(e.images_.begin(), e.images_.end(), comp);
      if (it == e.images_.end()) throw NotGalois("automorphisms do not close under composition");
      table[static_cast<size_t>(g)][static_cast<size_t>(h)] =
          static_cast<int>(it - e.images_.begin());
    }
  e.group_ = GroupTable::from_table(std::move(table), std::move(names));

  // fixed field must be Q: kernel of all (g - id) on the power basis is 1-dimensional
  std::vector<RatMatrix> stacked;
  for (int g = 0; g < d; ++g) {
    RatMatrix mg(d, d, e.top_);
    for (int j = 0; j < d; ++j) {
      FieldElement img = e.apply(g, [&] {
        std::vector<Rational> c(static_cast<size_t>(d), Rational(0));
        c[static_cast<size_t>(j)] = 1;
        return FieldElement(e.top_, c);
      }());
      for (int i = 0; i < d; ++i)
        mg.at(i, j) = FieldElement::constant(e.top_, img.coords()[static_cast<size_t>(i)]);
    }
    stacked.push_back(mg - RatMatrix::identity(d, e.top_));
  }
  RatMatrix big = stacked[0];
  for (size_t g = 1; g < stacked.size(); ++g) big = big.vstack(stacked[g]);
  if (mat_rank_kernel_image(big).kernel_basis.cols() != 1)
    throw NotGalois("fixed field is larger than the base field");
  return e;
}

const FieldElement& GaloisExtension::generator_image(int g) const {
  if (g < 0 || g >= static_cast<int>(images_.size())) throw BadGroupElement();
  return images_[static_cast<size_t>(g)];
}

FieldElement GaloisExtension::apply(int g, const FieldElement& x) const {
  if (g < 0 || g >= group_.order) throw BadGroupElement();
  if (!same_field(x.field(), top_)) throw FieldMismatch("element not in the top field");
  std::vector<FieldElement> coeffs;
  for (const auto& c : x.coords()) coeffs.push_back(FieldElement::constant(top_, c));
  return FieldElement::eval_poly(coeffs, images_[static_cast<size_t>(g)]);
}

FieldElement GaloisExtension::trace(const FieldElement& x) const {
  FieldElement s = FieldElement::constant(top_, 0);
  for (int g = 0; g < group_.order; ++g) s = s + apply(g, x);
  return FieldElement::constant(nullptr, s.rational_part());
}

RatMatrix GaloisExtension::regular_rep(const FieldElement& x) const {
  const int d = degree();
  RatMatrix m(d, d, nullptr);
  FieldElement pw = FieldElement::constant(top_, 1);
  for (int j = 0; j < d; ++j) {
    FieldElement y = x * pw;  // x * theta^j
    for (int i = 0; i < d; ++i)
      m.at(i, j) = FieldElement::constant(nullptr, y.coords()[static_cast<size_t>(i)]);
    if (j + 1 < d) pw = pw * FieldElement::generator(top_);
  }
  return m;
}

GaloisExtension gaussian_extension() {
  auto f = NumberField::make({rat(1), rat(0), rat(1)});  // x^2 + 1
  return GaloisExtension::make(
      f, {FieldElement(f, {rat(0), rat(1)}), FieldElement(f, {rat(0), rat(-1)})}, {"e", "conj"});
}

GaloisExtension cyclic_cubic_extension() {
  auto f = NumberField::make({rat(-1), rat(-2), rat(1), rat(1)});  // x^3+x^2-2x-1
  return GaloisExtension::make(f,
                               {FieldElement(f, {rat(0), rat(1), rat(0)}),
                                FieldElement(f, {rat(-2), rat(0), rat(1)}),
                                FieldElement(f, {rat(1), rat(-1), rat(-1)})},
                               {"e", "s", "s2"});
}

GaloisExtension biquadratic_extension() {
  auto f = NumberField::make({rat(9), rat(0), rat(-2), rat(0), rat(1)});  // x^4-2x^2+9
  // theta = i + sqrt2; the four conjugates in the power basis:
  return GaloisExtension::make(f,
                               {FieldElement(f, {rat(0), rat(1), rat(0), rat(0)}),
                                FieldElement(f, {rat(0), rat(2, 3), rat(0), rat(-1, 3)}),
                                FieldElement(f, {rat(0), rat(-2, 3), rat(0), rat(1, 3)}),
                                FieldElement(f, {rat(0), rat(-1), rat(0), rat(0)})},
                               {"e", "a", "b", "ab"});
}

GaloisExtension trivial_extension() {
  auto f = NumberField::make({rat(0), rat(1)});  // degree 1, theta = 0
  return GaloisExtension::make(f, {FieldElement(f, {rat(0)})}, {"e"});
}

}  // namespace galdesc
