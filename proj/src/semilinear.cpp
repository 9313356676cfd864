#include "galdesc/semilinear.hpp"

#include "galdesc/errors.hpp"

namespace galdesc {

DescentSetting::~DescentSetting() = default;

SemilinearSetting::SemilinearSetting(GaloisExtension ext)
    : ext_(std::move(ext)), base_(nullptr), up_(ext_.top()) {}

Obj SemilinearSetting::pull_obj(const Obj& a) const { return up_.object(a.dim); }

RatMatrix SemilinearSetting::pull_mor(const RatMatrix& phi) const {
  const FieldPtr& l = ext_.top();
  return phi.map_entries(
      [&](const FieldElement& x) { return FieldElement::constant(l, x.rational_part()); }, l);
}

Obj SemilinearSetting::push_obj(const Obj& c) const {
  return base_.object(c.dim * ext_.degree());
}

RatMatrix SemilinearSetting::push_mor(const Obj& src, const Obj& dst, const RatMatrix& phi) const {
  up_.require_morphism(src, dst, phi);
  const int d = ext_.degree();
  RatMatrix out(dst.dim * d, src.dim * d, nullptr);
  for (int i = 0; i < dst.dim; ++i)
    for (int j = 0; j < src.dim; ++j) {
      RatMatrix blockm = ext_.regular_rep(phi.at(i, j));
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) out.at(i * d + r, j * d + s) = blockm.at(r, s);
    }
  return out;
}

RatMatrix SemilinearSetting::unit(const Obj& a) const {
  const int d = ext_.degree();
  RatMatrix out = RatMatrix::zero(a.dim * d, a.dim, nullptr);
  for (int i = 0; i < a.dim; ++i) out.at(i * d, i) = FieldElement::constant(nullptr, 1);
  return out;
}

RatMatrix SemilinearSetting::counit(const Obj& c) const {
  const FieldPtr& l = ext_.top();
  const int d = ext_.degree();
  RatMatrix out = RatMatrix::zero(c.dim, c.dim * d, l);
  FieldElement pow = FieldElement::constant(l, 1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < c.dim; ++i) out.at(i, i * d + j) = pow;
    if (j + 1 < d) pow = pow * FieldElement::generator(l);
  }
  return out;
}

Obj SemilinearSetting::twist_obj(int g, const Obj& c) const {
  gamma().mul(g, g);  // range check
  return c;
}

RatMatrix SemilinearSetting::twist_mor(int g, const RatMatrix& phi) const {
  return phi.map_entries([&](const FieldElement& x) { return ext_.apply(g, x); }, ext_.top());
}

RatMatrix SemilinearSetting::comparison(int g, const Obj& a) const {
  gamma().mul(g, g);
  return up_.id(pull_obj(a));
}

RatMatrix SemilinearSetting::cocycle(int g, int h, const Obj& c) const {
  gamma().mul(g, h);
  return up_.id(c);
}

RatMatrix SemilinearSetting::weak_trace() const {
  const int d = ext_.degree();
  RatMatrix out(1, d, nullptr);
  FieldElement pow = FieldElement::constant(ext_.top(), 1);
  for (int j = 0; j < d; ++j) {
    out.at(0, j) = FieldElement::constant(nullptr, ext_.trace(pow).rational_part());
    if (j + 1 < d) pow = pow * FieldElement::generator(ext_.top());
  }
  return out;
}

std::shared_ptr<SemilinearSetting> make_semilinear(GaloisExtension ext) {
  return std::make_shared<SemilinearSetting>(std::move(ext));
}

}  // namespace galdesc
