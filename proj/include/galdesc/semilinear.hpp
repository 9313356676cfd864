#pragma once

#include "galdesc/galois.hpp"
#include "galdesc/setting.hpp"

namespace galdesc {

// Vector spaces over Q downstairs, over a Galois extension l upstairs.
// f* is base change, f_+ is restriction of scalars; Gamma = Gal(l/Q) acts
// by conjugating matrix entries (objects are untouched, so g* C = C).
//
// f_+ C is written in the basis {e_i (x) theta^j} with i major, so the
// coordinate of e_i (x) theta^j is i*d + j where d = [l : Q].
class SemilinearSetting : public DescentSetting {
 public:
  explicit SemilinearSetting(GaloisExtension ext);

  const GaloisExtension& extension() const { return ext_; }

  const GroupTable& gamma() const override { return ext_.group(); }
  const MatCategory& base() const override { return base_; }
  const MatCategory& upstairs() const override { return up_; }

  Obj pull_obj(const Obj& a) const override;
  RatMatrix pull_mor(const RatMatrix& phi) const override;
  Obj push_obj(const Obj& c) const override;
  RatMatrix push_mor(const Obj& src, const Obj& dst, const RatMatrix& phi) const override;

  RatMatrix unit(const Obj& a) const override;
  RatMatrix counit(const Obj& c) const override;

  Obj twist_obj(int g, const Obj& c) const override;
  RatMatrix twist_mor(int g, const RatMatrix& phi) const override;
  RatMatrix comparison(int g, const Obj& a) const override;
  RatMatrix cocycle(int g, int h, const Obj& c) const override;

  RatMatrix weak_trace() const override;

  bool twist_fixes_entries() const override { return false; }
  std::string kind() const override { return "semilinear"; }

 private:
  GaloisExtension ext_;
  MatCategory base_;  // plain category over Q
  MatCategory up_;    // plain category over l
};

std::shared_ptr<SemilinearSetting> make_semilinear(GaloisExtension ext);

}  // namespace galdesc
