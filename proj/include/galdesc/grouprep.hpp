#pragma once

#include "galdesc/setting.hpp"

namespace galdesc {

// Representations of a finite group G downstairs and of a normal subgroup
// H upstairs, over one coefficient field. f* is restriction, f_+ is
// induction, and Gamma = G/H acts on Rep(H) through a fixed transversal
// t (with t at the trivial coset equal to the identity of G):
//
//   (g* C)(x)   = rho_C(t_g x t_g^{-1})
//   i_g(A)      = rho_A(t_g)^{-1}
//   c_{g,h}(C)  = rho_C(t_{gh} t_h^{-1} t_g^{-1})
//
// Ind C has basis {t_a (x) e_i} with the coset index a major, so the
// coordinate of t_a (x) e_i is a*n + i where n = dim C.
class GroupRepSetting : public DescentSetting {
 public:
  // subgroup: indices of the elements of H inside G; must be normal.
  GroupRepSetting(GroupTable g, std::vector<int> subgroup, FieldPtr field);

  const GroupTable& ambient() const { return g_; }
  const GroupTable& subgroup() const { return h_; }
  const std::vector<int>& subgroup_elements() const { return h_elems_; }
  const std::vector<int>& transversal() const { return transversal_; }
  int coset_of(int x) const { return coset_of_[static_cast<size_t>(x)]; }

  const GroupTable& gamma() const override { return gamma_; }
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

  bool twist_fixes_entries() const override { return true; }
  std::string kind() const override { return "group-rep"; }

 private:
  int h_index(int x) const;  // position of x in h_elems_, throws if absent
  GroupTable g_;
  std::vector<int> h_elems_;
  std::vector<int> pos_in_h_;   // -1 outside H
  GroupTable h_;
  GroupTable gamma_;
  std::vector<int> coset_of_;   // G element -> Gamma element
  std::vector<int> transversal_;
  MatCategory base_;
  MatCategory up_;
};

std::shared_ptr<GroupRepSetting> make_grouprep(GroupTable g, std::vector<int> subgroup,
                                               FieldPtr field);

// The regular representation of the category's group (permutation
// matrices of left translation).
Obj regular_object(const MatCategory& cat);

// Complete lists of irreducible representations for the shipped groups,
// indexed against symmetric3() / dihedral4() element order. All matrices
// are rational, and the representations are absolutely irreducible.
std::vector<Obj> s3_irreducibles(const MatCategory& cat);  // trivial, sign, standard
std::vector<Obj> d4_irreducibles(const MatCategory& cat);  // four characters + the plane

// Shipped pairs: S3 with its alternating subgroup over Q(zeta_3), and the
// dihedral group of order 8 with its rotation subgroup over Q(i).
std::shared_ptr<GroupRepSetting> s3_pair();
std::shared_ptr<GroupRepSetting> d4_pair();

}  // namespace galdesc
