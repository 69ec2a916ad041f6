#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ggv/finite_field.hpp"

namespace ggv {

using ElemId = int;

enum class GroupLabel { GL2, SL2, PGL2 };
std::string label_name(GroupLabel l);

// row-major 2x2 matrix [[a,b],[c,d]] with F_q codes as entries
struct Mat2 {
  int a, b, c, d;
};

// A fully enumerated matrix group over F_q.  Elements are indexed by their
// position in the fixed enumeration (ascending packed code); PGL2 elements
// are the scalar classes of GL2 elements, represented by the smallest code
// in the class.  Immutable after construction.
class GroupInstance {
 public:
  GroupLabel label;
  int q;
  std::shared_ptr<const FieldTower> tower;

  int size() const { return static_cast<int>(elems_.size()); }
  ElemId identity() const { return identity_; }
  Mat2 mat(ElemId e) const { return unpack(elems_[e]); }
  ElemId mul(ElemId x, ElemId y) const;
  ElemId inv(ElemId x) const { return inv_[x]; }
  ElemId conjugate(ElemId g, ElemId x) const { return mul(mul(g, x), inv(g)); }
  ElemId pow(ElemId x, long long e) const;
  int det_code(ElemId e) const { return det_[e]; }
  int order(ElemId e) const { return order_[e]; }
  bool is_unipotent(ElemId e) const;   // order is a power of p
  bool is_semisimple(ElemId e) const;  // order coprime to p

  // canonicalizes scalar classes for PGL2; the matrix must be invertible
  ElemId from_mat(const Mat2& m) const;
  ElemId diag(int x, int y) const;  // from field codes

  uint32_t pack(const Mat2& m) const;
  Mat2 unpack(uint32_t code) const;

 private:
  friend GroupInstance build_instance(GroupLabel, int, int);
  std::vector<uint32_t> elems_;  // ascending codes
  std::vector<int> id_by_code_;
  std::vector<ElemId> inv_;
  std::vector<int> det_;
  std::vector<int> order_;
  ElemId identity_{0};
};

GroupInstance build_instance(GroupLabel label, int q, int qmax = 16);

// Conjugacy classes in the fixed enumeration order: class representatives
// are the smallest member ids, classes ordered by representative.
struct ConjClassData {
  std::vector<ElemId> rep;
  std::vector<int> size;
  std::vector<long long> centralizer_order;
  std::vector<int> class_of;       // element -> class index
  std::vector<int> inverse_class;  // class of inverses
  int identity_class{0};
  int count() const { return static_cast<int>(rep.size()); }
};

ConjClassData conjugacy_classes(const GroupInstance& G);

// h = s u with s semisimple, u unipotent, s u = u s
struct JordanPair {
  ElemId s, u;
};
JordanPair jordan(const GroupInstance& G, ElemId h);

enum class TorusClass { Split, Nonsplit };

// An F-stable maximal torus S of G together with its abstract coordinates:
// every element of S^F is indexed by discrete logarithms with respect to
// the tower generators, and that index space doubles as the parameter
// space of Irr(S^F) and of the dual torus points.
struct TorusData {
  TorusClass cls{TorusClass::Split};
  GroupLabel group_label{GroupLabel::GL2};
  int q{0};
  int index_count{0};                // |S^F|
  std::vector<ElemId> elem_by_index;
  std::map<ElemId, int> index_by_elem;
  int weyl_f_order{2};  // |W_G(S)^F| via the algebraic normalizer
  int fq_rank{0};       // F_q-rank of S, fixes the sign epsilon_S

  int order() const { return index_count; }
  bool contains(ElemId e) const { return index_by_elem.count(e) > 0; }
  int index_of(ElemId e) const { return index_by_elem.at(e); }
  // exponent arithmetic on indices
  int index_mul(int a, int b) const;
  int index_inv(int a) const;
  int index_identity() const { return 0; }
};

struct SubgroupData {
  std::vector<ElemId> borel;      // B_0^F, upper triangular
  std::vector<ElemId> unipotent;  // U_0^F, upper unitriangular
  TorusData split_torus;
  TorusData nonsplit_torus;
  const TorusData& torus(TorusClass c) const {
    return c == TorusClass::Split ? split_torus : nonsplit_torus;
  }
};

SubgroupData subgroup_data(const GroupInstance& G);

// 1 -> SL2 -> GL2 --det--> F_q^x -> 1 with the section z -> diag(z, 1)
struct ExtensionData {
  std::vector<ElemId> to_H;       // SL2 id -> GL2 id
  std::vector<ElemId> to_G;       // GL2 id -> SL2 id, or -1
  std::vector<int> kappa_dlog;    // per GL2 element: dlog_{g1} det
  std::vector<ElemId> section;    // dlog k -> GL2 id of diag(g1^k, 1)
};

ExtensionData extension_data(const GroupInstance& H, const GroupInstance& G);

int fq_rank_of_group(GroupLabel l);
int epsilon_of_group(GroupLabel l);              // (-1)^rank
int epsilon_of_torus(GroupLabel l, TorusClass c);

}  // namespace ggv
