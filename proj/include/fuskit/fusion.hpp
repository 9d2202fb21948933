#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fuskit/group.hpp"

namespace fuskit {

/// An injective homomorphism P -> S between subgroups of the ambient group,
/// stored as an element-wise image table. When realized by conjugation, the
/// ambient witness g (with x^g = x^phi for all x in P) is carried along.
/// Equality and ordering compare the map, not the witness.
class Injection {
 public:
  Injection() = default;
  Injection(Subgroup domain, std::vector<int> images, int witness = -1);

  static Injection identity(const Subgroup& domain);
  static Injection from_witness(const Subgroup& domain, int g);  // c_g

  const Subgroup& domain() const { return domain_; }
  const std::vector<int>& images() const { return images_; }
  int witness() const { return witness_; }
  bool has_witness() const { return witness_ >= 0; }

  int apply(int elem_index) const;
  Subgroup image() const;
  Injection restricted_to(const Subgroup& sub) const;
  Injection then(const Injection& next) const;  // left-to-right composition
  Injection inverted() const;                   // inverse isomorphism onto domain
  bool is_identity_map() const;

  bool operator==(const Injection& o) const {
    return domain_.elements() == o.domain_.elements() && images_ == o.images_;
  }
  bool operator<(const Injection& o) const {
    if (domain_.elements() != o.domain_.elements())
      return domain_.elements() < o.domain_.elements();
    return images_ < o.images_;
  }

 private:
  Subgroup domain_;
  std::vector<int> images_;
  int witness_ = -1;
};

/// Aut_F(P) as a permutation group on the sorted element list of P, with one
/// ambient witness per automorphism.
struct AutFGroup {
  Subgroup base;
  GroupPtr group;               // degree |P|
  std::vector<int> witnesses;   // parallel to group->elements()
  std::vector<int> inner;       // element indices of Inn(P) inside group

  Injection injection_of(int aut_index) const;
};

/// The fusion system F_S(G) of a finite group at a prime p.
class FusionSystem {
 public:
  FusionSystem(GroupPtr ambient, int prime);
  FusionSystem(GroupPtr ambient, Subgroup sylow, int prime);

  const GroupPtr& ambient() const { return g_; }
  const Subgroup& sylow() const { return s_; }
  int prime() const { return p_; }

  /// All distinct maps c_g: P -> Q with P^g <= Q, each with its least witness,
  /// sorted by image table.
  std::vector<Injection> hom_f(const Subgroup& p, const Subgroup& q) const;

  std::vector<int> f_conjugates_element(int u) const;         // {u^g} ∩ S
  std::vector<Subgroup> f_conjugates_subgroup(const Subgroup& p) const;

  bool is_fully_centralized(const Subgroup& p) const;
  bool is_fully_normalized(const Subgroup& p) const;
  bool is_extremal(int t) const;     // C_S(t) Sylow in C_G(t)

  Subgroup focal_subgroup() const;
  Subgroup hyperfocal_subgroup() const;   // S ∩ O^p(G)
  bool is_op_closed() const;              // F = O^p(F)

  AutFGroup aut_f(const Subgroup& p) const;
  bool is_centric(const Subgroup& p) const;
  bool is_radical(const Subgroup& p) const;    // O_p(Out_F(P)) = 1
  bool is_essential(const Subgroup& p) const;  // pre: p != S

  Subgroup centralizer_in_s(const std::vector<int>& elems) const;
  Subgroup normalizer_in_s(const Subgroup& p) const;

  /// All subgroups of S (lattice, guarded) and their S-conjugacy classes.
  const std::vector<Subgroup>& subgroups_of_s() const;
  const std::vector<std::vector<Subgroup>>& subgroup_classes() const;

 private:
  GroupPtr g_;
  Subgroup s_;
  int p_;
  mutable std::vector<Subgroup> lattice_;
  mutable std::vector<std::vector<Subgroup>> classes_;
};

/// Quotient of a permutation group by a normal subgroup, realized as a
/// permutation group on the right cosets.
struct QuotientGroup {
  GroupPtr group;
  std::vector<int> image_of;  // element of the source -> element of the quotient
};
QuotientGroup quotient_group(const GroupPtr& a, const Subgroup& n);

/// Brute-force test for a strongly p-embedded subgroup: some proper H < X with
/// p | |H| and p coprime to |H ∩ H^x| for every x in X - H.
bool has_strongly_p_embedded(const GroupPtr& x, int p);

}  // namespace fuskit
