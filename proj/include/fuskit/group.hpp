#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuskit/perm.hpp"

namespace fuskit {

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with its full element list enumerated and
/// sorted lexicographically by image array. Element 0 is the identity.
/// Immutable after construction.
class Group {
 public:
  static constexpr std::size_t kDefaultSizeBound = 100000;

  static GroupPtr from_generators(std::string name, std::size_t degree,
                                  std::vector<Perm> generators,
                                  std::size_t size_bound = kDefaultSizeBound);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Perm& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::vector<int> generator_indices() const;

  /// Index of p in the sorted element list, or -1 when p is not in the group.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  int mul(int a, int b) const;          // element(a) * element(b)
  int inv(int a) const;
  int conj(int x, int g) const;         // x^g = g^-1 x g
  int power(int x, long n) const;
  int element_order(int x) const;

  /// Conjugacy class of x as a sorted list of element indices.
  const std::vector<int>& conjugacy_class(int x) const;
  int num_conjugacy_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& conjugacy_class_by_id(int c) const { return classes_[static_cast<std::size_t>(c)]; }

 private:
  Group() = default;
  void build_tables();

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<int> mul_table_;  // order^2 entries when order <= kTableBound, else empty
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;

  static constexpr int kTableBound = 2048;
};

/// A subgroup given by its sorted element indices inside a parent group.
/// Ordering between subgroups of the same parent is lexicographic on the
/// index list, which matches lexicographic comparison of element lists.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<int> sorted_elems);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, const std::vector<int>& gen_indices);

  const GroupPtr& parent() const { return parent_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  bool contains(int elem_index) const;
  int local_index(int elem_index) const;  // position in elements(), -1 if absent

  Subgroup conjugate(int g) const;        // H^g
  Subgroup intersect(const Subgroup& other) const;
  Subgroup join(const Subgroup& other) const;
  bool subset_of(const Subgroup& other) const;
  bool is_normal_in(const Subgroup& ambient) const;
  bool is_abelian() const;
  Subgroup derived() const;               // commutator subgroup [H,H]
  Subgroup center() const;                // Z(H)

  /// Deterministic generating set: greedily extend by the least element not
  /// yet generated. Small, not minimal.
  std::vector<int> small_generating_set() const;

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
  bool operator<(const Subgroup& o) const { return elems_ < o.elems_; }

 private:
  GroupPtr parent_;
  std::vector<int> elems_;
};

// ---- group_core operations ------------------------------------------------

int element_order(const Group& g, const Perm& p);

/// {g in ambient : gx = xg for all x in X}, X given by element indices.
Subgroup centralizer(const Subgroup& ambient, const std::vector<int>& elems);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& elems);

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);

/// Sylow p-subgroup by normalizer climbing: grow a p-subgroup P by adjoining,
/// at each step, the least-index element y of N(P) with yP of order p in
/// N(P)/P. Deterministic.
Subgroup sylow_subgroup(const GroupPtr& g, int p);

struct DoubleCoset {
  int representative;  // least element index in the coset
  long size;
};

/// A-B double cosets of the ambient element set (which must be a union of
/// such cosets). Representatives are the lexicographically least members,
/// listed in increasing order.
std::vector<DoubleCoset> double_cosets(const Subgroup& a,
                                       const std::vector<int>& ambient,
                                       const Subgroup& b);
std::vector<DoubleCoset> double_cosets(const Subgroup& a, const GroupPtr& g,
                                       const Subgroup& b);

/// Representatives of the left cosets xH, x ranging over ambient; each
/// representative is the least element of its coset, listed increasing.
std::vector<int> left_transversal(const std::vector<int>& ambient, const Subgroup& h);
std::vector<int> left_transversal(const GroupPtr& g, const Subgroup& h);

Subgroup commutator_subgroup(const GroupPtr& g);

/// O^p(G): subgroup generated by all elements of order coprime to p.
Subgroup p_residual(const GroupPtr& g, int p);

/// The quotient S/T for T normal in S with S/T abelian. Canonical coset
/// representatives are the lexicographically least elements; coset ids are
/// ordered by representative. Coset 0 is the identity coset.
class AbelianSection {
 public:
  AbelianSection(Subgroup top, Subgroup bottom);

  const Subgroup& top() const { return top_; }
  const Subgroup& bottom() const { return bottom_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int rep(int coset) const { return reps_[static_cast<std::size_t>(coset)]; }
  int coset_of(int elem_index) const;     // element must lie in top
  int mul(int c1, int c2) const;
  int inv(int c) const;
  int power(int c, long n) const;
  int coset_order(int c) const;
  bool is_trivial_coset(int c) const { return c == 0; }

  /// Cosets of order dividing p; a subgroup of the section.
  std::vector<int> omega1(int p) const;

  /// True iff the k distinct nontrivial cosets generate a subgroup of order
  /// p^k. Throws PreconditionError on a trivial coset or one outside
  /// omega1(p).
  bool linearly_independent(int p, const std::vector<int>& cosets) const;

  /// Subgroup of the section generated by the given cosets.
  std::vector<int> span(const std::vector<int>& cosets) const;

  std::string coset_label(int c) const;   // representative's image array

 private:
  Subgroup top_, bottom_;
  std::vector<int> reps_;
  std::unordered_map<int, int> coset_of_;
};

AbelianSection abelian_section(const Subgroup& s, const Subgroup& t);

/// All subgroups of H (as subgroups of H's parent), computed by closing the
/// set of cyclic subgroups under join. Guarded to |H| <= 1024. Sorted.
std::vector<Subgroup> all_subgroups(const Subgroup& h);

/// Partition of `subs` into conjugacy classes under the ambient subgroup's
/// conjugation action; each class is sorted, classes ordered by least member.
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const Subgroup& ambient, const std::vector<Subgroup>& subs);

}  // namespace fuskit
