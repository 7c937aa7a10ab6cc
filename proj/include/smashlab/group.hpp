#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smashlab/perm.hpp"

namespace smashlab {

inline constexpr std::size_t kDefaultOrderCap = 48;

/// Sorted element indices into a parent group.
using ElementSet = std::vector<int>;

class Subgroup;

namespace detail {
struct GroupData;
}

/// A finite permutation group with its element table, subgroup lattice and
/// conjugacy classes of subgroups, all computed at construction.
///
/// Values are cheap to copy and immutable. Two groups compare equal when they
/// have the same degree and the same element set; the name plays no part.
class FiniteGroup {
 public:
  /// Closes `generators` under composition. Throws OrderCapExceeded as soon
  /// as the closure grows past `order_cap`.
  static FiniteGroup generated(std::size_t degree, const std::vector<Perm>& generators,
                               std::string name,
                               std::size_t order_cap = kDefaultOrderCap);

  static FiniteGroup cyclic(unsigned n, std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup symmetric(unsigned n, std::size_t order_cap = kDefaultOrderCap);
  /// The dihedral group <(1,2,3,4),(1,3)> inside S(4).
  static FiniteGroup dihedral8(std::size_t order_cap = kDefaultOrderCap);
  /// Direct product acting on disjoint supports: b's points are shifted past a's.
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b,
                             std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup trivial();

  std::size_t degree() const;
  std::size_t order() const;
  const std::string& name() const;
  const std::vector<Perm>& generators() const;
  /// A small generating set chosen greedily in element order.
  const std::vector<int>& small_generators() const;
  bool is_abelian() const;

  const std::vector<Perm>& elements() const;
  const Perm& element(int i) const;
  std::optional<int> index_of(const Perm& p) const;
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int element_order(int a) const;

  // Subgroup lattice. Subgroups are indexed in (order, element encoding) order.
  std::size_t subgroup_count() const;
  const ElementSet& subgroup_elements(int s) const;
  Subgroup subgroup(int s) const;
  std::vector<Subgroup> subgroups() const;
  std::optional<int> subgroup_index(const ElementSet& elems) const;
  int whole_index() const;
  int trivial_index() const { return 0; }
  /// Index of g S g^{-1}.
  int conjugate_index(int s, int g) const;
  bool subgroup_contains(int outer, int inner) const;
  int intersect_index(int a, int b) const;
  bool is_normal(int s) const;

  // Conjugacy classes of subgroups; class representatives are the minimal
  // member, so class order follows subgroup order.
  std::size_t class_count() const;
  int class_of(int s) const;
  int class_rep(int c) const;
  const std::vector<int>& class_members(int c) const;

  /// Closure of a set of element indices.
  ElementSet closure(const std::vector<int>& gens) const;

  /// Human label for subgroup s: "e", the group's own name for the whole
  /// group, otherwise "<gens>" in cycle notation.
  std::string subgroup_label(int s) const;
  /// Generators of subgroup s in cycle notation.
  std::vector<std::string> subgroup_generators(int s) const;

  /// Standalone copy of subgroup s (same degree, same permutations).
  FiniteGroup subgroup_as_group(int s, std::string name = {}) const;

  bool operator==(const FiniteGroup& other) const;
  bool same_data(const FiniteGroup& other) const { return data_ == other.data_; }
  /// True when every element of *this is an element of `other` (same degree).
  bool contained_in(const FiniteGroup& other) const;

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> data_;

  friend class Subgroup;
};

/// A subgroup of a parent FiniteGroup, identified by its lattice index.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, int index) : parent_(std::move(parent)), index_(index) {}

  const FiniteGroup& parent() const { return parent_; }
  int index() const { return index_; }
  const ElementSet& elements() const { return parent_.subgroup_elements(index_); }
  std::size_t order() const { return elements().size(); }
  bool contains_element(int g) const;
  bool contains(const Subgroup& k) const;
  std::vector<Perm> perms() const;
  std::string label() const { return parent_.subgroup_label(index_); }
  FiniteGroup as_group(std::string name = {}) const {
    return parent_.subgroup_as_group(index_, std::move(name));
  }

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && index_ == other.index_;
  }

 private:
  FiniteGroup parent_;
  int index_;
};

/// Element-level subgroup from generating permutations of the parent's degree.
/// Throws ElementNotInGroup when a generator lies outside `parent`.
Subgroup subgroup_generated(const FiniteGroup& parent, const std::vector<Perm>& gens);

std::vector<Subgroup> subgroups(const FiniteGroup& g);
Subgroup conjugate_subgroup(const Perm& g, const Subgroup& h);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// One representative per double coset K g H, the minimal element of each.
std::vector<Perm> double_cosets(const Subgroup& k, const FiniteGroup& g, const Subgroup& h);
std::vector<int> double_coset_indices(const FiniteGroup& g, int k, int h);
bool is_subconjugate(const Subgroup& k, const Subgroup& h);

/// A subconjugacy-closed set of subgroups of an ambient group.
class Family {
 public:
  static Family all(const FiniteGroup& g);
  static Family proper(const FiniteGroup& g);
  static Family trivial(const FiniteGroup& g);
  static Family empty(const FiniteGroup& g);
  /// All subgroups subconjugate to one of the listed subgroup indices.
  static Family generated_by(const FiniteGroup& g, const std::vector<int>& subs);

  const FiniteGroup& ambient() const { return ambient_; }
  bool contains(int s) const { return members_[s]; }
  bool contains(const Subgroup& s) const;
  std::vector<int> members() const;
  std::size_t size() const;

  bool operator==(const Family& o) const {
    return ambient_ == o.ambient_ && members_ == o.members_;
  }

 private:
  Family(FiniteGroup g, std::vector<bool> m) : ambient_(std::move(g)), members_(std::move(m)) {}
  FiniteGroup ambient_;
  std::vector<bool> members_;
};

Family family_generated(const Subgroup& h);

/// A validated group homomorphism with its full element map and the image of
/// every source subgroup cached.
class Homomorphism {
 public:
  /// Images are given for a generating set of `source`. Throws
  /// NotAHomomorphism with a witness pair when the assignment does not extend.
  static Homomorphism make(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<std::pair<Perm, Perm>>& generator_images,
                           std::string name = {});
  static Homomorphism inclusion(const FiniteGroup& sub, const FiniteGroup& ambient);
  static Homomorphism identity(const FiniteGroup& g);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::string& name() const { return name_; }
  int map(int x) const { return element_map_[x]; }
  const Perm& map(const Perm& p) const;
  /// Target subgroup index of f(s).
  int image_index(int source_subgroup) const { return subgroup_image_[source_subgroup]; }
  Subgroup image(const Subgroup& s) const;
  bool injective() const;
  /// Source subgroup index mapping onto target subgroup t; requires injectivity
  /// and t inside the image.
  std::optional<int> preimage_index(int target_subgroup) const;
  Homomorphism compose_after(const Homomorphism& first) const;  // *this ∘ first

 private:
  Homomorphism(FiniteGroup s, FiniteGroup t, std::vector<int> m, std::string name);
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<int> element_map_;
  std::vector<int> subgroup_image_;
  std::map<int, int> preimage_;
  std::string name_;

  friend Homomorphism canonical_embedding(const FiniteGroup& a, const FiniteGroup& g);
};

Homomorphism check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                const std::vector<std::pair<Perm, Perm>>& generator_images);

/// Injective homomorphism a -> g chosen canonically.
///
/// When a's permutations already lie in g the inclusion is returned. Otherwise
/// all injective homomorphisms are enumerated and the one with the smallest
/// generator images is chosen; AmbiguousEmbedding is thrown unless every
/// other embedding agrees with it up to conjugation in g and an automorphism
/// of a that fixes each conjugacy class of subgroups of a. NotASubgroup is
/// thrown when no embedding exists.
Homomorphism canonical_embedding(const FiniteGroup& a, const FiniteGroup& g);

}  // namespace smashlab
