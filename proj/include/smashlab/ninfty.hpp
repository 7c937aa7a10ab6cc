#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smashlab/group.hpp"
#include "smashlab/typecheck.hpp"

namespace smashlab {

/// A finite K-set ⊔ K/S_i for a subgroup K of an ambient group G. Orbit
/// stabilizers are subgroup indices of G, replaced by the minimal member of
/// their K-conjugacy class and sorted.
struct GSet {
  FiniteGroup ambient;
  int acting = 0;
  std::vector<int> orbits;

  static GSet make(const FiniteGroup& g, int acting, std::vector<int> stabilizers);
  std::size_t cardinality() const;
  /// "C4/C2 + C4/C2".
  std::string to_string() const;
  bool operator==(const GSet& o) const {
    return ambient == o.ambient && acting == o.acting && orbits == o.orbits;
  }
};

/// One orbit K/(K ∩ xSx^{-1}) per double coset K x S inside T's acting group.
/// Throws AmbientMismatch unless k lies in the acting group.
GSet restrict_gset(const GSet& t, int k);

/// Admissible orbits H/K for the subgroups H of `top` (a subgroup of the
/// ambient group): a set of (H, K) subgroup-index pairs with K ≤ H ≤ top.
class IndexingSystem {
 public:
  /// Adds every (H, H) with H ≤ top; does not close the rest.
  static IndexingSystem from_pairs(const FiniteGroup& g, int top,
                                   const std::vector<std::pair<int, int>>& pairs);
  /// Smallest system containing the pairs: trivial orbits, conjugation by
  /// `top` and restriction.
  static IndexingSystem closure(const FiniteGroup& g, int top,
                                const std::vector<std::pair<int, int>>& pairs);
  static IndexingSystem complete(const FiniteGroup& g, int top);
  static IndexingSystem trivial(const FiniteGroup& g, int top);

  const FiniteGroup& ambient() const { return g_; }
  int top() const { return top_; }
  bool admits(int h, int k) const { return pairs_.count({h, k}) > 0; }
  const std::set<std::pair<int, int>>& pairs() const { return pairs_; }
  /// Nontrivial pairs (K < H), one per top-conjugacy class, for display.
  std::vector<std::pair<int, int>> nontrivial_reps() const;

  /// Throws ClosureViolation naming the first failed invariant.
  void validate() const;
  std::optional<std::string> first_violation() const;

  /// Pairs with H inside subgroup h.
  IndexingSystem restrict_to(int h) const;
  bool subset_of(const IndexingSystem& o) const;
  bool operator==(const IndexingSystem& o) const {
    return g_ == o.g_ && top_ == o.top_ && pairs_ == o.pairs_;
  }

 private:
  IndexingSystem(FiniteGroup g, int top) : g_(std::move(g)), top_(top) {}
  FiniteGroup g_;
  int top_;
  std::set<std::pair<int, int>> pairs_;
};

/// True iff every orbit H/S of t has (H, S) in the system.
bool is_admissible(const IndexingSystem& sys, int h, const GSet& t);

/// Admissibility of Map_G(EF_H, O) from the admissible sets of O below H:
/// a K-set T is admissible iff for all g, the restriction of gT to
/// H ∩ gKg^{-1} is admissible. Throws ClosureViolation for a malformed input.
IndexingSystem coinduce(const IndexingSystem& below_h, int h);

struct ClosureCounterexample {
  std::string h, k, l;  // subgroup labels: norm H/K fails at L ≤ H
  std::string z;        // acyclic test object over H, as an expression
  std::string norm;     // its norm expansion
  bool z_acyclic = false;
  bool norm_acyclic = true;
};

struct ClosureVerdict {
  bool closed = true;
  std::string citation = "Thm 5.2";
  std::vector<std::string> trace;
  std::optional<ClosureCounterexample> counterexample;
};

/// Whether the E-acyclics are closed under the admissible norms. Only for
/// {bot, top}-valued supports; throws UnsupportedSupport otherwise. Every
/// counterexample is evaluated by the support engine before being returned.
ClosureVerdict norm_closure_check(const Session& ses, const ExprPtr& e, const IndexingSystem& sys);

enum class Premise { None, Certified, Asserted };

struct Propagation {
  std::vector<std::string> citations;
  std::string statement;
  IndexingSystem upgraded;
  /// Pairs admissible after localization but not before.
  std::vector<std::pair<int, int>> new_norms;
  bool complete = false;
};

/// For e = ind from H (or ER/EG): L_e preserves O-algebras and the localized
/// algebra is an algebra over the coinduced system. The premise is automatic
/// for H trivial; otherwise norm_closure_check on the operand is run when
/// `premise` is Certified. Throws MissingPremise when it cannot be had.
Propagation preservation_propagation(const Session& ses, const ExprPtr& e, const IndexingSystem& sys,
                                     Premise premise);

/// A group term naming the ambient group of a typed expression.
GroupTermPtr ambient_term(const TypedPtr& t);
/// Term for subgroup s of the group named by `g`.
GroupTermPtr subgroup_term(const GroupTermPtr& g, const FiniteGroup& ambient, int s);

}  // namespace smashlab
