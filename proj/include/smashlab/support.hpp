#pragma once

#include <map>
#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/group.hpp"
#include "smashlab/typecheck.hpp"

namespace smashlab {

/// Geometric fixed point data of a class: one ChromLevel per conjugacy class
/// of subgroups of the ambient group.
class ChromSupport {
 public:
  ChromSupport(FiniteGroup ambient, std::vector<ChromLevel> per_class);

  const FiniteGroup& ambient() const { return ambient_; }
  /// Value at subgroup index s.
  ChromLevel at(int s) const { return values_[ambient_.class_of(s)]; }
  ChromLevel at_class(int c) const { return values_[c]; }
  const std::vector<ChromLevel>& values() const { return values_; }

  bool operator==(const ChromSupport& o) const {
    return ambient_ == o.ambient_ && values_ == o.values_;
  }

 private:
  FiniteGroup ambient_;
  std::vector<ChromLevel> values_;
};

/// Bottom-up evaluator with a per-node memo. Reuse one instance to share
/// work across queries on the same typed trees.
class SupportEvaluator {
 public:
  const ChromSupport& eval(const TypedPtr& t);

 private:
  ChromLevel value_at(const Typed& t, int s);
  std::map<const Typed*, ChromSupport> memo_;
};

ChromSupport support(const TypedPtr& t);

/// Rewrites a support along the identification of two equal or canonically
/// isomorphic ambient groups.
ChromSupport transport(const ChromSupport& s, const FiniteGroup& to);

bool bousfield_equal(const ChromSupport& a, const ChromSupport& b);
bool class_leq(const ChromSupport& a, const ChromSupport& b);
/// z is e-acyclic: the pointwise meet is Bot everywhere.
bool is_acyclic(const ChromSupport& z, const ChromSupport& e);

bool bousfield_equal(const TypedPtr& a, const TypedPtr& b);
bool class_leq(const TypedPtr& a, const TypedPtr& b);
bool is_acyclic(const TypedPtr& z, const TypedPtr& e);

/// Join of all values: the nonequivariant class of the categorical fixed
/// points (for ring spectra).
ChromLevel fixed_points_class(const ChromSupport& s);

}  // namespace smashlab
