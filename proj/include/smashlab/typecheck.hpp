#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/expr.hpp"
#include "smashlab/group.hpp"

namespace smashlab {

struct Typed;
using TypedPtr = std::shared_ptr<const Typed>;

/// An expression node annotated with its ambient group and resolved data.
struct Typed {
  ExprPtr source;
  NodeKind kind = NodeKind::S0;
  FiniteGroup ambient = FiniteGroup::trivial();
  unsigned n = 0;
  unsigned m = 0;
  /// EF / tEF family inside `ambient`.
  std::optional<Family> family;
  /// Res: ambient -> child ambient. Ind, Norm: child ambient -> ambient.
  /// Pull: ambient -> child ambient. Always injective except for Pull.
  std::optional<Homomorphism> map;
  /// Atom values, one per conjugacy class of subgroups of `ambient`.
  std::vector<ChromLevel> atom_values;
  TypedPtr child;  // operand of unary nodes, left of ^ and v
  TypedPtr rhs;
};

/// Prime, order cap and the named groups, homomorphisms and expressions in
/// scope. Group resolution is cached per session.
class Session {
 public:
  explicit Session(Prime p = Prime(2), std::size_t order_cap = kDefaultOrderCap)
      : prime_(p), order_cap_(order_cap) {}

  const Prime& prime() const { return prime_; }
  std::size_t order_cap() const { return order_cap_; }

  void load_definitions(std::string_view text);
  void define(const Definition& d);

  FiniteGroup resolve_group(const GroupTerm& g) const;
  /// Index of the subgroup of `ambient` named by `g`: literal containment
  /// first, then the canonical embedding.
  int resolve_subgroup(const GroupTerm& g, const FiniteGroup& ambient) const;
  Family resolve_family(const FamilyTerm& f, const FiniteGroup& ambient) const;
  Homomorphism resolve_hom(const HomTerm& h) const;

  TypedPtr typecheck(const ExprPtr& e) const;
  TypedPtr parse_and_check(std::string_view text) const { return typecheck(parse_expr(text)); }

 private:
  TypedPtr check(const ExprPtr& e, std::vector<std::string>& stack) const;

  Prime prime_;
  std::size_t order_cap_;
  std::map<std::string, GroupTermPtr> groups_;
  std::map<std::string, HomTerm> homs_;
  std::map<std::string, ExprPtr> lets_;
  mutable std::map<std::string, FiniteGroup> group_cache_;
};

/// Homomorphism between two groups that are equal or canonically isomorphic;
/// throws AmbientMismatch otherwise.
Homomorphism identify(const FiniteGroup& from, const FiniteGroup& to);

/// Display name for a group in formulas: C_4, Σ_4, D_8, or the group's own
/// name.
std::string display_name(const FiniteGroup& g);

}  // namespace smashlab
