#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/perm.hpp"

namespace smashlab {

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct GroupTerm;
using GroupTermPtr = std::shared_ptr<const GroupTerm>;

/// Unresolved group syntax: C(n), S(n), D8, sub[G]{...}, a name, or A x B.
struct GroupTerm {
  enum class Kind { Cyclic, Symmetric, D8, Sub, Named, Product };
  Kind kind = Kind::Cyclic;
  unsigned n = 0;
  GroupTermPtr a;  // Sub parent, Product left
  GroupTermPtr b;  // Product right
  std::vector<CycleWord> gens;
  std::string name;
  SourcePos pos;

  bool operator==(const GroupTerm& o) const;
};

struct FamilyTerm {
  enum class Kind { Triv, Proper, All, FamSub, List };
  Kind kind = Kind::Triv;
  std::vector<GroupTermPtr> subs;

  bool operator==(const FamilyTerm& o) const;
};

struct HomTerm {
  enum class Kind { Quot, Explicit, Named };
  Kind kind = Kind::Quot;
  GroupTermPtr source;
  GroupTermPtr target;
  std::vector<std::pair<CycleWord, CycleWord>> images;
  std::string name;
  SourcePos pos;

  bool operator==(const HomTerm& o) const;
};

/// One `key: value` entry of an atom; an empty generator list is the trivial
/// subgroup `e`.
struct AtomEntry {
  std::vector<CycleWord> gens;
  ChromLevel value = ChromLevel::bot();

  bool operator==(const AtomEntry& o) const = default;
};

enum class NodeKind {
  S0, Pt, E, ER, EG, EFPlus, EFTilde, Atom,
  Triv, Res, Ind, Norm, Pull, Smash, Wedge, Ident,
};

const char* to_string(NodeKind k);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  NodeKind kind = NodeKind::S0;
  SourcePos pos;
  unsigned n = 0;
  unsigned m = 0;
  /// Optional @G on S0/pt; @G on EF, tEF and atoms; bracket group of
  /// triv/res/ind/norm.
  GroupTermPtr group;
  FamilyTerm family;
  std::optional<HomTerm> hom;
  std::string name;  // atom name or identifier
  std::vector<AtomEntry> entries;
  ExprPtr lhs;  // operand of unary nodes, left of ^ and v
  ExprPtr rhs;

  bool operator==(const Expr& o) const;
};

// Builders used by constructions and generators.
ExprPtr make_leaf(NodeKind k, unsigned n = 0, unsigned m = 0, GroupTermPtr group = nullptr);
ExprPtr make_family_node(NodeKind k, FamilyTerm f, GroupTermPtr group);
ExprPtr make_unary(NodeKind k, GroupTermPtr group, ExprPtr child);
ExprPtr make_pull(HomTerm h, ExprPtr child);
ExprPtr make_binary(NodeKind k, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_ident(std::string name);
GroupTermPtr cyclic_term(unsigned n);

/// Parses one expression; trailing input other than whitespace is an error.
/// Throws SyntaxError carrying line, column and the expected tokens.
ExprPtr parse_expr(std::string_view text);
GroupTermPtr parse_group(std::string_view text);
std::vector<CycleWord> parse_cycle_list(std::string_view text);

struct Definition {
  enum class Kind { Let, Group, Hom };
  Kind kind;
  std::string name;
  ExprPtr expr;
  GroupTermPtr group;
  std::optional<HomTerm> hom;
  SourcePos pos;
};

/// Definitions file: `let x = expr;`, `group G = ...;`, `hom q = ...;` and
/// `#` line comments.
std::vector<Definition> parse_definitions(std::string_view text);

/// Canonical printing; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);
std::string to_string(const GroupTerm& g);
std::string to_string(const FamilyTerm& f);
std::string to_string(const HomTerm& h);

}  // namespace smashlab
