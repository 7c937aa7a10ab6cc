#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/support.hpp"
#include "smashlab/typecheck.hpp"

namespace smashlab {

enum class Status { Smashing, NotSmashing, Unknown };
const char* to_string(Status s);

struct Witness {
  std::string subgroup;   // label of the subgroup K with nonvanishing Φ^K
  std::string statement;  // the Tate table entry, e.g. "(S^0)^{tC_2} ≄ *"
};

struct Verdict {
  Status status = Status::Unknown;
  std::vector<std::string> citations;
  std::optional<Witness> witness;
  /// Derivation steps, or the unmet need for Unknown.
  std::vector<std::string> trace;
};

/// Three-valued smashing decision with citations.
Verdict derive_smashing(const TypedPtr& e, const Prime& p);

/// F(family, unit ∧ X).
struct Formula {
  std::string family;  // e.g. "EC_2+", "EP+", "EF_{C_2}+"
  std::string unit;    // e.g. "i_*L_{E(1)}(S^0)", "ẼC_4"
  std::string citation;
  std::string to_string() const { return "F(" + family + ", " + unit + " ∧ X)"; }
};

/// Throws ShapeNotCovered unless e is ER(n), EG(n,m), induction from the
/// trivial group, or induction of a derivably smashing class from a normal
/// subgroup.
Formula emit_localization_formula(const TypedPtr& e, const Prime& p);

struct Statement {
  std::string citation;
  std::string headline;
  std::vector<std::string> conditions;
  std::string to_string() const;
};

/// Sharpest available description of the local objects. With
/// `fixed_points` set, describes E^G-locals instead (needs e smashing).
Statement characterize_locals(const TypedPtr& e, const Prime& p, bool fixed_points = false);

struct IdempotentPair {
  ExprPtr left;   // Z_E(S^0) role
  ExprPtr right;  // L_E(S^0) role
};

enum class CombineMode { Join, Meet };

/// Join: (smash of lefts, wedge of rights). Meet: (wedge of lefts, smash of
/// rights). Inputs and output are checked for disjoint supports.
IdempotentPair combine_idempotents(const Session& ses, const std::vector<IdempotentPair>& pairs,
                                   CombineMode mode);

struct FixedPointsClass {
  ChromLevel level = ChromLevel::bot();
  bool ring_hypothesis = false;
  std::string citation = "Prop 3.12(7)";
};

FixedPointsClass fixed_points_class(const TypedPtr& e, bool ring_hypothesis);

}  // namespace smashlab
