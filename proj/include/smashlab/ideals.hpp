#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/expr.hpp"

namespace smashlab {

/// Levels m_0, ..., m_n, entry i belonging to the subgroup C_{p^i} of
/// C_{p^n}, with m_i <= m_{i+j} + 1 whenever i < i + j <= n.
struct IdealSequence {
  unsigned p = 2;
  std::vector<unsigned> m;

  unsigned n() const { return static_cast<unsigned>(m.size()) - 1; }
  /// "(1,0)".
  std::string to_string() const;
  bool operator==(const IdealSequence&) const = default;
};

/// Throws InvalidSequence naming the first violated (i, j) in (i, j) order.
IdealSequence validate_sequence(const std::vector<unsigned>& entries, const Prime& p);

/// Parses "1,0,2".
std::vector<unsigned> parse_entries(const std::string& text);

/// All valid sequences of length n + 1 with entries at most max_level, in
/// lexicographic order.
std::vector<IdealSequence> enumerate_sequences(unsigned n, unsigned max_level, const Prime& p);

struct Construction {
  ExprPtr expr;
  /// One line per recursion level, top level first, e.g. "C_4: case (iii)".
  std::vector<std::string> cases;
  std::vector<std::string> notes;
  /// Smashing is carried from the theorem, not re-derived.
  std::string provenance;
};

/// The split spectrum over C_{p^n} with geometric fixed points E(m_i) at
/// C_{p^i}. Throws InvalidSequence for n == 0.
Construction construct(const IdealSequence& s);

struct VerifyResult {
  bool ok = false;
  /// First i with a mismatching value.
  std::optional<unsigned> failing_index;
  /// Support value at C_{p^i}, i = 0..n.
  std::vector<ChromLevel> values;
};

VerifyResult verify(const IdealSequence& s);
/// Checks an arbitrary expression over C_{p^n} against the sequence.
VerifyResult verify_expr(const IdealSequence& s, const ExprPtr& e);

}  // namespace smashlab
