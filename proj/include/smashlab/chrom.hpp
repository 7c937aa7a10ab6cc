#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace smashlab {

/// A point of the chain Bot < Level(0) < Level(1) < ... < Top.
class ChromLevel {
 public:
  static ChromLevel bot() { return ChromLevel(-1); }
  static ChromLevel level(std::int64_t n);
  static ChromLevel top() { return ChromLevel(std::numeric_limits<std::int64_t>::max()); }

  bool is_bot() const { return rank_ == -1; }
  bool is_top() const { return rank_ == std::numeric_limits<std::int64_t>::max(); }
  bool is_level() const { return !is_bot() && !is_top(); }
  /// The n of Level(n); only meaningful when is_level().
  std::int64_t n() const { return rank_; }

  /// "bot", "top" or "E(n)".
  std::string to_string() const;

  auto operator<=>(const ChromLevel&) const = default;

 private:
  explicit ChromLevel(std::int64_t r) : rank_(r) {}
  std::int64_t rank_;
};

inline std::ostream& operator<<(std::ostream& os, ChromLevel a) { return os << a.to_string(); }

inline ChromLevel join(ChromLevel a, ChromLevel b) { return a < b ? b : a; }
inline ChromLevel meet(ChromLevel a, ChromLevel b) { return a < b ? a : b; }

class Prime {
 public:
  /// Throws InvalidPrime unless p is prime.
  explicit Prime(unsigned p);
  unsigned value() const { return p_; }
  bool divides(std::size_t n) const { return n % p_ == 0; }
  bool operator==(const Prime&) const = default;

 private:
  unsigned p_;
};

/// Which table entry decided a Tate-vanishing query.
struct TateEntry {
  bool vanishes;
  /// Short statement of the entry, e.g. "(S^0)^{tC_2} ≄ *".
  std::string statement;
  /// Citation string carried into verdict output.
  std::string citation;
};

/// Looks up whether (L_a S^0)^{tK} is contractible. `group_name` is the
/// display name of K, used in the statement; `order` is |K|.
/// Throws TrivialSubgroup when order == 1.
TateEntry tate_entry(ChromLevel a, std::size_t order, const std::string& group_name,
                     const Prime& p);
bool tate_vanishes(ChromLevel a, std::size_t order, const Prime& p);

}  // namespace smashlab
