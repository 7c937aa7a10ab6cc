#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace smashlab {

/// A permutation of {0, ..., degree-1} stored in one-line form.
///
/// Composition is right-to-left: (a * b)(x) == a(b(x)). The default ordering
/// is lexicographic on the one-line images, which is the canonical element
/// ordering used everywhere representatives have to be chosen.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  /// Disjoint cycle notation with 1-based points, e.g. "(1,3)(2,4)"; "()"
  /// for the identity.
  std::string to_cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// A permutation as written in source: a product of cycles over 1-based
/// points, not necessarily disjoint, applied right to left.
struct CycleWord {
  std::vector<std::vector<unsigned>> cycles;

  /// Throws InvalidPermutation when a point exceeds `degree` or repeats
  /// inside one cycle.
  Perm to_perm(std::size_t degree) const;
  std::string to_string() const;
  unsigned max_point() const;

  bool operator==(const CycleWord&) const = default;
};

CycleWord to_cycle_word(const Perm& p);

}  // namespace smashlab
