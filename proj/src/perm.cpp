#include "smashlab/perm.hpp"

#include <numeric>

#include "smashlab/error.hpp"

namespace smashlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::AmbiguousEmbedding: return "AmbiguousEmbedding";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::HomTargetMismatch: return "HomTargetMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorKind::ShapeNotCovered: return "ShapeNotCovered";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::MissingPremise: return "MissingPremise";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::InvalidPermutation, "not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

CycleWord to_cycle_word(const Perm& p) {
  CycleWord w;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    std::vector<unsigned> cycle;
    for (std::size_t x = start; !done[x]; x = p(x)) {
      done[x] = true;
      cycle.push_back(static_cast<unsigned>(x + 1));
    }
    w.cycles.push_back(std::move(cycle));
  }
  return w;
}

std::string Perm::to_cycles() const { return to_cycle_word(*this).to_string(); }

Perm CycleWord::to_perm(std::size_t degree) const {
  if (degree > 255)
    throw Error(ErrorKind::InvalidPermutation, "degree exceeds 255");
  Perm result = Perm::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint8_t> im = Perm::identity(degree).images();
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < it->size(); ++i) {
      unsigned a = (*it)[i];
      if (a == 0 || a > degree)
        throw Error(ErrorKind::InvalidPermutation,
                    "point " + std::to_string(a) + " outside 1.." +
                        std::to_string(degree));
      if (seen[a - 1])
        throw Error(ErrorKind::InvalidPermutation,
                    "point " + std::to_string(a) + " repeated in a cycle");
      seen[a - 1] = true;
      unsigned b = (*it)[(i + 1) % it->size()];
      im[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
    result = Perm(std::move(im)) * result;
  }
  return result;
}

std::string CycleWord::to_string() const {
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

unsigned CycleWord::max_point() const {
  unsigned m = 0;
  for (const auto& c : cycles)
    for (auto x : c) m = std::max(m, x);
  return m;
}

}  // namespace smashlab
