#include "smashlab/chrom.hpp"

#include "smashlab/error.hpp"

namespace smashlab {

ChromLevel ChromLevel::level(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidSequence, "chromatic level must be a natural number");
  return ChromLevel(n);
}

std::string ChromLevel::to_string() const {
  if (is_bot()) return "bot";
  if (is_top()) return "top";
  return "E(" + std::to_string(rank_) + ")";
}

Prime::Prime(unsigned p) : p_(p) {
  bool prime = p >= 2;
  for (unsigned d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
}

TateEntry tate_entry(ChromLevel a, std::size_t order, const std::string& group_name,
                     const Prime& p) {
  if (order == 1)
    throw Error(ErrorKind::TrivialSubgroup, "Tate construction needs a nontrivial subgroup");
  const std::string t = "^{t" + group_name + "}";
  if (a.is_bot()) return {true, "(*)" + t + " ≃ *", "trivial"};
  if (a.is_level() && a.n() == 0) return {true, "(HQ)" + t + " ≃ *", "Cor 3.23"};
  const std::string base = a.is_top() ? "(S^0)" : "(L_{E(" + std::to_string(a.n()) + ")}S^0)";
  if (!p.divides(order))
    return {true, base + t + " ≃ *", "oracle axiom: Tate vanishing for p'-groups"};
  if (a.is_top()) return {false, base + t + " ≄ *", "Prop 3.24"};
  return {false, base + t + " ≄ *", "Cor 3.23"};
}

bool tate_vanishes(ChromLevel a, std::size_t order, const Prime& p) {
  return tate_entry(a, order, "K", p).vanishes;
}

}  // namespace smashlab
