#include "smashlab/ideals.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "smashlab/error.hpp"
#include "smashlab/support.hpp"
#include "smashlab/typecheck.hpp"

namespace smashlab {

std::string IdealSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

IdealSequence validate_sequence(const std::vector<unsigned>& entries, const Prime& p) {
  if (entries.empty()) throw Error(ErrorKind::InvalidSequence, "empty sequence");
  std::size_t n = entries.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j)
      if (entries[i] > entries[i + j] + 1)
        throw Error(ErrorKind::InvalidSequence,
                    "m_" + std::to_string(i) + " = " + std::to_string(entries[i]) + " exceeds m_" +
                        std::to_string(i + j) + " + 1 = " + std::to_string(entries[i + j] + 1) +
                        " at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  return {p.value(), entries};
}

std::vector<unsigned> parse_entries(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 6)
      throw Error(ErrorKind::InvalidSequence, "expected a natural number, found '" + item + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidSequence, "empty sequence");
  return out;
}

// Fills entries from the top index down: m_i may be at most one more than
// the minimum of the entries above it.
std::vector<IdealSequence> enumerate_sequences(unsigned n, unsigned max_level, const Prime& p) {
  std::vector<IdealSequence> out;
  std::vector<unsigned> m(n + 1);
  std::function<void(int, unsigned)> fill = [&](int i, unsigned bound) {
    if (i < 0) {
      out.push_back({p.value(), m});
      return;
    }
    for (unsigned v = 0; v <= std::min(bound, max_level); ++v) {
      m[i] = v;
      fill(i - 1, std::min(bound, v + 1));
    }
  };
  fill(static_cast<int>(n), max_level);
  std::sort(out.begin(), out.end(),
            [](const IdealSequence& a, const IdealSequence& b) { return a.m < b.m; });
  return out;
}

namespace {

unsigned power(unsigned p, unsigned k) {
  unsigned r = 1;
  while (k--) r *= p;
  return r;
}

std::string cyc(unsigned order) { return "C(" + std::to_string(order) + ")"; }

std::string build(unsigned p, const std::vector<unsigned>& m, Construction& c) {
  unsigned n = static_cast<unsigned>(m.size()) - 1;
  std::string g = cyc(power(p, n));
  std::string label = "C_" + std::to_string(power(p, n));
  if (n == 1) {
    c.cases.push_back(label + ": base case " + IdealSequence{p, m}.to_string());
    return "ind[" + g + "](E(" + std::to_string(m[0]) + ")) v tEF[triv]@" + g + " ^ triv[" + g +
           "](E(" + std::to_string(m[1]) + "))";
  }
  std::vector<unsigned> tail(m.begin() + 1, m.end());
  std::size_t at = c.cases.size();
  c.cases.push_back("");
  std::string pulled =
      "pull[quot[" + g + "," + cyc(power(p, n - 1)) + "]](" + build(p, tail, c) + ")";
  std::string upper = "tEF[triv]@" + g + " ^ " + pulled;
  if (m[0] == m[1]) {
    c.cases[at] = label + ": case (i), m_0 = m_1";
    return pulled;
  }
  if (m[0] < m[1]) {
    c.cases[at] = label + ": case (ii), m_0 < m_1";
    return "triv[" + g + "](E(" + std::to_string(m[0]) + ")) v " + upper;
  }
  c.cases[at] = label + ": case (iii), m_0 = m_1 + 1";
  c.notes.push_back("case (iii) at " + label + ": the norm N_{C_p}^{C_{p^{n+1}}} is read as the norm into " +
                    label + ", the ambient of the wedge (suspected typo)");
  Construction inner;
  std::string base = build(p, {m[0], m[1]}, inner);
  return "norm[" + g + "](" + base + ") v " + upper;
}

}  // namespace

Construction construct(const IdealSequence& s) {
  IdealSequence v = validate_sequence(s.m, Prime(s.p));
  if (v.n() == 0)
    throw Error(ErrorKind::InvalidSequence, "the construction needs n >= 1");
  Construction c;
  c.expr = parse_expr(build(v.p, v.m, c));
  c.provenance = v.n() == 1 ? "smashing by Prop 4.9" : "smashing by Prop 4.9 / Thm 4.10";
  return c;
}

VerifyResult verify_expr(const IdealSequence& s, const ExprPtr& e) {
  std::size_t order = power(s.p, s.n());
  Session ses(Prime(s.p), std::max<std::size_t>(kDefaultOrderCap, order));
  TypedPtr t = ses.typecheck(e);
  VerifyResult r;
  if (t->ambient.order() != order)
    throw Error(ErrorKind::AmbientMismatch, "expected a class over C_" + std::to_string(order));
  ChromSupport sup = support(t);
  const auto& g = t->ambient;
  for (unsigned i = 0; i <= s.n(); ++i) {
    int k = -1;
    for (int x = 0; x < static_cast<int>(g.subgroup_count()) && k < 0; ++x)
      if (g.subgroup_elements(x).size() == power(s.p, i)) k = x;
    ChromLevel a = sup.at(k);
    r.values.push_back(a);
    if (a != ChromLevel::level(s.m[i]) && !r.failing_index) r.failing_index = i;
  }
  r.ok = !r.failing_index;
  return r;
}

VerifyResult verify(const IdealSequence& s) { return verify_expr(s, construct(s).expr); }

}  // namespace smashlab
