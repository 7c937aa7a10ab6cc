#include "smashlab/smashing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "smashlab/error.hpp"

namespace smashlab {

const char* to_string(Status s) {
  switch (s) {
    case Status::Smashing: return "Smashing";
    case Status::NotSmashing: return "NotSmashing";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using Sigma = std::function<ChromLevel(int)>;

void cite(Verdict& v, const std::string& c) {
  if (c == "trivial") return;
  if (std::find(v.citations.begin(), v.citations.end(), c) == v.citations.end())
    v.citations.push_back(c);
}

std::string quotient_name(const FiniteGroup& g, int j, int m, std::size_t q) {
  bool prime = q >= 2;
  for (std::size_t d = 2; d * d <= q && prime; ++d)
    if (q % d == 0) prime = false;
  if (prime) return "C_" + std::to_string(q);
  if (g.subgroup_elements(m).size() == 1) return display_name(g.subgroup_as_group(j));
  return g.subgroup_label(j) + "/" + g.subgroup_label(m);
}

// Decides smashing for a class Bousfield equal to ind_N^K of a smashing
// N-class, N normal in K, where sigma gives the class's support on the
// subgroups of K (as subgroup indices of g). Phi^J of the localized unit is
// the Tate construction of L_{sigma(J ∩ N)}(S^0) for the quotient J/(J ∩ N).
Verdict normal_induction_rule(const FiniteGroup& g, int k, int n, const Sigma& sigma,
                              const Prime& p) {
  Verdict v;
  bool free = g.subgroup_elements(n).size() == 1;
  if (free) {
    cite(v, "Cor 3.22");
  } else {
    cite(v, "Prop 3.18");
    cite(v, "Cor 3.19");
    cite(v, "Prop 3.20");
  }
  std::vector<std::string> vanishing;
  for (int j = 0; j < static_cast<int>(g.subgroup_count()); ++j) {
    if (!g.subgroup_contains(k, j) || g.subgroup_contains(n, j)) continue;
    int m = g.intersect_index(j, n);
    ChromLevel a = sigma(m);
    std::size_t q = g.subgroup_elements(j).size() / g.subgroup_elements(m).size();
    bool decided = a.is_bot() || (a.is_level() && a.n() == 0) || !p.divides(q) || q == p.value();
    if (!decided) {
      // p divides |J/M| properly; an order-p subgroup between M and J was
      // already visited, so this is only reachable if that one vanished.
      v.status = Status::Unknown;
      v.trace.push_back("needs the Tate construction of " + a.to_string() + " for " +
                        quotient_name(g, j, m, q));
      return v;
    }
    auto entry = tate_entry(a, q, quotient_name(g, j, m, q), p);
    if (!entry.vanishes) {
      v.status = Status::NotSmashing;
      v.witness = Witness{g.subgroup_label(j), entry.statement};
      cite(v, entry.citation);
      v.trace.push_back("Φ^{" + g.subgroup_label(j) + "} of the localized unit: " + entry.statement);
      return v;
    }
    cite(v, entry.citation);
    vanishing.push_back(g.subgroup_label(j));
  }
  v.status = Status::Smashing;
  std::string list;
  for (const auto& s : vanishing) list += (list.empty() ? "" : ", ") + s;
  v.trace.push_back(vanishing.empty() ? "no subgroup outside the family; criterion is vacuous"
                                      : "Φ^J of the localized unit vanishes for J = " + list);
  return v;
}

bool constant_on(const FiniteGroup& g, int n, const Sigma& sigma) {
  for (int l = 0; l < static_cast<int>(g.subgroup_count()); ++l)
    if (g.subgroup_contains(n, l) && sigma(l) != sigma(n)) return false;
  return true;
}

// {Bot, Top}-valued on subgroups of n with the Bot-set closed under
// subgroups: the support of an idempotent ẼF.
bool idempotent_on(const FiniteGroup& g, int n, const Sigma& sigma) {
  for (int l = 0; l < static_cast<int>(g.subgroup_count()); ++l) {
    if (!g.subgroup_contains(n, l)) continue;
    ChromLevel a = sigma(l);
    if (!a.is_bot() && !a.is_top()) return false;
    if (a.is_bot())
      for (int s = 0; s < l; ++s)
        if (g.subgroup_contains(l, s) && !sigma(s).is_bot()) return false;
  }
  return true;
}

bool is_normal_in(const FiniteGroup& g, int n, int k) {
  for (int x : g.subgroup_elements(k))
    if (g.conjugate_index(n, x) != n) return false;
  return true;
}

class Decider {
 public:
  explicit Decider(const Prime& p) : p_(p) {}

  Verdict decide(const TypedPtr& t) {
    auto it = memo_.find(t.get());
    if (it != memo_.end()) return it->second;
    Verdict v = structural(t);
    if (v.status == Status::Unknown) {
      Verdict r = reduce(t);
      if (r.status != Status::Unknown) {
        r.trace.insert(r.trace.begin(), v.trace.begin(), v.trace.end());
        v = r;
      }
    }
    memo_[t.get()] = v;
    return v;
  }

 private:
  Prime p_;
  SupportEvaluator eval_;
  std::map<const Typed*, Verdict> memo_;

  Sigma sigma_of(const TypedPtr& t) {
    const ChromSupport& s = eval_.eval(t);
    return [&s](int l) { return s.at(l); };
  }

  static Verdict smashing(std::initializer_list<const char*> cites, std::string why) {
    Verdict v;
    v.status = Status::Smashing;
    for (const char* c : cites) v.citations.push_back(c);
    v.trace.push_back(std::move(why));
    return v;
  }

  static Verdict unknown(std::string need, std::initializer_list<const char*> cites = {}) {
    Verdict v;
    for (const char* c : cites) v.citations.push_back(c);
    v.trace.push_back(std::move(need));
    return v;
  }

  Verdict structural(const TypedPtr& t) {
    const auto& g = t->ambient;
    if (g.order() == 1) {
      ChromLevel a = eval_.eval(t).at(0);
      if (a.is_level())
        return smashing({"smash product theorem"},
                        "nonequivariant class " + a.to_string() + " is smashing");
      return smashing({"Cor 2.11"}, std::string("nonequivariant class ") +
                                        (a.is_top() ? "S^0" : "*") + " is an idempotent");
    }
    switch (t->kind) {
      case NodeKind::S0:
      case NodeKind::Pt:
        return smashing({"Cor 2.11"}, "S^0 and * are idempotents");
      case NodeKind::EFTilde:
        return smashing({"Cor 2.11"}, "ẼF is a right idempotent");
      case NodeKind::EFPlus:
        if (t->family->size() == g.subgroup_count() || t->family->size() == 0)
          return smashing({"Cor 2.11"}, "EF+ with F all or empty is S^0 or *");
        return unknown("EF+ for a proper nonempty family has the class of an induced spectrum");
      case NodeKind::ER:
      case NodeKind::EG: {
        Verdict v = normal_induction_rule(g, g.whole_index(), g.trivial_index(), sigma_of(t), p_);
        if (t->kind == NodeKind::ER) {
          v.citations.insert(v.citations.begin(), "Ex 2.4");
          if (v.status == Status::NotSmashing) cite(v, "Thm 4.1");
          v.trace.insert(v.trace.begin(), "⟨E_R(n)⟩ = ⟨C_2+ ∧ E(n)⟩");
        } else {
          v.citations.insert(v.citations.begin(), "Cor 4.6");
          if (v.status == Status::NotSmashing) cite(v, "Thm 4.7");
          v.trace.insert(v.trace.begin(), "⟨E_G(m)⟩ = ⟨" + display_name(g) + "+ ∧ E(" +
                                              std::to_string((1u << (t->n - 1)) * t->m) + ")⟩");
        }
        return v;
      }
      case NodeKind::Atom:
        return unknown("atom support is not of a recognized smashing shape");
      case NodeKind::Triv:
      case NodeKind::Res:
      case NodeKind::Pull:
      case NodeKind::Norm: {
        Verdict c = decide(t->child);
        const char* rule = t->kind == NodeKind::Triv  ? "Prop 3.12(1)"
                           : t->kind == NodeKind::Res ? "Prop 3.12(2)"
                           : t->kind == NodeKind::Pull ? "Prop 3.12(4)"
                                                       : "Prop 3.12(5)";
        if (c.status == Status::Smashing)
          return smashing({rule}, std::string(to_string(t->kind)) + " of a smashing class");
        return unknown(std::string(to_string(t->kind)) + " of a class not known to be smashing");
      }
      case NodeKind::Smash:
      case NodeKind::Wedge: {
        Verdict a = decide(t->child);
        Verdict b = decide(t->rhs);
        if (a.status == Status::Smashing && b.status == Status::Smashing)
          return smashing({"Cor 2.12"}, std::string(t->kind == NodeKind::Smash ? "smash" : "wedge") +
                                            " of smashing classes");
        return unknown("operand not known to be smashing");
      }
      case NodeKind::Ind: return induction(t);
      case NodeKind::E:
      case NodeKind::Ident: break;
    }
    return unknown("no rule applies");
  }

  Verdict induction(const TypedPtr& t) {
    const auto& g = t->ambient;
    const auto& iota = *t->map;
    int h = iota.image_index(iota.source().whole_index());
    if (h == g.whole_index()) {
      Verdict c = decide(t->child);
      c.trace.insert(c.trace.begin(), "induction along an isomorphism");
      return c;
    }
    if (h == g.trivial_index()) {
      Verdict v = normal_induction_rule(g, g.whole_index(), h, sigma_of(t), p_);
      if (v.status == Status::NotSmashing && g.order() == 2 && t->child->kind == NodeKind::E)
        cite(v, "Thm 4.1");
      return v;
    }
    if (!g.is_normal(h))
      return unknown("Prop 3.18 needs Φ^K(L(S^0)) for K outside F_H; H is not normal",
                     {"Prop 3.18"});
    Verdict c = decide(t->child);
    if (c.status != Status::Smashing)
      return unknown("operand of the induction is not known to be smashing", {"Cor 3.19"});
    Verdict v = normal_induction_rule(g, g.whole_index(), h, sigma_of(t), p_);
    v.trace.insert(v.trace.begin(), "operand of the induction is smashing");
    return v;
  }

  // Looks for K ≤ G and N normal in K with res_K of the class Bousfield
  // equal to ind_N^K of a recognizably smashing N-class.
  Verdict reduce(const TypedPtr& t) {
    const auto& g = t->ambient;
    Sigma sigma = sigma_of(t);
    for (int c = static_cast<int>(g.class_count()) - 1; c >= 0; --c) {
      int k = g.class_rep(c);
      bool whole = k == g.whole_index();
      for (int n = 0; n <= k; ++n) {
        if (!g.subgroup_contains(k, n) || !is_normal_in(g, n, k)) continue;
        bool constant = constant_on(g, n, sigma);
        bool recognized = g.subgroup_elements(n).size() == 1 || constant || idempotent_on(g, n, sigma);
        if (!recognized) continue;
        bool induced = true;
        for (int l = 0; l < static_cast<int>(g.subgroup_count()) && induced; ++l)
          if (g.subgroup_contains(k, l) && !g.subgroup_contains(n, l) && !sigma(l).is_bot())
            induced = false;
        if (!induced) continue;
        std::string where = whole ? std::string("the class")
                                  : "the restriction to " + g.subgroup_label(k);
        if (n == k) {
          if (!whole) continue;
          return smashing({constant ? "Prop 3.12(1)" : "Cor 2.11"},
                          constant ? "support is constant: Bousfield equal to i_*" +
                                         sigma(k).to_string()
                                   : "support is that of an idempotent ẼF");
        }
        Verdict v = normal_induction_rule(g, k, n, sigma, p_);
        std::string step = where + " is Bousfield equal to ind from " + g.subgroup_label(n) +
                           " of a smashing class";
        v.trace.insert(v.trace.begin(), step);
        if (whole && v.status != Status::Unknown) return v;
        if (!whole && v.status == Status::NotSmashing) {
          cite(v, "Prop 3.12(2)");
          v.trace.push_back("restriction preserves smashing classes, so the class is not smashing");
          return v;
        }
      }
    }
    return unknown("no reduction to an induced smashing class found");
  }
};

}  // namespace

Verdict derive_smashing(const TypedPtr& e, const Prime& p) { return Decider(p).decide(e); }

}  // namespace smashlab
