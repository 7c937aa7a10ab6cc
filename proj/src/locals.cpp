#include <algorithm>
#include <functional>

#include "smashlab/error.hpp"
#include "smashlab/smashing.hpp"

namespace smashlab {

namespace {

std::string level_unit(ChromLevel a) {
  if (a.is_bot()) return "*";
  if (a.is_top()) return "S^0";
  return "i_*L_{" + a.to_string() + "}(S^0)";
}

std::string sub_display(const FiniteGroup& g, int s) {
  return display_name(g.subgroup_as_group(s, g.subgroup_label(s)));
}

// Name of Ẽ for family f: ẼG for the trivial family, ẼP for the proper
// family, ẼF_H when f is generated by one subgroup H.
std::string tilde_name(const FiniteGroup& g, const Family& f) {
  if (f == Family::trivial(g)) return "Ẽ" + display_name(g);
  if (f == Family::proper(g)) return "ẼP";
  auto members = f.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it)
    if (Family::generated_by(g, {*it}) == f) return "ẼF_{" + sub_display(g, *it) + "}";
  return "ẼF";
}

std::string cofree_name(const FiniteGroup& g, int h) {
  if (h == g.trivial_index()) return "E" + display_name(g) + "+";
  if (Family::generated_by(g, {h}) == Family::proper(g)) return "EP+";
  return "EF_{" + sub_display(g, h) + "}+";
}

// Localized unit restricted to F_H, named by the shape of its support there.
std::string unit_name(const FiniteGroup& g, int h, const ChromSupport& s) {
  std::vector<int> in_family;
  for (int l = 0; l < static_cast<int>(g.subgroup_count()); ++l)
    if (g.subgroup_contains(h, l)) in_family.push_back(l);
  bool constant = std::all_of(in_family.begin(), in_family.end(),
                              [&](int l) { return s.at(l) == s.at(h); });
  if (constant) return level_unit(s.at(h));
  bool binary = std::all_of(in_family.begin(), in_family.end(),
                            [&](int l) { return s.at(l).is_bot() || s.at(l).is_top(); });
  if (binary) {
    std::vector<int> bots;
    for (int l : in_family)
      if (s.at(l).is_bot()) bots.push_back(l);
    Family fb = Family::generated_by(g, bots);
    bool matches = std::all_of(in_family.begin(), in_family.end(),
                               [&](int l) { return fb.contains(l) == s.at(l).is_bot(); });
    if (matches) return tilde_name(g, fb);
  }
  return "L_{" + display_name(g) + "_+∧_{" + sub_display(g, h) + "}E}(S^0)";
}

int induced_from(const Typed& t) {
  return t.map->image_index(t.map->source().whole_index());
}

std::string expr_name(const TypedPtr& t) { return to_string(*t->source); }

}  // namespace

Formula emit_localization_formula(const TypedPtr& e, const Prime& p) {
  const auto& g = e->ambient;
  if (e->kind == NodeKind::ER)
    return {"EC_2+", level_unit(ChromLevel::level(e->n)), "Thm 4.1"};
  if (e->kind == NodeKind::EG)
    return {"E" + display_name(g) + "+",
            level_unit(ChromLevel::level((1u << (e->n - 1)) * e->m)), "Thm 4.7"};
  if (e->kind != NodeKind::Ind)
    throw Error(ErrorKind::ShapeNotCovered,
                std::string("no localization formula for a ") + to_string(e->kind) + " node");
  int h = induced_from(*e);
  if (h == g.whole_index())
    throw Error(ErrorKind::ShapeNotCovered, "induction along an isomorphism has no formula");
  if (h == g.trivial_index()) {
    ChromLevel a = support(e->child).at(0);
    return {cofree_name(g, h), level_unit(a), "Prop 3.21"};
  }
  if (!g.is_normal(h))
    throw Error(ErrorKind::ShapeNotCovered,
                g.subgroup_label(h) + " is not normal in " + g.name());
  Verdict v = derive_smashing(e->child, p);
  if (v.status != Status::Smashing)
    throw Error(ErrorKind::ShapeNotCovered, "operand of the induction is not derivably smashing");
  return {cofree_name(g, h), unit_name(g, h, support(e)), "Prop 3.20"};
}

std::string Statement::to_string() const {
  std::string s = "[" + citation + "] " + headline;
  for (std::size_t i = 0; i < conditions.size(); ++i)
    s += (i == 0 ? " " : (i + 1 == conditions.size() ? " and " : ", ")) + conditions[i];
  return s;
}

Statement characterize_locals(const TypedPtr& e, const Prime& p, bool fixed_points) {
  const auto& g = e->ambient;
  std::string name = expr_name(e);
  if (fixed_points) {
    if (derive_smashing(e, p).status != Status::Smashing)
      throw Error(ErrorKind::ShapeNotCovered, "E^G-locals need a derivably smashing class");
    return {"Cor 3.14(5)", "assuming Z_{E^G} ⊂ Z_{E^H} for all H, X ∈ Sp is E^G-local iff",
            {"i_*X is " + name + "-local"}};
  }
  if (e->kind == NodeKind::Ind) {
    int h = induced_from(*e);
    if (h != g.whole_index()) {
      std::string hd = sub_display(g, h);
      std::string inner = expr_name(e->child);
      std::string cofree = "X is " + hd + "-cofree";
      if (g.is_abelian())
        return {"Cor 3.10", "X is local iff", {cofree, "res_{" + hd + "} X is " + inner + "-local"}};
      if (g.is_normal(h)) {
        std::vector<bool> seen(g.order(), false);
        std::string wedge;
        for (int x = 0; x < static_cast<int>(g.order()); ++x) {
          if (seen[x]) continue;
          for (int y : g.subgroup_elements(h)) seen[g.mul(x, y)] = true;
          std::string conj = x == g.identity() ? inner : "^{" + g.element(x).to_cycles() + "}" + inner;
          wedge += (wedge.empty() ? "" : " ∨ ") + conj;
        }
        return {"Cor 3.9", "X is local iff", {cofree, "res_{" + hd + "} X is (" + wedge + ")-local"}};
      }
      return {"Prop 3.7", "X is local iff",
              {cofree, "res_{" + hd + "} X is res_{" + hd + "}(" + display_name(g) + "_+∧_{" + hd +
                           "} " + inner + ")-local"}};
    }
  }
  bool child_smashing = e->child && derive_smashing(e->child, p).status == Status::Smashing;
  if (e->kind == NodeKind::Triv && child_smashing)
    return {"Cor 3.14(2)", "X is local iff",
            {"Φ^K(X) is " + expr_name(e->child) + "-local for every K ⊆ " + display_name(g)}};
  if (e->kind == NodeKind::Pull && child_smashing) {
    Statement s{"Cor 3.14(3)", "X is local iff", {}};
    const auto& f = *e->map;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      int k = g.class_rep(static_cast<int>(c));
      s.conditions.push_back("Φ^{" + g.subgroup_label(k) + "}(X) is Φ^{" +
                             f.target().subgroup_label(f.image_index(k)) + "}(E)-local");
    }
    return s;
  }
  if (e->kind == NodeKind::Norm && child_smashing) {
    Statement s{"Cor 3.14(4)", "X is local iff", {}};
    const auto& iota = *e->map;
    const ChromSupport& inner = support(e->child);
    int h = induced_from(*e);
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      int k = g.class_rep(static_cast<int>(c));
      for (int x : double_coset_indices(g, k, h)) {
        int kg = g.intersect_index(g.conjugate_index(k, g.inv(x)), h);
        ChromLevel a = inner.at(*iota.preimage_index(kg));
        s.conditions.push_back("Φ^{" + g.subgroup_label(k) + "}(X) is Φ^{" + g.subgroup_label(kg) +
                               "}(E)-local [" + g.element(x).to_cycles() + ", " + a.to_string() + "]");
      }
    }
    return s;
  }
  if (derive_smashing(e, p).status == Status::Smashing) {
    Statement s{"Cor 3.14(1)", "X is local iff", {}};
    const ChromSupport& sup = support(e);
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      int k = g.class_rep(static_cast<int>(c));
      ChromLevel a = sup.at(k);
      std::string phi = "Φ^{" + g.subgroup_label(k) + "}(X)";
      if (a.is_bot()) s.conditions.push_back(phi + " ≃ *");
      else if (a.is_level()) s.conditions.push_back(phi + " is " + a.to_string() + "-local");
    }
    if (s.conditions.empty()) s.headline = "every X is local";
    return s;
  }
  throw Error(ErrorKind::ShapeNotCovered,
              std::string("no characterization of locals for this ") + to_string(e->kind) +
                  " node: it is not derivably smashing");
}

IdempotentPair combine_idempotents(const Session& ses, const std::vector<IdempotentPair>& pairs,
                                   CombineMode mode) {
  if (pairs.empty()) throw Error(ErrorKind::Usage, "combine needs at least one pair");
  std::optional<FiniteGroup> ambient;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    TypedPtr l = ses.typecheck(pairs[i].left);
    TypedPtr r = ses.typecheck(pairs[i].right);
    for (const auto& t : {l, r}) {
      if (!ambient) ambient = t->ambient;
      if (!(t->ambient == *ambient))
        throw Error(ErrorKind::AmbientMismatch, "pair " + std::to_string(i + 1) + " lives over " +
                                                    t->ambient.name() + ", expected " +
                                                    ambient->name());
    }
    if (!is_acyclic(l, r))
      throw Error(ErrorKind::InvariantViolation,
                  "pair " + std::to_string(i + 1) + ": the supports of its two halves meet");
  }
  NodeKind left_op = mode == CombineMode::Join ? NodeKind::Smash : NodeKind::Wedge;
  NodeKind right_op = mode == CombineMode::Join ? NodeKind::Wedge : NodeKind::Smash;
  IdempotentPair out = pairs.front();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    out.left = make_binary(left_op, out.left, pairs[i].left);
    out.right = make_binary(right_op, out.right, pairs[i].right);
  }
  if (!is_acyclic(ses.typecheck(out.left), ses.typecheck(out.right)))
    throw Error(ErrorKind::InvariantViolation, "combined pair has meeting supports");
  return out;
}

FixedPointsClass fixed_points_class(const TypedPtr& e, bool ring_hypothesis) {
  FixedPointsClass out;
  out.level = fixed_points_class(support(e));
  out.ring_hypothesis = ring_hypothesis;
  return out;
}

}  // namespace smashlab
