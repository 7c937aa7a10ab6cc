#include "smashlab/ninfty.hpp"

#include <algorithm>

#include "smashlab/error.hpp"
#include "smashlab/support.hpp"

namespace smashlab {

namespace {

int canonical_in(const FiniteGroup& g, int acting, int s) {
  int best = s;
  for (int x : g.subgroup_elements(acting)) best = std::min(best, g.conjugate_index(s, x));
  return best;
}

// Representatives x of the double cosets K x S inside the acting group A.
std::vector<int> double_coset_reps(const FiniteGroup& g, int a, int k, int s) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (int x : g.subgroup_elements(a)) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int y : g.subgroup_elements(k))
      for (int z : g.subgroup_elements(s)) seen[g.mul(g.mul(y, x), z)] = true;
  }
  return reps;
}

std::vector<int> subgroups_of(const FiniteGroup& g, int h) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(g.subgroup_count()); ++s)
    if (g.subgroup_contains(h, s)) out.push_back(s);
  return out;
}

std::string orbit_name(const FiniteGroup& g, int h, int k) {
  return g.subgroup_label(h) + "/" + g.subgroup_label(k);
}

}  // namespace

GSet GSet::make(const FiniteGroup& g, int acting, std::vector<int> stabilizers) {
  for (int& s : stabilizers) {
    if (!g.subgroup_contains(acting, s))
      throw Error(ErrorKind::AmbientMismatch,
                  g.subgroup_label(s) + " is not a subgroup of " + g.subgroup_label(acting));
    s = canonical_in(g, acting, s);
  }
  std::sort(stabilizers.begin(), stabilizers.end());
  return GSet{g, acting, std::move(stabilizers)};
}

std::size_t GSet::cardinality() const {
  std::size_t n = 0;
  for (int s : orbits)
    n += ambient.subgroup_elements(acting).size() / ambient.subgroup_elements(s).size();
  return n;
}

std::string GSet::to_string() const {
  if (orbits.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    out += (i ? " + " : "") + orbit_name(ambient, acting, orbits[i]);
  return out;
}

GSet restrict_gset(const GSet& t, int k) {
  const auto& g = t.ambient;
  if (!g.subgroup_contains(t.acting, k))
    throw Error(ErrorKind::AmbientMismatch, g.subgroup_label(k) + " is not a subgroup of " +
                                                g.subgroup_label(t.acting));
  std::vector<int> out;
  for (int s : t.orbits)
    for (int x : double_coset_reps(g, t.acting, k, s))
      out.push_back(g.intersect_index(k, g.conjugate_index(s, x)));
  return GSet::make(g, k, std::move(out));
}

bool is_admissible(const IndexingSystem& sys, int h, const GSet& t) {
  if (!(t.ambient == sys.ambient()) || t.acting != h)
    throw Error(ErrorKind::AmbientMismatch, "G-set is not over " + sys.ambient().subgroup_label(h));
  return std::all_of(t.orbits.begin(), t.orbits.end(), [&](int s) { return sys.admits(h, s); });
}

IndexingSystem IndexingSystem::from_pairs(const FiniteGroup& g, int top,
                                          const std::vector<std::pair<int, int>>& pairs) {
  IndexingSystem sys(g, top);
  for (int h : subgroups_of(g, top)) sys.pairs_.insert({h, h});
  for (auto [h, k] : pairs) {
    if (!g.subgroup_contains(top, h) || !g.subgroup_contains(h, k))
      throw Error(ErrorKind::ClosureViolation, orbit_name(g, h, k) + " is not an orbit of a subgroup of " +
                                                   g.subgroup_label(top));
    sys.pairs_.insert({h, k});
  }
  return sys;
}

IndexingSystem IndexingSystem::closure(const FiniteGroup& g, int top,
                                       const std::vector<std::pair<int, int>>& pairs) {
  IndexingSystem sys = from_pairs(g, top, pairs);
  std::vector<std::pair<int, int>> work(sys.pairs_.begin(), sys.pairs_.end());
  auto add = [&](int h, int k) {
    if (sys.pairs_.insert({h, k}).second) work.push_back({h, k});
  };
  while (!work.empty()) {
    auto [h, k] = work.back();
    work.pop_back();
    for (int x : g.subgroup_elements(top)) add(g.conjugate_index(h, x), g.conjugate_index(k, x));
    for (int l : subgroups_of(g, h))
      for (int s : restrict_gset(GSet::make(g, h, {k}), l).orbits) add(l, s);
  }
  return sys;
}

IndexingSystem IndexingSystem::complete(const FiniteGroup& g, int top) {
  std::vector<std::pair<int, int>> all;
  for (int h : subgroups_of(g, top))
    for (int k : subgroups_of(g, h)) all.push_back({h, k});
  return from_pairs(g, top, all);
}

IndexingSystem IndexingSystem::trivial(const FiniteGroup& g, int top) { return from_pairs(g, top, {}); }

std::vector<std::pair<int, int>> IndexingSystem::nontrivial_reps() const {
  std::set<std::pair<int, int>> reps;
  for (auto [h, k] : pairs_) {
    if (h == k) continue;
    std::pair<int, int> best{h, k};
    for (int x : g_.subgroup_elements(top_))
      best = std::min(best, {g_.conjugate_index(h, x), g_.conjugate_index(k, x)});
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

std::optional<std::string> IndexingSystem::first_violation() const {
  for (int h : subgroups_of(g_, top_))
    if (!admits(h, h)) return "trivial orbit " + orbit_name(g_, h, h) + " is missing";
  for (auto [h, k] : pairs_) {
    for (int x : g_.subgroup_elements(top_)) {
      int hx = g_.conjugate_index(h, x), kx = g_.conjugate_index(k, x);
      if (!admits(hx, kx))
        return orbit_name(g_, h, k) + " is admissible but its conjugate " + orbit_name(g_, hx, kx) +
               " is not";
    }
    for (int l : subgroups_of(g_, h))
      for (int s : restrict_gset(GSet::make(g_, h, {k}), l).orbits)
        if (!admits(l, s))
          return orbit_name(g_, h, k) + " is admissible but its restriction to " +
                 g_.subgroup_label(l) + " has the inadmissible orbit " + orbit_name(g_, l, s);
  }
  return std::nullopt;
}

void IndexingSystem::validate() const {
  if (auto v = first_violation()) throw Error(ErrorKind::ClosureViolation, *v);
}

IndexingSystem IndexingSystem::restrict_to(int h) const {
  if (!g_.subgroup_contains(top_, h))
    throw Error(ErrorKind::AmbientMismatch,
                g_.subgroup_label(h) + " is not a subgroup of " + g_.subgroup_label(top_));
  IndexingSystem sys(g_, h);
  for (auto p : pairs_)
    if (g_.subgroup_contains(h, p.first)) sys.pairs_.insert(p);
  return sys;
}

bool IndexingSystem::subset_of(const IndexingSystem& o) const {
  return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
}

IndexingSystem coinduce(const IndexingSystem& below_h, int h) {
  const auto& g = below_h.ambient();
  IndexingSystem in = below_h.top() == h ? below_h : below_h.restrict_to(h);
  in.validate();
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < static_cast<int>(g.subgroup_count()); ++k)
    for (int k2 : subgroups_of(g, k)) {
      bool ok = true;
      for (int x = 0; x < static_cast<int>(g.order()) && ok; ++x) {
        int kx = g.conjugate_index(k, x);
        int l = g.intersect_index(h, kx);
        ok = is_admissible(in, l, restrict_gset(GSet::make(g, kx, {g.conjugate_index(k2, x)}), l));
      }
      if (ok) out.push_back({k, k2});
    }
  IndexingSystem result = IndexingSystem::from_pairs(g, g.whole_index(), out);
  if (auto v = result.first_violation())
    throw Error(ErrorKind::InvariantViolation, "coinduced system is not closed: " + *v);
  return result;
}

GroupTermPtr ambient_term(const TypedPtr& t) {
  switch (t->kind) {
    case NodeKind::E: return cyclic_term(1);
    case NodeKind::ER: return cyclic_term(2);
    case NodeKind::EG: return cyclic_term(1u << t->n);
    case NodeKind::Smash:
    case NodeKind::Wedge: return ambient_term(t->child);
    case NodeKind::Pull:
      if (t->source->hom && t->source->hom->source) return t->source->hom->source;
      break;
    default:
      if (t->source->group) return t->source->group;
      if (t->kind == NodeKind::S0 || t->kind == NodeKind::Pt) return cyclic_term(1);
  }
  throw Error(ErrorKind::Usage, "cannot name the ambient group of this expression; pass --group");
}

GroupTermPtr subgroup_term(const GroupTermPtr& g, const FiniteGroup& ambient, int s) {
  if (s == ambient.whole_index()) return g;
  auto t = std::make_shared<GroupTerm>();
  t->kind = GroupTerm::Kind::Sub;
  t->a = g;
  for (const auto& w : ambient.subgroup_generators(s)) t->gens.push_back(parse_cycle_list(w).front());
  if (t->gens.empty()) t->gens.push_back(CycleWord{});
  return t;
}

namespace {

std::string family_text(const GroupTermPtr& gt, const FiniteGroup& g, int h,
                        const std::vector<int>& members) {
  std::vector<int> subs = subgroups_of(g, h);
  if (members.size() == 1) return "triv";
  if (members.size() == subs.size()) return "all";
  if (members.size() + 1 == subs.size()) return "proper";
  std::vector<std::string> maximal;
  for (int m : members) {
    bool is_max = std::none_of(members.begin(), members.end(), [&](int o) {
      return o != m && g.subgroup_contains(o, m);
    });
    if (is_max) maximal.push_back(to_string(*subgroup_term(gt, g, m)));
  }
  std::string out = "{";
  for (std::size_t i = 0; i < maximal.size(); ++i) out += (i ? ", " : "") + maximal[i];
  return out + "}";
}

bool down_closed(const FiniteGroup& g, const std::vector<int>& set) {
  for (int m : set)
    for (int s = 0; s < m; ++s)
      if (g.subgroup_contains(m, s) && std::find(set.begin(), set.end(), s) == set.end())
        return false;
  return true;
}

// Expression over H whose support is top exactly on `spots`, a
// conjugation-invariant set of subgroups of H not containing H.
std::string test_object(const GroupTermPtr& gt, const FiniteGroup& g, int h,
                        const std::vector<int>& spots) {
  std::string at = "@" + to_string(*subgroup_term(gt, g, h));
  if (down_closed(g, spots)) return "EF[" + family_text(gt, g, h, spots) + "]" + at;
  std::vector<int> complement;
  for (int s : subgroups_of(g, h))
    if (std::find(spots.begin(), spots.end(), s) == spots.end()) complement.push_back(s);
  if (down_closed(g, complement) && !complement.empty())
    return "tEF[" + family_text(gt, g, h, complement) + "]" + at;
  // one summand per H-class: EF[below c]+ ∧ ẼF[strictly below c]
  std::string out;
  std::vector<bool> done(g.subgroup_count(), false);
  for (int c : spots) {
    if (done[c]) continue;
    for (int x : g.subgroup_elements(h)) done[g.conjugate_index(c, x)] = true;
    std::vector<int> below, strictly;
    for (int s : subgroups_of(g, h)) {
      bool sub = false, conj = false;
      for (int x : g.subgroup_elements(h)) {
        int cx = g.conjugate_index(c, x);
        sub = sub || g.subgroup_contains(cx, s);
        conj = conj || s == cx;
      }
      if (sub) below.push_back(s);
      if (sub && !conj) strictly.push_back(s);
    }
    std::string piece = "EF[" + family_text(gt, g, h, below) + "]" + at;
    if (!strictly.empty()) piece += " ^ tEF[" + family_text(gt, g, h, strictly) + "]" + at;
    out += (out.empty() ? "" : " v ") + piece;
  }
  return out;
}

}  // namespace

ClosureVerdict norm_closure_check(const Session& ses, const ExprPtr& e, const IndexingSystem& sys) {
  TypedPtr t = ses.typecheck(e);
  const auto& g = t->ambient;
  if (!(sys.ambient() == g) || sys.top() != g.whole_index())
    throw Error(ErrorKind::AmbientMismatch, "indexing system is not over " + g.name());
  ChromSupport sigma = support(t);
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (sigma.at_class(static_cast<int>(c)).is_level())
      throw Error(ErrorKind::UnsupportedSupport,
                  "support has the chromatic value " + sigma.at_class(static_cast<int>(c)).to_string() +
                      " at " + g.subgroup_label(g.class_rep(static_cast<int>(c))) +
                      "; the closure criterion is only decided for bot/top supports");
  ClosureVerdict v;
  for (auto [h, k] : sys.nontrivial_reps()) {
    for (int l : subgroups_of(g, h)) {
      if (!sigma.at(l).is_top()) continue;
      std::optional<int> witness;
      for (int x : double_coset_reps(g, h, l, k))
        if (sigma.at(g.intersect_index(l, g.conjugate_index(k, x))).is_top()) {
          witness = x;
          break;
        }
      if (witness) continue;
      GroupTermPtr gt = ambient_term(t);
      std::vector<int> spots;
      for (int s : subgroups_of(g, h))
        if (sigma.at(s).is_bot()) spots.push_back(s);
      ClosureCounterexample cx;
      cx.h = g.subgroup_label(h);
      cx.k = g.subgroup_label(k);
      cx.l = g.subgroup_label(l);
      cx.z = test_object(gt, g, h, spots);
      cx.norm = "norm[" + to_string(*subgroup_term(gt, g, h)) + "](res[" +
                to_string(*subgroup_term(gt, g, k)) + "](" + cx.z + "))";
      TypedPtr res_e = ses.parse_and_check("res[" + to_string(*subgroup_term(gt, g, h)) + "](" +
                                           to_string(*e) + ")");
      cx.z_acyclic = is_acyclic(ses.parse_and_check(cx.z), res_e);
      cx.norm_acyclic = is_acyclic(ses.parse_and_check(cx.norm), res_e);
      if (!cx.z_acyclic || cx.norm_acyclic)
        throw Error(ErrorKind::InvariantViolation,
                    "closure counterexample failed engine verification: " + cx.z);
      v.closed = false;
      v.trace.push_back("norm " + orbit_name(g, h, k) + " fails at " + cx.l +
                        ": every double coset lands where the class vanishes");
      v.counterexample = cx;
      return v;
    }
    v.trace.push_back("norm " + orbit_name(g, h, k) + " preserves the acyclics");
  }
  if (v.trace.empty()) v.trace.push_back("no nontrivial admissible norms");
  return v;
}

Propagation preservation_propagation(const Session& ses, const ExprPtr& e, const IndexingSystem& sys,
                                     Premise premise) {
  TypedPtr t = ses.typecheck(e);
  const auto& g = t->ambient;
  if (!(sys.ambient() == g) || sys.top() != g.whole_index())
    throw Error(ErrorKind::AmbientMismatch, "indexing system is not over " + g.name());
  int h;
  if (t->kind == NodeKind::ER || t->kind == NodeKind::EG)
    h = g.trivial_index();
  else if (t->kind == NodeKind::Ind)
    h = t->map->image_index(t->map->source().whole_index());
  else
    throw Error(ErrorKind::ShapeNotCovered, "propagation needs an induced class, found a " +
                                                std::string(to_string(t->kind)) + " node");
  Propagation out{{"Prop 5.3", "Cor 5.5", "Prop 5.6", "Cor 5.7"}, "", IndexingSystem::trivial(g, 0), {}, false};
  if (h != g.trivial_index()) {
    if (premise == Premise::None)
      throw Error(ErrorKind::MissingPremise,
                  "need that localization at the operand preserves algebras over the restriction "
                  "to " + g.subgroup_label(h) + " (certify or assert it)");
    if (premise == Premise::Certified) {
      const auto& iota = *t->map;
      const auto& src = iota.source();
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < static_cast<int>(src.subgroup_count()); ++a)
        for (int b = 0; b < static_cast<int>(src.subgroup_count()); ++b)
          if (src.subgroup_contains(a, b) && sys.admits(iota.image_index(a), iota.image_index(b)))
            pairs.push_back({a, b});
      auto below = IndexingSystem::from_pairs(src, src.whole_index(), pairs);
      auto check = norm_closure_check(ses, t->child->source, below);
      if (!check.closed)
        throw Error(ErrorKind::MissingPremise,
                    "the operand's acyclics are not closed under the norm " +
                        check.counterexample->h + "/" + check.counterexample->k);
      out.citations.insert(out.citations.begin(), "Thm 5.2");
    }
  }
  out.upgraded = coinduce(sys.restrict_to(h), h);
  for (auto p : out.upgraded.nontrivial_reps())
    if (!sys.admits(p.first, p.second)) out.new_norms.push_back(p);
  out.complete = out.upgraded == IndexingSystem::complete(g, g.whole_index());
  if (out.complete) {
    out.citations.push_back(t->kind == NodeKind::EG || t->kind == NodeKind::ER ? "Ex 5.9" : "Cor 5.8");
    out.statement = "L sends O-algebras to " + display_name(g) + "-commutative rings";
  } else {
    out.statement = "L preserves O-algebras and L(R) is an algebra over Map_G(EF_" +
                    g.subgroup_label(h) + ", O)";
  }
  return out;
}

}  // namespace smashlab
