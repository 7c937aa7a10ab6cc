#include "smashlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "smashlab/error.hpp"
#include "smashlab/ideals.hpp"
#include "smashlab/ninfty.hpp"
#include "smashlab/smashing.hpp"
#include "smashlab/support.hpp"

namespace smashlab {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  unsigned prime = 2;
  std::size_t order_cap = kDefaultOrderCap;
  bool json = false;
  std::string defs;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  Options opt;
  std::optional<Session> session;

  Session& ses() {
    if (!session) {
      session.emplace(Prime(opt.prime), opt.order_cap);
      if (!opt.defs.empty()) {
        std::ifstream f(opt.defs);
        if (!f) throw Error(ErrorKind::Usage, "--defs: cannot read " + opt.defs);
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        session->load_definitions(text);
      }
    }
    return *session;
  }

  std::string text(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }

  TypedPtr typed(const std::string& arg) { return ses().parse_and_check(text(arg)); }
};

Json level_json(ChromLevel a) {
  if (a.is_bot()) return "bot";
  if (a.is_top()) return "top";
  return Json{{"level", a.n()}};
}

// Left-aligned columns separated by two spaces.
void table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    // count code points so Φ, Σ and friends line up
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], width(r[i]));
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(w[i] - width(r[i]) + 2, ' ');
    }
    out << line << "\n";
  }
}

Json support_json(const ChromSupport& s) {
  Json classes = Json::array();
  const auto& g = s.ambient();
  for (int c = 0; c < static_cast<int>(g.class_count()); ++c)
    classes.push_back({{"subgroup", g.subgroup_label(g.class_rep(c))}, {"value", level_json(s.at_class(c))}});
  return Json{{"classes", classes}};
}

int cmd_support(Io& io, const std::string& expr) {
  ChromSupport s = support(io.typed(expr));
  if (io.opt.json) {
    io.out << support_json(s).dump() << "\n";
    return 0;
  }
  const auto& g = s.ambient();
  std::vector<std::vector<std::string>> rows{{"subgroup", "order", "value"}};
  for (int c = 0; c < static_cast<int>(g.class_count()); ++c) {
    int k = g.class_rep(c);
    rows.push_back({g.subgroup_label(k), std::to_string(g.subgroup_elements(k).size()),
                    s.at_class(c).to_string()});
  }
  table(io.out, rows);
  return 0;
}

enum class Relation { Equal, Leq, Acyclic };

int cmd_relation(Io& io, Relation rel, const std::string& a_text, const std::string& b_text) {
  TypedPtr a = io.typed(a_text);
  TypedPtr b = io.typed(b_text);
  ChromSupport sa = support(a);
  ChromSupport sb = transport(support(b), sa.ambient());
  bool result = rel == Relation::Equal ? bousfield_equal(sa, sb)
                : rel == Relation::Leq ? class_leq(sa, sb)
                                       : is_acyclic(sa, sb);
  const auto& g = sa.ambient();
  Json rows = Json::array();
  std::vector<std::vector<std::string>> text{{"subgroup", "left", "right"}};
  for (int c = 0; c < static_cast<int>(g.class_count()); ++c) {
    ChromLevel x = sa.at_class(c), y = sb.at_class(c);
    bool bad = rel == Relation::Equal ? x != y
               : rel == Relation::Leq ? x > y
                                      : !meet(x, y).is_bot();
    if (!bad) continue;
    std::string label = g.subgroup_label(g.class_rep(c));
    rows.push_back({{"subgroup", label}, {"left", level_json(x)}, {"right", level_json(y)}});
    text.push_back({label, x.to_string(), y.to_string()});
  }
  if (io.opt.json) {
    io.out << Json{{"result", result}, {"witnesses", rows}}.dump() << "\n";
  } else {
    io.out << (result ? "true" : "false") << "\n";
    if (!result) table(io.out, text);
  }
  return result ? 0 : 1;
}

int cmd_smashing(Io& io, const std::string& expr) {
  Verdict v = derive_smashing(io.typed(expr), io.ses().prime());
  if (io.opt.json) {
    Json j{{"status", to_string(v.status)}, {"citations", v.citations}, {"witness", nullptr}, {"trace", v.trace}};
    if (v.witness) j["witness"] = Json{{"subgroup", v.witness->subgroup}, {"statement", v.witness->statement}};
    io.out << j.dump() << "\n";
  } else {
    std::string cites;
    for (const auto& c : v.citations) cites += (cites.empty() ? "" : ", ") + c;
    std::vector<std::vector<std::string>> rows{{"status", to_string(v.status)}, {"citations", cites}};
    if (v.witness) rows.push_back({"witness", v.witness->subgroup + ": " + v.witness->statement});
    for (std::size_t i = 0; i < v.trace.size(); ++i) rows.push_back({i ? "" : "trace", v.trace[i]});
    table(io.out, rows);
  }
  return v.status == Status::Smashing ? 0 : 1;
}

int cmd_localize(Io& io, const std::string& expr) {
  Formula f = emit_localization_formula(io.typed(expr), io.ses().prime());
  if (io.opt.json)
    io.out << Json{{"formula", f.to_string()}, {"family", f.family}, {"unit", f.unit}, {"citation", f.citation}}.dump()
           << "\n";
  else
    io.out << f.to_string() << "  [" << f.citation << "]\n";
  return 0;
}

int cmd_locals(Io& io, const std::string& expr, bool fixed_points) {
  Statement s = characterize_locals(io.typed(expr), io.ses().prime(), fixed_points);
  if (io.opt.json) {
    io.out << Json{{"citation", s.citation}, {"headline", s.headline}, {"conditions", s.conditions}}.dump() << "\n";
  } else {
    io.out << "[" << s.citation << "] " << s.headline << "\n";
    for (const auto& c : s.conditions) io.out << "  " << c << "\n";
  }
  return 0;
}

int cmd_fixclass(Io& io, const std::string& expr, bool ring) {
  FixedPointsClass f = fixed_points_class(io.typed(expr), ring);
  if (io.opt.json)
    io.out << Json{{"level", level_json(f.level)}, {"ring_hypothesis", f.ring_hypothesis}, {"citation", f.citation}}
                  .dump()
           << "\n";
  else
    io.out << f.level.to_string() << "  [" << f.citation << (ring ? ", ring hypothesis" : "") << "]\n";
  return 0;
}

Json construction_json(const IdealSequence& s, const Construction& c) {
  return Json{{"sequence", s.m},
              {"expression", to_string(*c.expr)},
              {"cases", c.cases},
              {"notes", c.notes},
              {"provenance", c.provenance}};
}

int cmd_ideals_enumerate(Io& io, unsigned n, unsigned max_level) {
  if (n == 0) throw Error(ErrorKind::Usage, "--n must be at least 1");
  auto all = enumerate_sequences(n, max_level, Prime(io.opt.prime));
  if (io.opt.json) {
    Json list = Json::array();
    for (const auto& s : all) {
      Construction c = construct(s);
      list.push_back({{"sequence", s.m}, {"cases", c.cases}});
    }
    io.out << list.dump() << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"sequence", "top case"}};
    for (const auto& s : all) rows.push_back({s.to_string(), construct(s).cases.front()});
    table(io.out, rows);
    io.out << all.size() << " sequences\n";
  }
  return 0;
}

int cmd_ideals_construct(Io& io, const std::string& entries) {
  auto s = validate_sequence(parse_entries(io.text(entries)), Prime(io.opt.prime));
  Construction c = construct(s);
  if (io.opt.json) {
    io.out << construction_json(s, c).dump() << "\n";
  } else {
    io.out << to_string(*c.expr) << "\n";
    for (const auto& line : c.cases) io.out << "  " << line << "\n";
    for (const auto& line : c.notes) io.out << "  note: " << line << "\n";
    io.out << "  " << c.provenance << "\n";
  }
  return 0;
}

int cmd_ideals_verify(Io& io, const std::string& entries) {
  auto s = validate_sequence(parse_entries(io.text(entries)), Prime(io.opt.prime));
  VerifyResult r = verify(s);
  if (io.opt.json) {
    Json values = Json::array();
    for (auto a : r.values) values.push_back(level_json(a));
    io.out << Json{{"sequence", s.m},
                   {"result", r.ok},
                   {"values", values},
                   {"failing_index", r.failing_index ? Json(*r.failing_index) : Json(nullptr)}}
                  .dump()
           << "\n";
  } else {
    io.out << (r.ok ? "true" : "false") << "\n";
    if (!r.ok) io.out << "  first mismatch at C_" << s.p << "^" << *r.failing_index << "\n";
  }
  return r.ok ? 0 : 1;
}

int subgroup_from_gens(const FiniteGroup& g, const std::vector<std::string>& gens) {
  std::vector<Perm> ps;
  for (const auto& w : gens)
    for (const auto& c : parse_cycle_list(w)) {
      if (c.max_point() > g.degree())
        throw Error(ErrorKind::ElementNotInGroup, c.to_string() + " moves a point outside " + g.name());
      ps.push_back(c.to_perm(g.degree()));
    }
  return subgroup_generated(g, ps).index();
}

int subgroup_arg(const FiniteGroup& g, const std::string& text) {
  if (text == "e") return g.trivial_index();
  return subgroup_from_gens(g, {text});
}

Json pair_json(const FiniteGroup& g, std::pair<int, int> p) {
  return Json{{"H", g.subgroup_generators(p.first)}, {"K", g.subgroup_generators(p.second)}};
}

Json pairs_json(const FiniteGroup& g, const std::vector<std::pair<int, int>>& ps) {
  Json out = Json::array();
  for (auto p : ps) out.push_back(pair_json(g, p));
  return out;
}

std::string pairs_text(const FiniteGroup& g, const std::vector<std::pair<int, int>>& ps) {
  if (ps.empty()) return "(none)";
  std::string s;
  for (auto [h, k] : ps) s += (s.empty() ? "" : ", ") + g.subgroup_label(h) + "/" + g.subgroup_label(k);
  return s;
}

// "trivial", "complete" or a JSON file of {"H": gens, "K": gens} pairs.
IndexingSystem load_system(const FiniteGroup& g, int top, const std::string& source, bool close) {
  if (source.empty() || source == "trivial") return IndexingSystem::trivial(g, top);
  if (source == "complete") return IndexingSystem::complete(g, top);
  std::ifstream f(source);
  if (!f) throw Error(ErrorKind::Usage, "--admissible: cannot read " + source);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Usage, "--admissible: " + source + " is not valid JSON: " + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::Usage, "--admissible: expected a list of {\"H\", \"K\"} pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("H") || !item.contains("K"))
      throw Error(ErrorKind::Usage, "--admissible: each entry needs \"H\" and \"K\" generator lists");
    pairs.push_back({subgroup_from_gens(g, item["H"].get<std::vector<std::string>>()),
                     subgroup_from_gens(g, item["K"].get<std::vector<std::string>>())});
  }
  if (close) return IndexingSystem::closure(g, top, pairs);
  auto sys = IndexingSystem::from_pairs(g, top, pairs);
  sys.validate();
  return sys;
}

struct NinftyArgs {
  std::string group, sub, expr, admissible, premise = "none";
  bool close = false;
};

int cmd_coinduce(Io& io, const NinftyArgs& a) {
  if (a.group.empty()) throw Error(ErrorKind::Usage, "--group is required");
  FiniteGroup g = io.ses().resolve_group(*parse_group(a.group));
  int h = a.sub.empty() ? g.trivial_index() : subgroup_arg(g, a.sub);
  IndexingSystem in = load_system(g, h, a.admissible, a.close);
  IndexingSystem outsys = coinduce(in, h);
  std::vector<std::pair<int, int>> upgraded;
  for (auto p : outsys.nontrivial_reps())
    if (!in.admits(p.first, p.second)) upgraded.push_back(p);
  bool complete = outsys == IndexingSystem::complete(g, g.whole_index());
  if (io.opt.json) {
    io.out << Json{{"group", g.name()},
                   {"sub", g.subgroup_label(h)},
                   {"admissible", pairs_json(g, outsys.nontrivial_reps())},
                   {"new", pairs_json(g, upgraded)},
                   {"complete", complete},
                   {"citations", {"Prop 5.6", "Cor 5.7"}}}
                  .dump()
           << "\n";
  } else {
    table(io.out, {{"admissible", pairs_text(g, outsys.nontrivial_reps())},
                   {"new", pairs_text(g, upgraded)},
                   {"complete", complete ? "yes" : "no"}});
  }
  return 0;
}

int cmd_closure(Io& io, const NinftyArgs& a) {
  if (a.expr.empty()) throw Error(ErrorKind::Usage, "--expr is required");
  std::string text = io.text(a.expr);
  FiniteGroup g = io.ses().parse_and_check(text)->ambient;
  IndexingSystem sys = load_system(g, g.whole_index(), a.admissible, a.close);
  Json j;
  int code = 0;
  try {
    ClosureVerdict v = norm_closure_check(io.ses(), parse_expr(text), sys);
    j = Json{{"status", v.closed ? "Closed" : "NotClosed"}, {"citations", {v.citation}}, {"trace", v.trace},
             {"counterexample", nullptr}};
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      j["counterexample"] = Json{{"H", c.h},           {"K", c.k},
                                 {"L", c.l},           {"Z", c.z},
                                 {"norm", c.norm},     {"Z_acyclic", c.z_acyclic},
                                 {"norm_acyclic", c.norm_acyclic}};
    }
    code = v.closed ? 0 : 1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedSupport) throw;
    j = Json{{"status", "Unknown"}, {"citations", {"Thm 5.2"}}, {"trace", {e.what()}}, {"counterexample", nullptr}};
    code = 1;
  }
  if (io.opt.json) {
    io.out << j.dump() << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"status", j["status"].get<std::string>()},
                                               {"citations", "Thm 5.2"}};
    for (const auto& t : j["trace"]) rows.push_back({rows.size() == 2 ? "trace" : "", t.get<std::string>()});
    if (!j["counterexample"].is_null()) {
      rows.push_back({"Z", j["counterexample"]["Z"].get<std::string>()});
      rows.push_back({"norm", j["counterexample"]["norm"].get<std::string>()});
      rows.push_back({"checked", "Z acyclic, norm of Z not acyclic"});
    }
    table(io.out, rows);
  }
  return code;
}

int cmd_propagate(Io& io, const NinftyArgs& a) {
  if (a.expr.empty()) throw Error(ErrorKind::Usage, "--expr is required");
  std::string text = io.text(a.expr);
  FiniteGroup g = io.ses().parse_and_check(text)->ambient;
  IndexingSystem sys = load_system(g, g.whole_index(), a.admissible, a.close);
  Premise premise = a.premise == "certify" ? Premise::Certified
                    : a.premise == "assert" ? Premise::Asserted
                                            : Premise::None;
  Propagation p = preservation_propagation(io.ses(), parse_expr(text), sys, premise);
  if (io.opt.json) {
    io.out << Json{{"statement", p.statement},
                   {"citations", p.citations},
                   {"admissible", pairs_json(g, p.upgraded.nontrivial_reps())},
                   {"new", pairs_json(g, p.new_norms)},
                   {"complete", p.complete}}
                  .dump()
           << "\n";
  } else {
    std::string cites;
    for (const auto& c : p.citations) cites += (cites.empty() ? "" : ", ") + c;
    table(io.out, {{"statement", p.statement},
                   {"citations", cites},
                   {"admissible", pairs_text(g, p.upgraded.nontrivial_reps())},
                   {"new", pairs_text(g, p.new_norms)}});
  }
  return 0;
}

std::vector<Perm> perms_of(const FiniteGroup& g, const std::vector<std::string>& cycles) {
  std::vector<Perm> out;
  for (const auto& c : cycles) out.push_back(parse_cycle_list(c).front().to_perm(g.degree()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> elements_of(const FiniteGroup& g, int s) {
  std::vector<Perm> out;
  for (int x : g.subgroup_elements(s)) out.push_back(g.element(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string set_text(const std::vector<Perm>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_cycles();
  return s + "}";
}

// The D8 ⊂ S4 example end to end: each step is recomputed and compared with
// the expected value.
int cmd_selftest(Io& io) {
  Session ses(Prime(2), io.opt.order_cap);
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  auto sub = [&](const std::string& gens) { return subgroup_from_gens(s4, {gens}); };
  int d8 = subgroup_generated(s4, perms_of(s4, {"(1,2,3,4)", "(1,3)"})).index();
  int c4 = sub("(1,2,3,4)");
  int v4 = subgroup_generated(s4, perms_of(s4, {"(1,2)(3,4)", "(1,3)(2,4)"})).index();
  int c2 = sub("(1,3)(2,4)");
  Perm t12 = parse_cycle_list("(1,2)").front().to_perm(4);
  int i12 = *s4.index_of(t12);

  Json steps = Json::array();
  bool all_ok = true;
  auto step = [&](const std::string& claim, const std::string& value, bool ok, const std::string& cite) {
    steps.push_back({{"claim", claim}, {"value", value}, {"citation", cite}, {"ok", ok}});
    all_ok = all_ok && ok;
  };

  step("D8 = <(1,2,3,4), (1,3)>", set_text(elements_of(s4, d8)),
       elements_of(s4, d8) == perms_of(s4, {"()", "(1,3)(2,4)", "(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3,4)",
                                            "(1,4,3,2)", "(1,3)", "(2,4)"}),
       "Prop 3.24");
  auto reps = double_coset_indices(s4, d8, d8);
  bool second = reps.size() == 2;
  if (second) {
    std::vector<bool> in(s4.order(), false);
    for (int a : s4.subgroup_elements(d8))
      for (int b : s4.subgroup_elements(d8)) in[s4.mul(s4.mul(a, reps[1]), b)] = true;
    second = in[i12];
  }
  step("D8\\S4/D8 = {D8, D8(1,2)D8}", std::to_string(reps.size()) + " double cosets", second, "Prop 3.24");
  int conj = s4.conjugate_index(d8, i12);
  step("(1,2)D8(1,2)", set_text(elements_of(s4, conj)),
       elements_of(s4, conj) == perms_of(s4, {"()", "(1,3)(2,4)", "(1,2)(3,4)", "(1,4)(2,3)", "(1,3,4,2)",
                                              "(1,2,4,3)", "(1,4)", "(2,3)"}),
       "Prop 3.24");
  int meet = s4.intersect_index(d8, conj);
  step("D8 ∩ (1,2)D8(1,2) = V4", set_text(elements_of(s4, meet)), meet == v4, "Prop 3.24");
  FiniteGroup d8g = s4.subgroup_as_group(d8, "D8");
  auto in_d8 = [&](int s) {
    ElementSet e;
    for (int x : s4.subgroup_elements(s)) e.push_back(*d8g.index_of(s4.element(x)));
    std::sort(e.begin(), e.end());
    return *d8g.subgroup_index(e);
  };
  auto inner = double_coset_indices(d8g, in_d8(c4), in_d8(v4));
  step("<(1,2,3,4)>\\D8/V4 is one double coset", std::to_string(inner.size()) + " double coset",
       inner.size() == 1, "Prop 3.24");
  step("<(1,2,3,4)> ∩ V4 = <(1,3)(2,4)>", set_text(elements_of(s4, s4.intersect_index(c4, v4))),
       s4.intersect_index(c4, v4) == c2, "Prop 3.24");

  const std::string tilde = "tEF[famsub(sub[D8]{(1,2,3,4)})]@D8";
  const std::string induced = "ind[S(4)](" + tilde + ")";
  auto eq = [&](const std::string& a, const std::string& b) {
    return bousfield_equal(ses.parse_and_check(a), ses.parse_and_check(b));
  };
  Verdict base = derive_smashing(ses.parse_and_check(tilde), ses.prime());
  step("ẼF_<(1,2,3,4)> is smashing over D8", to_string(base.status), base.status == Status::Smashing,
       "Cor 2.11");
  const std::string split = tilde + " v ind[D8](tEF[famsub(sub[S(4)]{(1,4)(2,3)})]@sub[S(4)]{(1,2)(3,4), (1,3)(2,4)})";
  step("res to D8 = ẼF_<(1,2,3,4)> ∨ D8+ ∧_V4 ẼF_<(1,4)(2,3)>", "supports agree",
       eq("res[D8](" + induced + ")", split), "Prop 3.24");
  step("res to V4 of the (1,2)-conjugate is ẼF_<(1,4)(2,3)>", "supports agree",
       eq("res[sub[S(4)]{(1,2)(3,4), (1,3)(2,4)}](tEF[famsub(sub[S(4)]{(1,3,4,2)})]@sub[S(4)]{(1,3,4,2), (1,4)})",
          "tEF[famsub(sub[S(4)]{(1,4)(2,3)})]@sub[S(4)]{(1,2)(3,4), (1,3)(2,4)}"),
       "Prop 3.24");
  step("res to <(1,2,3,4)> = C4+ ∧_C2 ẼC2", "supports agree",
       eq("res[sub[S(4)]{(1,2,3,4)}](" + induced + ")", "ind[C(4)](tEF[triv]@C(2))"), "Prop 3.24");
  Verdict v = derive_smashing(ses.parse_and_check("res[D8](" + induced + ")"), ses.prime());
  bool witness_ok = v.witness && v.witness->statement == "(S^0)^{tC_2} ≄ *";
  step("res to D8 of the induced class is not smashing",
       std::string(to_string(v.status)) + (v.witness ? ", witness " + v.witness->statement : ""),
       v.status == Status::NotSmashing && witness_ok, "Prop 3.24");

  if (io.opt.json) {
    io.out << Json{{"ok", all_ok}, {"steps", steps}, {"citations", v.citations}}.dump() << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"ok", "step", "value", "citation"}};
    for (const auto& s : steps)
      rows.push_back({s["ok"].get<bool>() ? "PASS" : "FAIL", s["claim"].get<std::string>(),
                      s["value"].get<std::string>(), s["citation"].get<std::string>()});
    table(io.out, rows);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, {}, std::nullopt};
  CLI::App app{"Symbolic engine for equivariant Bousfield classes", "smashlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--prime", io.opt.prime, "Prime p (default 2)");
  app.add_option("--order-cap", io.opt.order_cap, "Largest group order to enumerate (default 48)");
  app.add_flag("--json", io.opt.json, "Machine-readable output");
  app.add_option("--defs", io.opt.defs, "Definitions file with let/group/hom bindings");

  std::function<int()> action;
  std::string a, b;
  bool flag = false;

  auto unary = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("expr", a, "Expression, or - for stdin")->required();
    return c;
  };
  unary("support", "Geometric fixed point levels per subgroup class")->callback([&] {
    action = [&] { return cmd_support(io, a); };
  });
  unary("smashing", "Decide whether the class is smashing")->callback([&] {
    action = [&] { return cmd_smashing(io, a); };
  });
  unary("localize", "Closed formula for the localization")->callback([&] {
    action = [&] { return cmd_localize(io, a); };
  });
  auto* locals = unary("locals", "Characterize the local objects");
  locals->add_flag("--fixed-points", flag, "Describe E^G-locals instead");
  locals->callback([&] { action = [&] { return cmd_locals(io, a, flag); }; });
  auto* fix = unary("fixclass", "Nonequivariant class of the categorical fixed points");
  fix->add_flag("--ring", flag, "Record the ring hypothesis");
  fix->callback([&] { action = [&] { return cmd_fixclass(io, a, flag); }; });

  struct BinaryCommand {
    const char* name;
    const char* help;
    Relation rel;
  };
  for (const auto& cmd : {BinaryCommand{"equal", "Bousfield equality", Relation::Equal},
                           BinaryCommand{"leq", "Bousfield class inclusion <a> <= <b>", Relation::Leq},
                           BinaryCommand{"acyclic", "Whether <z> is <e>-acyclic", Relation::Acyclic}}) {
    auto* c = app.add_subcommand(cmd.name, cmd.help);
    c->add_option("a", a, "First expression")->required();
    c->add_option("b", b, "Second expression")->required();
    Relation rel = cmd.rel;
    c->callback([&, rel] { action = [&, rel] { return cmd_relation(io, rel, a, b); }; });
  }

  auto* ideals = app.add_subcommand("ideals", "Thick ideal sequences for cyclic p-groups");
  ideals->require_subcommand(1);
  unsigned n = 1, max_level = 2;
  auto* en = ideals->add_subcommand("enumerate", "List valid sequences");
  en->add_option("--n", n, "Length minus one")->required();
  en->add_option("--max", max_level, "Largest entry")->required();
  en->add_option("--p", io.opt.prime, "Prime (same as --prime)");
  en->callback([&] { action = [&] { return cmd_ideals_enumerate(io, n, max_level); }; });
  auto* co = ideals->add_subcommand("construct", "Build the spectrum for a sequence");
  co->add_option("entries", a, "Comma separated entries, e.g. 1,0")->required();
  co->add_option("--p", io.opt.prime, "Prime (same as --prime)");
  co->callback([&] { action = [&] { return cmd_ideals_construct(io, a); }; });
  auto* ve = ideals->add_subcommand("verify", "Check the construction's support against the sequence");
  ve->add_option("entries", a, "Comma separated entries, e.g. 1,0")->required();
  ve->add_option("--p", io.opt.prime, "Prime (same as --prime)");
  ve->callback([&] { action = [&] { return cmd_ideals_verify(io, a); }; });

  auto* ninfty = app.add_subcommand("ninfty", "Indexing systems and norm closure");
  ninfty->require_subcommand(1);
  NinftyArgs na;
  auto admissible = [&](CLI::App* c) {
    c->add_option("--admissible", na.admissible, "trivial, complete, or a JSON file of {H, K} pairs");
    c->add_flag("--close", na.close, "Close the given pairs instead of rejecting an unclosed set");
  };
  auto* ci = ninfty->add_subcommand("coinduce", "Admissible sets after cofree induction from a subgroup");
  ci->add_option("--group", na.group, "Ambient group")->required();
  ci->add_option("--sub", na.sub, "Subgroup generators, e.g. \"(1,3)(2,4)\", or e");
  admissible(ci);
  ci->callback([&] { action = [&] { return cmd_coinduce(io, na); }; });
  auto* cl = ninfty->add_subcommand("closure", "Are the acyclics closed under the admissible norms");
  cl->add_option("--expr", na.expr, "Expression")->required();
  admissible(cl);
  cl->callback([&] { action = [&] { return cmd_closure(io, na); }; });
  auto* pr = ninfty->add_subcommand("propagate", "Norms gained by localizing at an induced class");
  pr->add_option("--expr", na.expr, "Induced expression")->required();
  pr->add_option("--premise", na.premise, "none, certify or assert")
      ->check(CLI::IsMember({"none", "certify", "assert"}));
  admissible(pr);
  pr->callback([&] { action = [&] { return cmd_propagate(io, na); }; });

  app.add_subcommand("selftest", "Recompute the D8 in S4 example step by step")->callback([&] {
    action = [&] { return cmd_selftest(io); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    if (io.opt.json)
      out << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace smashlab
