#include "smashlab/expr.hpp"

namespace smashlab {

namespace {

template <class T>
bool same_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool same_terms(const std::vector<GroupTermPtr>& a, const std::vector<GroupTermPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_ptr(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool GroupTerm::operator==(const GroupTerm& o) const {
  return kind == o.kind && n == o.n && same_ptr(a, o.a) && same_ptr(b, o.b) && gens == o.gens &&
         name == o.name;
}

bool FamilyTerm::operator==(const FamilyTerm& o) const {
  return kind == o.kind && same_terms(subs, o.subs);
}

bool HomTerm::operator==(const HomTerm& o) const {
  return kind == o.kind && same_ptr(source, o.source) && same_ptr(target, o.target) &&
         images == o.images && name == o.name;
}

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && n == o.n && m == o.m && same_ptr(group, o.group) &&
         family == o.family && hom == o.hom && name == o.name && entries == o.entries &&
         same_ptr(lhs, o.lhs) && same_ptr(rhs, o.rhs);
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::S0: return "S0";
    case NodeKind::Pt: return "pt";
    case NodeKind::E: return "E";
    case NodeKind::ER: return "ER";
    case NodeKind::EG: return "EG";
    case NodeKind::EFPlus: return "EF";
    case NodeKind::EFTilde: return "tEF";
    case NodeKind::Atom: return "atom";
    case NodeKind::Triv: return "triv";
    case NodeKind::Res: return "res";
    case NodeKind::Ind: return "ind";
    case NodeKind::Norm: return "norm";
    case NodeKind::Pull: return "pull";
    case NodeKind::Smash: return "^";
    case NodeKind::Wedge: return "v";
    case NodeKind::Ident: return "identifier";
  }
  return "?";
}

ExprPtr make_leaf(NodeKind k, unsigned n, unsigned m, GroupTermPtr group) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->n = n;
  e->m = m;
  e->group = std::move(group);
  return e;
}

ExprPtr make_family_node(NodeKind k, FamilyTerm f, GroupTermPtr group) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->family = std::move(f);
  e->group = std::move(group);
  return e;
}

ExprPtr make_unary(NodeKind k, GroupTermPtr group, ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->group = std::move(group);
  e->lhs = std::move(child);
  return e;
}

ExprPtr make_pull(HomTerm h, ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Pull;
  e->hom = std::move(h);
  e->lhs = std::move(child);
  return e;
}

ExprPtr make_binary(NodeKind k, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_ident(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Ident;
  e->name = std::move(name);
  return e;
}

GroupTermPtr cyclic_term(unsigned n) {
  auto g = std::make_shared<GroupTerm>();
  g->kind = GroupTerm::Kind::Cyclic;
  g->n = n;
  return g;
}

// --- printing --------------------------------------------------------------

namespace {

std::string words(const std::vector<CycleWord>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ",";
    out += ws[i].to_string();
  }
  return out;
}

std::string level_literal(ChromLevel v) {
  if (v.is_bot()) return "bot";
  if (v.is_top()) return "top";
  return std::to_string(v.n());
}

enum Prec { kWedge = 0, kSmash = 1, kPrimary = 2 };

void print(const Expr& e, Prec ctx, std::string& out) {
  switch (e.kind) {
    case NodeKind::Wedge:
    case NodeKind::Smash: {
      Prec self = e.kind == NodeKind::Wedge ? kWedge : kSmash;
      bool paren = ctx > self;
      if (paren) out += '(';
      print(*e.lhs, self, out);
      out += e.kind == NodeKind::Wedge ? " v " : " ^ ";
      print(*e.rhs, static_cast<Prec>(self + 1), out);
      if (paren) out += ')';
      return;
    }
    case NodeKind::S0:
    case NodeKind::Pt:
      out += to_string(e.kind);
      if (e.group) out += "@" + to_string(*e.group);
      return;
    case NodeKind::E:
    case NodeKind::ER:
      out += std::string(to_string(e.kind)) + "(" + std::to_string(e.n) + ")";
      return;
    case NodeKind::EG:
      out += "EG(" + std::to_string(e.n) + "," + std::to_string(e.m) + ")";
      return;
    case NodeKind::EFPlus:
    case NodeKind::EFTilde:
      out += std::string(to_string(e.kind)) + "[" + to_string(e.family) + "]@" +
             to_string(*e.group);
      return;
    case NodeKind::Atom: {
      out += "atom " + e.name + "@" + to_string(*e.group) + "{";
      for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (i) out += ", ";
        const auto& en = e.entries[i];
        out += en.gens.empty() ? "e" : "<" + words(en.gens) + ">";
        out += ": " + level_literal(en.value);
      }
      out += "}";
      return;
    }
    case NodeKind::Triv:
    case NodeKind::Res:
    case NodeKind::Ind:
    case NodeKind::Norm:
      out += std::string(to_string(e.kind)) + "[" + to_string(*e.group) + "](";
      print(*e.lhs, kWedge, out);
      out += ")";
      return;
    case NodeKind::Pull:
      out += "pull[" + to_string(*e.hom) + "](";
      print(*e.lhs, kWedge, out);
      out += ")";
      return;
    case NodeKind::Ident:
      out += e.name;
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, kWedge, out);
  return out;
}

std::string to_string(const GroupTerm& g) {
  switch (g.kind) {
    case GroupTerm::Kind::Cyclic: return "C(" + std::to_string(g.n) + ")";
    case GroupTerm::Kind::Symmetric: return "S(" + std::to_string(g.n) + ")";
    case GroupTerm::Kind::D8: return "D8";
    case GroupTerm::Kind::Sub: return "sub[" + to_string(*g.a) + "]{" + words(g.gens) + "}";
    case GroupTerm::Kind::Named: return g.name;
    case GroupTerm::Kind::Product: {
      std::string right = to_string(*g.b);
      if (g.b->kind == GroupTerm::Kind::Product) right = "(" + right + ")";
      return to_string(*g.a) + " x " + right;
    }
  }
  return "?";
}

std::string to_string(const FamilyTerm& f) {
  switch (f.kind) {
    case FamilyTerm::Kind::Triv: return "triv";
    case FamilyTerm::Kind::Proper: return "proper";
    case FamilyTerm::Kind::All: return "all";
    case FamilyTerm::Kind::FamSub: return "famsub(" + to_string(*f.subs.front()) + ")";
    case FamilyTerm::Kind::List: {
      std::string out = "{";
      for (std::size_t i = 0; i < f.subs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(*f.subs[i]);
      }
      return out + "}";
    }
  }
  return "?";
}

std::string to_string(const HomTerm& h) {
  switch (h.kind) {
    case HomTerm::Kind::Quot:
      return "quot[" + to_string(*h.source) + "," + to_string(*h.target) + "]";
    case HomTerm::Kind::Explicit: {
      std::string out = "hom[" + to_string(*h.source) + "," + to_string(*h.target) + "]{";
      for (std::size_t i = 0; i < h.images.size(); ++i) {
        if (i) out += ",";
        out += h.images[i].first.to_string() + "->" + h.images[i].second.to_string();
      }
      return out + "}";
    }
    case HomTerm::Kind::Named: return h.name;
  }
  return "?";
}

}  // namespace smashlab
