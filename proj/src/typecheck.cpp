#include "smashlab/typecheck.hpp"

#include <algorithm>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

std::string where(const SourcePos& p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.col);
}

std::string at(const Expr& e) {
  return std::string(to_string(e.kind)) + " node at " + where(e.pos);
}

std::vector<Perm> perms_of(const std::vector<CycleWord>& ws, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& w : ws) {
    if (w.max_point() > degree)
      throw Error(ErrorKind::ElementNotInGroup,
                  w.to_string() + " moves points beyond degree " + std::to_string(degree));
    out.push_back(w.to_perm(degree));
  }
  return out;
}

std::string sub_script(std::size_t n) {
  std::string s = std::to_string(n);
  return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (static_cast<std::size_t>(g.element_order(x)) == g.order()) return true;
  return false;
}

}  // namespace

std::string display_name(const FiniteGroup& g) {
  if (is_cyclic(g)) return "C" + sub_script(g.order());
  const auto& n = g.name();
  if (n == "D8") return "D_8";
  if (n.size() > 1 && n[0] == 'S' &&
      std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(c); }))
    return "Σ" + sub_script(std::stoul(n.substr(1)));
  return n;
}

Homomorphism identify(const FiniteGroup& from, const FiniteGroup& to) {
  if (from == to) return Homomorphism::inclusion(from, to);
  if (from.order() != to.order())
    throw Error(ErrorKind::AmbientMismatch, from.name() + " and " + to.name() + " differ");
  try {
    return canonical_embedding(from, to);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotASubgroup)
      throw Error(ErrorKind::AmbientMismatch,
                  from.name() + " and " + to.name() + " are not isomorphic");
    throw;
  }
}

void Session::load_definitions(std::string_view text) {
  for (const auto& d : parse_definitions(text)) define(d);
}

void Session::define(const Definition& d) {
  switch (d.kind) {
    case Definition::Kind::Let: lets_[d.name] = d.expr; break;
    case Definition::Kind::Group: groups_[d.name] = d.group; break;
    case Definition::Kind::Hom: homs_[d.name] = *d.hom; break;
  }
}

FiniteGroup Session::resolve_group(const GroupTerm& g) const {
  std::string key = to_string(g);
  if (g.kind == GroupTerm::Kind::Named) {
    auto it = groups_.find(g.name);
    if (it == groups_.end())
      throw Error(ErrorKind::UnboundName, "unknown group " + g.name + " at " + where(g.pos));
    // named groups keep their name for display
    auto inner = resolve_group(*it->second);
    if (inner.name() == g.name) return inner;
    auto cached = group_cache_.find("name:" + key);
    if (cached != group_cache_.end()) return cached->second;
    auto renamed = FiniteGroup::generated(inner.degree(), inner.generators(), g.name,
                                          std::max(order_cap_, inner.order()));
    group_cache_.emplace("name:" + key, renamed);
    return renamed;
  }
  auto cached = group_cache_.find(key);
  if (cached != group_cache_.end()) return cached->second;
  FiniteGroup out = FiniteGroup::trivial();
  switch (g.kind) {
    case GroupTerm::Kind::Cyclic:
      if (g.n == 0) throw Error(ErrorKind::InvalidPermutation, "C(0) at " + where(g.pos));
      out = FiniteGroup::cyclic(g.n, order_cap_);
      break;
    case GroupTerm::Kind::Symmetric:
      if (g.n == 0) throw Error(ErrorKind::InvalidPermutation, "S(0) at " + where(g.pos));
      out = FiniteGroup::symmetric(g.n, order_cap_);
      break;
    case GroupTerm::Kind::D8: out = FiniteGroup::dihedral8(order_cap_); break;
    case GroupTerm::Kind::Sub: {
      auto parent = resolve_group(*g.a);
      auto sub = subgroup_generated(parent, perms_of(g.gens, parent.degree()));
      out = sub.as_group(key);
      break;
    }
    case GroupTerm::Kind::Product:
      out = FiniteGroup::product(resolve_group(*g.a), resolve_group(*g.b), order_cap_);
      break;
    case GroupTerm::Kind::Named: break;
  }
  group_cache_.emplace(key, out);
  return out;
}

int Session::resolve_subgroup(const GroupTerm& g, const FiniteGroup& ambient) const {
  auto a = resolve_group(g);
  if (a.contained_in(ambient)) {
    ElementSet elems;
    for (const auto& p : a.elements()) elems.push_back(*ambient.index_of(p));
    std::sort(elems.begin(), elems.end());
    return *ambient.subgroup_index(elems);
  }
  try {
    return canonical_embedding(a, ambient).image_index(a.whole_index());
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " (at " + where(g.pos) + ")");
  }
}

Family Session::resolve_family(const FamilyTerm& f, const FiniteGroup& ambient) const {
  switch (f.kind) {
    case FamilyTerm::Kind::Triv: return Family::trivial(ambient);
    case FamilyTerm::Kind::Proper: return Family::proper(ambient);
    case FamilyTerm::Kind::All: return Family::all(ambient);
    case FamilyTerm::Kind::FamSub:
    case FamilyTerm::Kind::List: {
      std::vector<int> subs;
      for (const auto& s : f.subs) subs.push_back(resolve_subgroup(*s, ambient));
      return Family::generated_by(ambient, subs);
    }
  }
  return Family::empty(ambient);
}

Homomorphism Session::resolve_hom(const HomTerm& h) const {
  if (h.kind == HomTerm::Kind::Named) {
    auto it = homs_.find(h.name);
    if (it == homs_.end())
      throw Error(ErrorKind::UnboundName, "unknown homomorphism " + h.name + " at " + where(h.pos));
    return resolve_hom(it->second);
  }
  auto src = resolve_group(*h.source);
  auto tgt = resolve_group(*h.target);
  std::vector<std::pair<Perm, Perm>> images;
  if (h.kind == HomTerm::Kind::Quot) {
    if (src.generators().size() > 1 || tgt.generators().size() > 1)
      throw Error(ErrorKind::NotAHomomorphism,
                  "quot needs singly generated groups at " + where(h.pos));
    if (!src.generators().empty())
      images.emplace_back(src.generators()[0], tgt.generators().empty()
                                                   ? Perm::identity(tgt.degree())
                                                   : tgt.generators()[0]);
  } else {
    for (const auto& [a, b] : h.images)
      images.emplace_back(perms_of({a}, src.degree())[0], perms_of({b}, tgt.degree())[0]);
  }
  return Homomorphism::make(src, tgt, images, to_string(h));
}

TypedPtr Session::typecheck(const ExprPtr& e) const {
  std::vector<std::string> stack;
  return check(e, stack);
}

TypedPtr Session::check(const ExprPtr& e, std::vector<std::string>& stack) const {
  if (e->kind == NodeKind::Ident) {
    auto it = lets_.find(e->name);
    if (it == lets_.end())
      throw Error(ErrorKind::UnboundName, "unknown name " + e->name + " at " + where(e->pos));
    if (std::find(stack.begin(), stack.end(), e->name) != stack.end())
      throw Error(ErrorKind::UnboundName, "recursive definition of " + e->name);
    stack.push_back(e->name);
    auto t = check(it->second, stack);
    stack.pop_back();
    return t;
  }

  auto t = std::make_shared<Typed>();
  t->source = e;
  t->kind = e->kind;
  t->n = e->n;
  t->m = e->m;
  switch (e->kind) {
    case NodeKind::S0:
    case NodeKind::Pt:
      if (e->group) t->ambient = resolve_group(*e->group);
      break;
    case NodeKind::E: break;
    case NodeKind::ER:
      if (prime_.value() != 2)
        throw Error(ErrorKind::PrimeMismatch, "ER(n) is 2-primary; " + at(*e));
      t->ambient = FiniteGroup::cyclic(2, order_cap_);
      break;
    case NodeKind::EG: {
      if (prime_.value() != 2)
        throw Error(ErrorKind::PrimeMismatch, "EG(n,m) is 2-primary; " + at(*e));
      if (e->n == 0 || e->n > 20)
        throw Error(ErrorKind::InvalidSequence, "EG(n,m) needs 1 <= n; " + at(*e));
      t->ambient = FiniteGroup::cyclic(1u << e->n, std::max<std::size_t>(order_cap_, 1u << e->n));
      break;
    }
    case NodeKind::EFPlus:
    case NodeKind::EFTilde:
      t->ambient = resolve_group(*e->group);
      t->family = resolve_family(e->family, t->ambient);
      break;
    case NodeKind::Atom: {
      t->ambient = resolve_group(*e->group);
      t->atom_values.assign(t->ambient.class_count(), ChromLevel::bot());
      std::vector<bool> set(t->ambient.class_count(), false);
      for (const auto& en : e->entries) {
        auto s = subgroup_generated(t->ambient, perms_of(en.gens, t->ambient.degree()));
        int c = t->ambient.class_of(s.index());
        if (set[c] && t->atom_values[c] != en.value)
          throw Error(ErrorKind::InvariantViolation,
                      "conflicting values for conjugate subgroups in " + at(*e));
        set[c] = true;
        t->atom_values[c] = en.value;
      }
      break;
    }
    case NodeKind::Triv: {
      t->child = check(e->lhs, stack);
      if (t->child->ambient.order() != 1)
        throw Error(ErrorKind::AmbientMismatch,
                    "triv needs a nonequivariant operand; " + at(*e));
      t->ambient = resolve_group(*e->group);
      break;
    }
    case NodeKind::Res: {
      t->child = check(e->lhs, stack);
      const auto& parent = t->child->ambient;
      auto a = resolve_group(*e->group);
      if (a.contained_in(parent)) {
        t->ambient = a;
        t->map = Homomorphism::inclusion(a, parent);
      } else {
        try {
          t->map = canonical_embedding(a, parent);
        } catch (const Error& err) {
          throw Error(err.kind(), std::string(err.what()) + "; " + at(*e));
        }
        t->ambient = a;
      }
      break;
    }
    case NodeKind::Ind:
    case NodeKind::Norm: {
      t->child = check(e->lhs, stack);
      t->ambient = resolve_group(*e->group);
      try {
        t->map = canonical_embedding(t->child->ambient, t->ambient);
      } catch (const Error& err) {
        throw Error(err.kind(), std::string(err.what()) + "; " + at(*e));
      }
      break;
    }
    case NodeKind::Pull: {
      t->child = check(e->lhs, stack);
      auto f = resolve_hom(*e->hom);
      const auto& inner = t->child->ambient;
      if (!(f.target() == inner)) {
        if (f.target().order() != inner.order())
          throw Error(ErrorKind::HomTargetMismatch,
                      "homomorphism target " + f.target().name() + " is not the ambient " +
                          inner.name() + " of the operand; " + at(*e));
        try {
          f = identify(f.target(), inner).compose_after(f);
        } catch (const Error& err) {
          throw Error(ErrorKind::HomTargetMismatch, std::string(err.what()) + "; " + at(*e));
        }
      }
      t->ambient = f.source();
      t->map = f;
      break;
    }
    case NodeKind::Smash:
    case NodeKind::Wedge: {
      t->child = check(e->lhs, stack);
      t->rhs = check(e->rhs, stack);
      if (!(t->child->ambient == t->rhs->ambient))
        throw Error(ErrorKind::AmbientMismatch,
                    "operands live over " + t->child->ambient.name() + " and " +
                        t->rhs->ambient.name() + "; " + at(*e));
      t->ambient = t->child->ambient;
      break;
    }
    case NodeKind::Ident: break;
  }
  return t;
}

}  // namespace smashlab
