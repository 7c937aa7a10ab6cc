#include "smashlab/support.hpp"

#include "smashlab/error.hpp"

namespace smashlab {

ChromSupport::ChromSupport(FiniteGroup ambient, std::vector<ChromLevel> per_class)
    : ambient_(std::move(ambient)), values_(std::move(per_class)) {
  if (values_.size() != ambient_.class_count())
    throw Error(ErrorKind::InvariantViolation, "support must have one value per class");
}

const ChromSupport& SupportEvaluator::eval(const TypedPtr& t) {
  auto it = memo_.find(t.get());
  if (it != memo_.end()) return it->second;
  if (t->child) eval(t->child);
  if (t->rhs) eval(t->rhs);
  std::vector<ChromLevel> values;
  for (int c = 0; c < static_cast<int>(t->ambient.class_count()); ++c)
    values.push_back(value_at(*t, t->ambient.class_rep(c)));
  return memo_.emplace(t.get(), ChromSupport(t->ambient, std::move(values))).first->second;
}

ChromLevel SupportEvaluator::value_at(const Typed& t, int k) {
  const auto& g = t.ambient;
  auto child = [&](int s) { return memo_.at(t.child.get()).at(s); };
  switch (t.kind) {
    case NodeKind::S0: return ChromLevel::top();
    case NodeKind::Pt: return ChromLevel::bot();
    case NodeKind::E: return ChromLevel::level(t.n);
    case NodeKind::ER: return k == g.trivial_index() ? ChromLevel::level(t.n) : ChromLevel::bot();
    case NodeKind::EG:
      return k == g.trivial_index() ? ChromLevel::level((std::int64_t{1} << (t.n - 1)) * t.m)
                                    : ChromLevel::bot();
    case NodeKind::EFPlus: return t.family->contains(k) ? ChromLevel::top() : ChromLevel::bot();
    case NodeKind::EFTilde: return t.family->contains(k) ? ChromLevel::bot() : ChromLevel::top();
    case NodeKind::Atom: return t.atom_values[g.class_of(k)];
    case NodeKind::Triv: return child(0);
    case NodeKind::Res:
    case NodeKind::Pull: return child(t.map->image_index(k));
    case NodeKind::Ind:
    case NodeKind::Norm: {
      const auto& iota = *t.map;
      int h = iota.image_index(iota.source().whole_index());
      bool norm = t.kind == NodeKind::Norm;
      ChromLevel acc = norm ? ChromLevel::top() : ChromLevel::bot();
      for (int x : double_coset_indices(g, k, h)) {
        int kx = g.conjugate_index(k, g.inv(x));  // x^{-1} K x
        if (norm) {
          acc = meet(acc, child(*iota.preimage_index(g.intersect_index(kx, h))));
        } else if (g.subgroup_contains(h, kx)) {
          acc = join(acc, child(*iota.preimage_index(kx)));
        }
      }
      return acc;
    }
    case NodeKind::Smash: return meet(child(k), memo_.at(t.rhs.get()).at(k));
    case NodeKind::Wedge: return join(child(k), memo_.at(t.rhs.get()).at(k));
    case NodeKind::Ident: break;
  }
  throw Error(ErrorKind::InvariantViolation, "unresolved identifier in typed tree");
}

ChromSupport support(const TypedPtr& t) {
  SupportEvaluator ev;
  return ev.eval(t);
}

ChromSupport transport(const ChromSupport& s, const FiniteGroup& to) {
  if (s.ambient() == to) return ChromSupport(to, s.values());
  auto f = identify(to, s.ambient());
  std::vector<ChromLevel> values;
  for (int c = 0; c < static_cast<int>(to.class_count()); ++c)
    values.push_back(s.at(f.image_index(to.class_rep(c))));
  return ChromSupport(to, std::move(values));
}

namespace {

template <class Pred>
bool pointwise(const ChromSupport& a, const ChromSupport& b, Pred pred) {
  auto bt = transport(b, a.ambient());
  for (std::size_t c = 0; c < a.values().size(); ++c)
    if (!pred(a.at_class(static_cast<int>(c)), bt.at_class(static_cast<int>(c)))) return false;
  return true;
}

}  // namespace

bool bousfield_equal(const ChromSupport& a, const ChromSupport& b) {
  return pointwise(a, b, [](ChromLevel x, ChromLevel y) { return x == y; });
}

bool class_leq(const ChromSupport& a, const ChromSupport& b) {
  return pointwise(a, b, [](ChromLevel x, ChromLevel y) { return x <= y; });
}

bool is_acyclic(const ChromSupport& z, const ChromSupport& e) {
  return pointwise(z, e, [](ChromLevel x, ChromLevel y) { return meet(x, y).is_bot(); });
}

bool bousfield_equal(const TypedPtr& a, const TypedPtr& b) {
  return bousfield_equal(support(a), support(b));
}
bool class_leq(const TypedPtr& a, const TypedPtr& b) { return class_leq(support(a), support(b)); }
bool is_acyclic(const TypedPtr& z, const TypedPtr& e) { return is_acyclic(support(z), support(e)); }

ChromLevel fixed_points_class(const ChromSupport& s) {
  ChromLevel acc = ChromLevel::bot();
  for (auto v : s.values()) acc = join(acc, v);
  return acc;
}

}  // namespace smashlab
