#include "smashlab/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "smashlab/error.hpp"

namespace smashlab {

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::size_t cap = kDefaultOrderCap;
  std::string name;
  std::vector<Perm> gens;
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  std::vector<int> mul;
  std::vector<int> inv;
  std::vector<int> order_of;
  std::vector<int> small_gens;
  bool abelian = true;

  std::vector<ElementSet> subs;
  std::map<ElementSet, int> sub_index;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  int m(int a, int b) const { return mul[static_cast<std::size_t>(a) * elems.size() + b]; }

  ElementSet closure(const std::vector<int>& g) const {
    std::vector<bool> in(elems.size(), false);
    std::vector<int> out{0};
    in[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int s : g) {
        int y = m(out[i], s);
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementSet conjugate(const ElementSet& s, int g) const {
    ElementSet out;
    out.reserve(s.size());
    int gi = inv[g];
    for (int x : s) out.push_back(m(m(g, x), gi));
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace detail

namespace {

bool subgroup_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<int> greedy_generators(const detail::GroupData& d, const ElementSet& elems) {
  std::vector<int> gens;
  ElementSet span{0};
  for (int x : elems) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = d.closure(gens);
  }
  return gens;
}

void build_lattice(detail::GroupData& d) {
  const int n = static_cast<int>(d.elems.size());
  std::set<ElementSet> found;
  std::deque<std::pair<ElementSet, std::vector<int>>> queue;
  found.insert(ElementSet{0});
  queue.emplace_back(ElementSet{0}, std::vector<int>{});
  while (!queue.empty()) {
    auto [h, hgens] = std::move(queue.front());
    queue.pop_front();
    std::vector<bool> in(n, false);
    for (int x : h) in[x] = true;
    for (int g = 0; g < n; ++g) {
      if (in[g]) continue;
      auto gens = hgens;
      gens.push_back(g);
      ElementSet k = d.closure(gens);
      if (found.insert(k).second) queue.emplace_back(std::move(k), std::move(gens));
    }
  }
  d.subs.assign(found.begin(), found.end());
  std::sort(d.subs.begin(), d.subs.end(), subgroup_less);
  for (int i = 0; i < static_cast<int>(d.subs.size()); ++i) d.sub_index[d.subs[i]] = i;

  d.class_of.assign(d.subs.size(), -1);
  for (int s = 0; s < static_cast<int>(d.subs.size()); ++s) {
    if (d.class_of[s] >= 0) continue;
    int c = static_cast<int>(d.classes.size());
    d.classes.emplace_back();
    for (int g = 0; g < n; ++g) {
      int t = d.sub_index.at(d.conjugate(d.subs[s], g));
      if (d.class_of[t] < 0) {
        d.class_of[t] = c;
        d.classes.back().push_back(t);
      }
    }
    std::sort(d.classes.back().begin(), d.classes.back().end());
  }
}

}  // namespace

FiniteGroup FiniteGroup::generated(std::size_t degree, const std::vector<Perm>& generators,
                                   std::string name, std::size_t order_cap) {
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->cap = order_cap;
  d->name = std::move(name);
  d->gens = generators;
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::InvalidPermutation, "generator degree mismatch");

  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const auto& g : generators) {
      Perm y = g * frontier[i];
      if (seen.insert(y).second) {
        if (seen.size() > order_cap)
          throw Error(ErrorKind::OrderCapExceeded,
                      "group " + d->name + " has order above the cap " +
                          std::to_string(order_cap));
        frontier.push_back(std::move(y));
      }
    }
  d->elems.assign(seen.begin(), seen.end());
  const std::size_t n = d->elems.size();
  for (std::size_t i = 0; i < n; ++i) d->index[d->elems[i]] = static_cast<int>(i);
  d->mul.resize(n * n);
  d->inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      d->mul[a * n + b] = d->index.at(d->elems[a] * d->elems[b]);
    d->inv[a] = d->index.at(d->elems[a].inverse());
  }
  for (std::size_t a = 0; a < n && d->abelian; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d->mul[a * n + b] != d->mul[b * n + a]) {
        d->abelian = false;
        break;
      }
  d->order_of.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    int x = static_cast<int>(a);
    while (x != 0) {
      x = d->m(x, static_cast<int>(a));
      ++k;
    }
    d->order_of[a] = a == 0 ? 1 : k;
  }
  ElementSet all(n);
  std::iota(all.begin(), all.end(), 0);
  d->small_gens = greedy_generators(*d, all);
  build_lattice(*d);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::cyclic(unsigned n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidPermutation, "C(0) is not a group");
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(CycleWord{{[&] {
                              std::vector<unsigned> c(n);
                              std::iota(c.begin(), c.end(), 1u);
                              return c;
                            }()}}
                                .to_perm(n));
  return generated(n, gens, "C" + std::to_string(n), order_cap);
}

FiniteGroup FiniteGroup::symmetric(unsigned n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidPermutation, "S(0) is not a group");
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<unsigned> c(n);
    std::iota(c.begin(), c.end(), 1u);
    gens.push_back(CycleWord{{c}}.to_perm(n));
    gens.push_back(CycleWord{{{1, 2}}}.to_perm(n));
  }
  return generated(n, gens, "S" + std::to_string(n), order_cap);
}

FiniteGroup FiniteGroup::dihedral8(std::size_t order_cap) {
  return generated(4, {CycleWord{{{1, 2, 3, 4}}}.to_perm(4), CycleWord{{{1, 3}}}.to_perm(4)},
                   "D8", order_cap);
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b,
                                 std::size_t order_cap) {
  const std::size_t deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    auto im = Perm::identity(deg).images();
    for (std::size_t i = 0; i < a.degree(); ++i) im[i] = g(i);
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators()) {
    auto im = Perm::identity(deg).images();
    for (std::size_t i = 0; i < b.degree(); ++i)
      im[a.degree() + i] = static_cast<std::uint8_t>(a.degree() + g(i));
    gens.emplace_back(std::move(im));
  }
  return generated(deg, gens, a.name() + "x" + b.name(), order_cap);
}

FiniteGroup FiniteGroup::trivial() { return generated(1, {}, "C1"); }

std::size_t FiniteGroup::degree() const { return data_->degree; }
std::size_t FiniteGroup::order() const { return data_->elems.size(); }
const std::string& FiniteGroup::name() const { return data_->name; }
const std::vector<Perm>& FiniteGroup::generators() const { return data_->gens; }
const std::vector<int>& FiniteGroup::small_generators() const { return data_->small_gens; }
bool FiniteGroup::is_abelian() const { return data_->abelian; }
const std::vector<Perm>& FiniteGroup::elements() const { return data_->elems; }
const Perm& FiniteGroup::element(int i) const { return data_->elems[i]; }

std::optional<int> FiniteGroup::index_of(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::mul(int a, int b) const { return data_->m(a, b); }
int FiniteGroup::inv(int a) const { return data_->inv[a]; }
int FiniteGroup::element_order(int a) const { return data_->order_of[a]; }

std::size_t FiniteGroup::subgroup_count() const { return data_->subs.size(); }
const ElementSet& FiniteGroup::subgroup_elements(int s) const { return data_->subs[s]; }
Subgroup FiniteGroup::subgroup(int s) const { return Subgroup(*this, s); }

std::vector<Subgroup> FiniteGroup::subgroups() const {
  std::vector<Subgroup> out;
  for (int s = 0; s < static_cast<int>(subgroup_count()); ++s) out.emplace_back(*this, s);
  return out;
}

std::optional<int> FiniteGroup::subgroup_index(const ElementSet& elems) const {
  auto it = data_->sub_index.find(elems);
  if (it == data_->sub_index.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::whole_index() const { return static_cast<int>(subgroup_count()) - 1; }

int FiniteGroup::conjugate_index(int s, int g) const {
  return data_->sub_index.at(data_->conjugate(data_->subs[s], g));
}

bool FiniteGroup::subgroup_contains(int outer, int inner) const {
  const auto& o = data_->subs[outer];
  const auto& i = data_->subs[inner];
  return std::includes(o.begin(), o.end(), i.begin(), i.end());
}

int FiniteGroup::intersect_index(int a, int b) const {
  ElementSet out;
  std::set_intersection(data_->subs[a].begin(), data_->subs[a].end(), data_->subs[b].begin(),
                        data_->subs[b].end(), std::back_inserter(out));
  return data_->sub_index.at(out);
}

bool FiniteGroup::is_normal(int s) const {
  for (int g : data_->small_gens)
    if (conjugate_index(s, g) != s) return false;
  return true;
}

std::size_t FiniteGroup::class_count() const { return data_->classes.size(); }
int FiniteGroup::class_of(int s) const { return data_->class_of[s]; }
int FiniteGroup::class_rep(int c) const { return data_->classes[c].front(); }
const std::vector<int>& FiniteGroup::class_members(int c) const { return data_->classes[c]; }

ElementSet FiniteGroup::closure(const std::vector<int>& gens) const {
  return data_->closure(gens);
}

std::vector<std::string> FiniteGroup::subgroup_generators(int s) const {
  std::vector<std::string> out;
  for (int g : greedy_generators(*data_, data_->subs[s]))
    out.push_back(data_->elems[g].to_cycles());
  return out;
}

std::string FiniteGroup::subgroup_label(int s) const {
  if (data_->subs[s].size() == 1) return "e";
  if (s == whole_index() && !data_->name.empty()) return data_->name;
  std::string out = "<";
  auto gens = subgroup_generators(s);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += gens[i];
  }
  return out + ">";
}

FiniteGroup FiniteGroup::subgroup_as_group(int s, std::string name) const {
  if (name.empty()) name = subgroup_label(s);
  std::vector<Perm> gens;
  for (int g : greedy_generators(*data_, data_->subs[s])) gens.push_back(data_->elems[g]);
  return generated(data_->degree, gens, std::move(name), std::max(data_->cap, order()));
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  return data_->degree == other.data_->degree && data_->elems == other.data_->elems;
}

bool FiniteGroup::contained_in(const FiniteGroup& other) const {
  if (degree() != other.degree()) return false;
  return std::includes(other.elements().begin(), other.elements().end(), elements().begin(),
                       elements().end());
}

bool Subgroup::contains_element(int g) const {
  return std::binary_search(elements().begin(), elements().end(), g);
}

bool Subgroup::contains(const Subgroup& k) const {
  if (!(parent_ == k.parent_))
    throw Error(ErrorKind::AmbientMismatch, "subgroups of different groups");
  return parent_.subgroup_contains(index_, k.index_);
}

std::vector<Perm> Subgroup::perms() const {
  std::vector<Perm> out;
  for (int x : elements()) out.push_back(parent_.element(x));
  return out;
}

Subgroup subgroup_generated(const FiniteGroup& parent, const std::vector<Perm>& gens) {
  std::vector<int> idx;
  for (const auto& p : gens) {
    if (p.degree() != parent.degree())
      throw Error(ErrorKind::ElementNotInGroup,
                  p.to_cycles() + " has the wrong degree for " + parent.name());
    auto i = parent.index_of(p);
    if (!i)
      throw Error(ErrorKind::ElementNotInGroup, p.to_cycles() + " is not in " + parent.name());
    idx.push_back(*i);
  }
  return parent.subgroup(*parent.subgroup_index(parent.closure(idx)));
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) { return g.subgroups(); }

Subgroup conjugate_subgroup(const Perm& g, const Subgroup& h) {
  auto gi = h.parent().index_of(g);
  if (!gi)
    throw Error(ErrorKind::ElementNotInGroup,
                g.to_cycles() + " is not in " + h.parent().name());
  return h.parent().subgroup(h.parent().conjugate_index(h.index(), *gi));
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent() == k.parent()))
    throw Error(ErrorKind::AmbientMismatch, "intersection of subgroups of different groups");
  return h.parent().subgroup(h.parent().intersect_index(h.index(), k.index()));
}

std::vector<int> double_coset_indices(const FiniteGroup& g, int k, int h) {
  const auto& ke = g.subgroup_elements(k);
  const auto& he = g.subgroup_elements(h);
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int a : ke) {
      int ax = g.mul(a, x);
      for (int b : he) seen[g.mul(ax, b)] = true;
    }
  }
  return reps;
}

std::vector<Perm> double_cosets(const Subgroup& k, const FiniteGroup& g, const Subgroup& h) {
  if (!(k.parent() == g) || !(h.parent() == g))
    throw Error(ErrorKind::AmbientMismatch, "double cosets need subgroups of the same group");
  std::vector<Perm> out;
  for (int x : double_coset_indices(g, k.index(), h.index())) out.push_back(g.element(x));
  return out;
}

bool is_subconjugate(const Subgroup& k, const Subgroup& h) {
  if (!(k.parent() == h.parent()))
    throw Error(ErrorKind::AmbientMismatch, "subconjugacy across different groups");
  const auto& g = k.parent();
  if (h.order() % k.order() != 0) return false;
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (g.subgroup_contains(g.conjugate_index(h.index(), x), k.index())) return true;
  return false;
}

Family Family::all(const FiniteGroup& g) {
  return Family(g, std::vector<bool>(g.subgroup_count(), true));
}

Family Family::proper(const FiniteGroup& g) {
  std::vector<bool> m(g.subgroup_count(), true);
  m[g.whole_index()] = false;
  return Family(g, std::move(m));
}

Family Family::trivial(const FiniteGroup& g) { return generated_by(g, {g.trivial_index()}); }

Family Family::empty(const FiniteGroup& g) {
  return Family(g, std::vector<bool>(g.subgroup_count(), false));
}

Family Family::generated_by(const FiniteGroup& g, const std::vector<int>& subs) {
  std::vector<bool> m(g.subgroup_count(), false);
  for (int s : subs)
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      int c = g.conjugate_index(s, x);
      for (int t = 0; t < static_cast<int>(g.subgroup_count()); ++t)
        if (!m[t] && g.subgroup_contains(c, t)) m[t] = true;
    }
  return Family(g, std::move(m));
}

bool Family::contains(const Subgroup& s) const {
  if (!(s.parent() == ambient_))
    throw Error(ErrorKind::AmbientMismatch, "subgroup is not in the family's ambient group");
  return members_[s.index()];
}

std::vector<int> Family::members() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(members_.size()); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

std::size_t Family::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

Family family_generated(const Subgroup& h) {
  return Family::generated_by(h.parent(), {h.index()});
}

// --- homomorphisms --------------------------------------------------------

Homomorphism::Homomorphism(FiniteGroup s, FiniteGroup t, std::vector<int> m, std::string name)
    : source_(std::move(s)), target_(std::move(t)), element_map_(std::move(m)),
      name_(std::move(name)) {
  subgroup_image_.resize(source_.subgroup_count());
  for (int i = 0; i < static_cast<int>(source_.subgroup_count()); ++i) {
    ElementSet img;
    for (int x : source_.subgroup_elements(i)) img.push_back(element_map_[x]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    subgroup_image_[i] = *target_.subgroup_index(img);
  }
  if (injective())
    for (int i = 0; i < static_cast<int>(subgroup_image_.size()); ++i)
      preimage_[subgroup_image_[i]] = i;
}

namespace {

// Extends generator images to an element map by breadth-first search.
// Returns nullopt on an inconsistency; `witness` receives the offending pair.
std::optional<std::vector<int>> extend_map(const FiniteGroup& src, const FiniteGroup& tgt,
                                           const std::vector<std::pair<int, int>>& gens,
                                           std::pair<int, int>* witness) {
  std::vector<int> map(src.order(), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (auto [s, fs] : gens) {
      int y = src.mul(x, s);
      int fy = tgt.mul(map[x], fs);
      if (map[y] < 0) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        if (witness) *witness = {x, s};
        return std::nullopt;
      }
    }
  }
  if (queue.size() != src.order()) {
    if (witness) *witness = {-1, -1};
    return std::nullopt;
  }
  return map;
}

std::optional<std::pair<int, int>> first_violation(const FiniteGroup& src,
                                                   const FiniteGroup& tgt,
                                                   const std::vector<int>& map) {
  for (int a = 0; a < static_cast<int>(src.order()); ++a)
    for (int b = 0; b < static_cast<int>(src.order()); ++b)
      if (map[src.mul(a, b)] != tgt.mul(map[a], map[b])) return std::make_pair(a, b);
  return std::nullopt;
}

}  // namespace

Homomorphism Homomorphism::make(const FiniteGroup& source, const FiniteGroup& target,
                                 const std::vector<std::pair<Perm, Perm>>& generator_images,
                                 std::string name) {
  std::vector<std::pair<int, int>> gens;
  for (const auto& [s, t] : generator_images) {
    auto si = s.degree() == source.degree() ? source.index_of(s) : std::nullopt;
    if (!si)
      throw Error(ErrorKind::ElementNotInGroup, s.to_cycles() + " is not in " + source.name());
    auto ti = t.degree() == target.degree() ? target.index_of(t) : std::nullopt;
    if (!ti)
      throw Error(ErrorKind::ElementNotInGroup, t.to_cycles() + " is not in " + target.name());
    gens.emplace_back(*si, *ti);
  }
  std::pair<int, int> w{-1, -1};
  auto map = extend_map(source, target, gens, &w);
  if (!map) {
    if (w.first < 0)
      throw Error(ErrorKind::NotAHomomorphism,
                  "the listed elements do not generate " + source.name());
    throw Error(ErrorKind::NotAHomomorphism,
                "not a homomorphism: f(ab) != f(a)f(b) for a = " +
                    source.element(w.first).to_cycles() +
                    ", b = " + source.element(w.second).to_cycles());
  }
  if (auto v = first_violation(source, target, *map))
    throw Error(ErrorKind::NotAHomomorphism,
                "not a homomorphism: f(ab) != f(a)f(b) for a = " +
                    source.element(v->first).to_cycles() +
                    ", b = " + source.element(v->second).to_cycles());
  return Homomorphism(source, target, std::move(*map), std::move(name));
}

Homomorphism Homomorphism::inclusion(const FiniteGroup& sub, const FiniteGroup& ambient) {
  if (!sub.contained_in(ambient))
    throw Error(ErrorKind::NotASubgroup, sub.name() + " is not contained in " + ambient.name());
  std::vector<int> map;
  for (const auto& p : sub.elements()) map.push_back(*ambient.index_of(p));
  return Homomorphism(sub, ambient, std::move(map), "incl");
}

Homomorphism Homomorphism::identity(const FiniteGroup& g) { return inclusion(g, g); }

const Perm& Homomorphism::map(const Perm& p) const {
  auto i = source_.index_of(p);
  if (!i) throw Error(ErrorKind::ElementNotInGroup, p.to_cycles() + " is not in the source");
  return target_.element(element_map_[*i]);
}

Subgroup Homomorphism::image(const Subgroup& s) const {
  if (!(s.parent() == source_))
    throw Error(ErrorKind::AmbientMismatch, "subgroup is not in the homomorphism's source");
  return target_.subgroup(subgroup_image_[s.index()]);
}

bool Homomorphism::injective() const {
  return target_.subgroup_elements(subgroup_image_.back()).size() == source_.order();
}

std::optional<int> Homomorphism::preimage_index(int target_subgroup) const {
  auto it = preimage_.find(target_subgroup);
  if (it == preimage_.end()) return std::nullopt;
  return it->second;
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
  if (!(first.target_ == source_))
    throw Error(ErrorKind::HomTargetMismatch, "cannot compose homomorphisms");
  std::vector<int> map(first.source_.order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    const Perm& mid = first.target_.element(first.element_map_[x]);
    map[x] = element_map_[*source_.index_of(mid)];
  }
  return Homomorphism(first.source_, target_, std::move(map), name_);
}

Homomorphism check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                const std::vector<std::pair<Perm, Perm>>& generator_images) {
  return Homomorphism::make(source, target, generator_images);
}

Homomorphism canonical_embedding(const FiniteGroup& a, const FiniteGroup& g) {
  if (a.contained_in(g)) return Homomorphism::inclusion(a, g);
  if (g.order() % a.order() != 0)
    throw Error(ErrorKind::NotASubgroup,
                a.name() + " does not embed in " + g.name() + " (order)");

  const auto& gens = a.small_generators();
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
      if (g.element_order(x) == a.element_order(s)) c.push_back(x);
    candidates.push_back(std::move(c));
  }

  std::vector<std::vector<int>> maps;  // element maps of injective homs, in tuple order
  std::vector<std::size_t> pos(gens.size(), 0);
  auto valid_tuple = [&] {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (candidates[i].empty()) return false;
    return true;
  }();
  while (valid_tuple) {
    std::vector<std::pair<int, int>> assignment;
    for (std::size_t i = 0; i < gens.size(); ++i)
      assignment.emplace_back(gens[i], candidates[i][pos[i]]);
    if (auto m = extend_map(a, g, assignment, nullptr)) {
      bool injective = std::count(m->begin(), m->end(), 0) == 1;
      if (injective && !first_violation(a, g, *m)) maps.push_back(std::move(*m));
    }
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) valid_tuple = false;
    }
    if (gens.empty()) break;
  }
  if (gens.empty()) maps.push_back(std::vector<int>{0});
  if (maps.empty())
    throw Error(ErrorKind::NotASubgroup, a.name() + " does not embed in " + g.name());

  Homomorphism base(a, g, maps.front(), "embed");
  std::set<std::vector<int>> checked;
  for (std::size_t k = 1; k < maps.size(); ++k) {
    Homomorphism other(a, g, maps[k], "embed");
    std::vector<int> sig;
    for (int s = 0; s < static_cast<int>(a.subgroup_count()); ++s)
      sig.push_back(other.image_index(s));
    if (!checked.insert(sig).second) continue;
    bool equivalent = false;
    for (int x = 0; x < static_cast<int>(g.order()) && !equivalent; ++x) {
      if (g.conjugate_index(base.image_index(a.whole_index()), x) !=
          other.image_index(a.whole_index()))
        continue;
      equivalent = true;
      for (int s = 0; s < static_cast<int>(a.subgroup_count()); ++s) {
        auto pre = other.preimage_index(g.conjugate_index(base.image_index(s), x));
        if (!pre || a.class_of(*pre) != a.class_of(s)) {
          equivalent = false;
          break;
        }
      }
    }
    if (!equivalent)
      throw Error(ErrorKind::AmbiguousEmbedding,
                  a.name() + " embeds in " + g.name() +
                      " in inequivalent ways; name the subgroup explicitly with sub[...]");
  }
  return base;
}

}  // namespace smashlab
