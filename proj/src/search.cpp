#include "ringoid/search.hpp"

namespace ringoid {

std::vector<Elem> greedy_generators(const AbelianGroup& g) {
  std::vector<char> in(g.size(), 0);
  std::vector<Elem> members{g.zero()};
  in[g.zero()] = 1;
  std::vector<Elem> gens;
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (in[e]) continue;
    const auto gen = static_cast<Elem>(e);
    gens.push_back(gen);
    // Close the current subgroup under adding `gen`.
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem t = g.add(members[i], gen);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
      }
    }
  }
  return gens;
}

namespace {

struct Enumerator {
  const AbelianGroup& dom;
  const AbelianGroup& cod;
  const AdditiveConstraints& constraints;
  SearchCounter& counter;
  const std::function<bool(const std::vector<Elem>&)>& visit;
  std::vector<Elem> gens;
  bool stopped = false;

  bool allowed(Elem s, Elem t) const { return !constraints.allowed || constraints.allowed(s, t); }

  // Extends `map` (defined exactly on `assigned`) by gen -> image; returns
  // false on an inconsistency or a constraint violation.
  bool extend(std::vector<Elem>& map, std::vector<Elem>& assigned, std::vector<Elem>& fresh, Elem gen,
              Elem image) const {
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      Elem e = assigned[i];
      Elem next = dom.add(e, gen);
      Elem value = cod.add(map[e], image);
      if (map[next] == kNone) {
        if (!allowed(next, value)) return false;
        map[next] = value;
        assigned.push_back(next);
        fresh.push_back(next);
      } else if (map[next] != value) {
        return false;
      }
    }
    return true;
  }

  void recurse(std::size_t level, std::vector<Elem>& map, std::vector<Elem>& assigned) {
    if (stopped) return;
    if (level == gens.size()) {
      if (!visit(map)) stopped = true;
      return;
    }
    const Elem gen = gens[level];
    for (std::size_t t = 0; t < cod.size() && !stopped; ++t) {
      const auto image = static_cast<Elem>(t);
      if (!allowed(gen, image)) continue;
      counter.tick("additive map search");
      std::vector<Elem> next_map = map;
      std::vector<Elem> next_assigned = assigned;
      std::vector<Elem> fresh;
      if (!extend(next_map, next_assigned, fresh, gen, image)) continue;
      if (constraints.consistent && !constraints.consistent(next_map, fresh)) continue;
      recurse(level + 1, next_map, next_assigned);
    }
  }
};

}  // namespace

void enumerate_additive_maps(const AbelianGroup& dom, const AbelianGroup& cod,
                             const AdditiveConstraints& constraints, SearchCounter& counter,
                             const std::function<bool(const std::vector<Elem>&)>& visit) {
  Enumerator en{dom, cod, constraints, counter, visit, greedy_generators(dom)};
  if (!en.allowed(dom.zero(), cod.zero())) return;
  std::vector<Elem> map(dom.size(), kNone);
  map[dom.zero()] = cod.zero();
  std::vector<Elem> assigned{dom.zero()};
  std::vector<Elem> fresh{dom.zero()};
  if (constraints.consistent && !constraints.consistent(map, fresh)) return;
  en.recurse(0, map, assigned);
}

std::optional<std::vector<Elem>> find_group_isomorphism(const AbelianGroup& a, const AbelianGroup& b,
                                                        const Budget& budget) {
  if (a.size() != b.size()) return std::nullopt;
  SearchCounter counter(budget);
  std::optional<std::vector<Elem>> found;
  AdditiveConstraints c;
  // Injective on the assigned part.
  c.consistent = [](const std::vector<Elem>& map, std::span<const Elem> fresh) {
    for (Elem e : fresh)
      for (std::size_t x = 0; x < map.size(); ++x)
        if (static_cast<Elem>(x) != e && map[x] == map[e]) return false;
    return true;
  };
  enumerate_additive_maps(a, b, c, counter, [&](const std::vector<Elem>& map) {
    found = map;
    return false;
  });
  return found;
}

}  // namespace ringoid
