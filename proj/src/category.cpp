#include "ringoid/category.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ringoid {

FiniteCategory::FiniteCategory(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity,
                               std::vector<Elem> compose)
    : objects_(objects), arrows_(std::move(arrows)), identity_(std::move(identity)), compose_(std::move(compose)) {
  const std::size_t m = arrows_.size();
  if (identity_.size() != objects_) throw MalformedInput("identity list has wrong length");
  if (compose_.size() != m * m) throw MalformedInput("composition table has wrong size");
  auto object_ok = [this](Elem a) { return a >= 0 && static_cast<std::size_t>(a) < objects_; };
  for (const Arrow& a : arrows_)
    if (!object_ok(a.src) || !object_ok(a.tgt)) throw MalformedInput("morphism endpoint out of range");
  for (Elem e : identity_)
    if (e < 0 || static_cast<std::size_t>(e) >= m) throw MalformedInput("identity out of range");
  for (Elem e : compose_)
    if (e < kNone || (e != kNone && static_cast<std::size_t>(e) >= m)) throw MalformedInput("composite out of range");
  hom_.assign(objects_ * objects_, {});
  for (std::size_t f = 0; f < m; ++f)
    hom_[static_cast<std::size_t>(arrows_[f].src) * objects_ + arrows_[f].tgt].push_back(static_cast<Elem>(f));
}

CategoryRef make_category(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity,
                          std::vector<Elem> compose) {
  return std::make_shared<const FiniteCategory>(objects, std::move(arrows), std::move(identity), std::move(compose));
}

CategoryRef make_category(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity,
                          const std::function<Elem(Elem, Elem)>& compose) {
  const std::size_t m = arrows.size();
  std::vector<Elem> table(m * m, kNone);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (arrows[f].tgt == arrows[g].src) table[f * m + g] = compose(static_cast<Elem>(f), static_cast<Elem>(g));
  return make_category(objects, std::move(arrows), std::move(identity), std::move(table));
}

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport rep;
  const auto n = static_cast<Elem>(c.object_count());
  const auto m = static_cast<Elem>(c.morphism_count());
  [&] {
    for (Elem a = 0; a < n; ++a)
      if (c.src(c.identity(a)) != a || c.tgt(c.identity(a)) != a) return rep.add("identity-endpoints", {a});
  }();
  [&] {
    for (Elem f = 0; f < m; ++f)
      for (Elem g = 0; g < m; ++g) {
        bool composable = c.tgt(f) == c.src(g);
        if (composable != (c.then(f, g) != kNone)) return rep.add("composition-defined", {f, g});
      }
  }();
  [&] {
    for (Elem f = 0; f < m; ++f)
      for (Elem g = 0; g < m; ++g) {
        Elem h = c.then(f, g);
        if (h != kNone && (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))) return rep.add("composition-endpoints", {f, g});
      }
  }();
  if (!rep.ok()) return rep;
  [&] {
    for (Elem f = 0; f < m; ++f)
      if (c.then(c.identity(c.src(f)), f) != f || c.then(f, c.identity(c.tgt(f))) != f) return rep.add("unit", {f});
  }();
  [&] {
    for (Elem f = 0; f < m; ++f)
      for (Elem g = 0; g < m; ++g) {
        Elem fg = c.then(f, g);
        if (fg == kNone) continue;
        for (Elem h = 0; h < m; ++h) {
          Elem gh = c.then(g, h);
          if (gh == kNone) continue;
          if (c.then(fg, h) != c.then(f, gh)) return rep.add("associativity", {f, g, h});
        }
      }
  }();
  return rep;
}

CategoryRef discrete_category(std::size_t n) {
  std::vector<Arrow> arrows;
  std::vector<Elem> id(n);
  for (std::size_t a = 0; a < n; ++a) {
    arrows.push_back({static_cast<Elem>(a), static_cast<Elem>(a)});
    id[a] = static_cast<Elem>(a);
  }
  return make_category(n, std::move(arrows), std::move(id), [](Elem f, Elem) { return f; });
}

CategoryRef codiscrete_category(std::size_t n) {
  std::vector<Arrow> arrows;
  std::vector<Elem> id(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) arrows.push_back({static_cast<Elem>(a), static_cast<Elem>(b)});
  for (std::size_t a = 0; a < n; ++a) id[a] = static_cast<Elem>(a * n + a);
  const auto nn = static_cast<Elem>(n);
  return make_category(n, std::move(arrows), std::move(id), [nn](Elem f, Elem g) { return (f / nn) * nn + g % nn; });
}

CategoryRef arrow_category() {
  return make_category(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1}, [](Elem f, Elem g) { return f == 0 || f == 1 ? g : f; });
}

Elem inverse(const FiniteCategory& c, Elem f) {
  for (Elem g : c.hom(c.tgt(f), c.src(f)))
    if (c.then(f, g) == c.identity(c.src(f)) && c.then(g, f) == c.identity(c.tgt(f))) return g;
  return kNone;
}

bool is_groupoid(const FiniteCategory& c) {
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (inverse(c, static_cast<Elem>(f)) == kNone) return false;
  return true;
}

std::vector<Elem> connected_components(const FiniteCategory& c) {
  std::vector<Elem> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Elem(Elem)> root = [&](Elem a) { return parent[a] == a ? a : parent[a] = root(parent[a]); };
  for (const Arrow& a : c.arrows()) {
    Elem x = root(a.src), y = root(a.tgt);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<Elem> label(c.object_count(), kNone);
  Elem next = 0;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    Elem r = root(static_cast<Elem>(a));
    if (label[r] == kNone) label[r] = next++;
    label[a] = label[r];
  }
  return label;
}

std::size_t component_count(const FiniteCategory& c) {
  auto label = connected_components(c);
  return label.empty() ? 0 : static_cast<std::size_t>(*std::max_element(label.begin(), label.end()) + 1);
}

std::optional<Elem> find_iso(const FiniteCategory& c, Elem a, Elem b) {
  for (Elem f : c.hom(a, b))
    if (inverse(c, f) != kNone) return f;
  return std::nullopt;
}

bool isomorphic_objects(const FiniteCategory& c, Elem a, Elem b) { return find_iso(c, a, b).has_value(); }

ValidationReport validate_functor(const Functor& f) {
  ValidationReport rep;
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.objects.size() != s.object_count() || f.morphisms.size() != s.morphism_count()) {
    rep.add("shape", {}, "functor maps have wrong length");
    return rep;
  }
  for (Elem e : f.objects)
    if (e < 0 || static_cast<std::size_t>(e) >= t.object_count()) {
      rep.add("shape", {e}, "object image out of range");
      return rep;
    }
  for (Elem e : f.morphisms)
    if (e < 0 || static_cast<std::size_t>(e) >= t.morphism_count()) {
      rep.add("shape", {e}, "morphism image out of range");
      return rep;
    }
  const auto n = static_cast<Elem>(s.object_count());
  const auto m = static_cast<Elem>(s.morphism_count());
  [&] {
    for (Elem u = 0; u < m; ++u)
      if (t.src(f.morphisms[u]) != f.objects[s.src(u)] || t.tgt(f.morphisms[u]) != f.objects[s.tgt(u)])
        return rep.add("preserves-endpoints", {u});
  }();
  if (!rep.ok()) return rep;
  [&] {
    for (Elem a = 0; a < n; ++a)
      if (f.morphisms[s.identity(a)] != t.identity(f.objects[a])) return rep.add("preserves-identities", {a});
  }();
  [&] {
    for (Elem u = 0; u < m; ++u)
      for (Elem v = 0; v < m; ++v) {
        Elem w = s.then(u, v);
        if (w != kNone && f.morphisms[w] != t.then(f.morphisms[u], f.morphisms[v]))
          return rep.add("preserves-composition", {u, v});
      }
  }();
  return rep;
}

Functor identity_functor(const CategoryRef& c) {
  std::vector<Elem> o(c->object_count()), m(c->morphism_count());
  std::iota(o.begin(), o.end(), 0);
  std::iota(m.begin(), m.end(), 0);
  return {c, c, std::move(o), std::move(m)};
}

Functor compose(const Functor& first, const Functor& second) {
  if (!(*first.target == *second.source)) throw PreconditionError("functors are not composable");
  std::vector<Elem> o(first.objects.size()), m(first.morphisms.size());
  for (std::size_t a = 0; a < o.size(); ++a) o[a] = second.objects[first.objects[a]];
  for (std::size_t u = 0; u < m.size(); ++u) m[u] = second.morphisms[first.morphisms[u]];
  return {first.source, second.target, std::move(o), std::move(m)};
}

FunctorAnalysis analyze_functor(const Functor& f) {
  FunctorAnalysis out;
  const auto& s = *f.source;
  const auto& t = *f.target;
  auto note = [&out](const char* what, std::vector<Elem> witness) {
    if (out.failure.empty()) {
      out.failure = what;
      out.witness = std::move(witness);
    }
  };
  const auto n = static_cast<Elem>(s.object_count());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto& src_hom = s.hom(a, b);
      const auto& tgt_hom = t.hom(f.objects[a], f.objects[b]);
      std::vector<char> hit(t.morphism_count(), 0);
      for (Elem u : src_hom) {
        Elem v = f.morphisms[u];
        if (hit[v] && out.faithful) {
          out.faithful = false;
          note("not faithful", {a, b, u});
        }
        hit[v] = 1;
      }
      for (Elem v : tgt_hom)
        if (!hit[v] && out.full) {
          out.full = false;
          note("not full", {a, b, v});
        }
    }
  std::vector<char> hit(t.object_count(), 0);
  for (Elem a = 0; a < n; ++a) {
    if (hit[f.objects[a]] && out.injective_on_objects) out.injective_on_objects = false;
    hit[f.objects[a]] = 1;
  }
  for (std::size_t c = 0; c < t.object_count(); ++c) {
    if (hit[c]) continue;
    out.surjective_on_objects = false;
    bool reached = false;
    for (Elem a = 0; a < n && !reached; ++a) reached = isomorphic_objects(t, f.objects[a], static_cast<Elem>(c));
    if (!reached && out.essentially_surjective) {
      out.essentially_surjective = false;
      note("not essentially surjective", {static_cast<Elem>(c)});
    }
  }
  return out;
}

ValidationReport validate_natural(const Functor& f, const Functor& g, const NaturalTransformation& nt) {
  ValidationReport rep;
  const auto& s = *f.source;
  const auto& t = *f.target;
  const auto n = static_cast<Elem>(s.object_count());
  if (nt.components.size() != s.object_count()) {
    rep.add("shape", {});
    return rep;
  }
  [&] {
    for (Elem a = 0; a < n; ++a) {
      Elem c = nt.components[a];
      if (c < 0 || static_cast<std::size_t>(c) >= t.morphism_count() || t.src(c) != f.objects[a] ||
          t.tgt(c) != g.objects[a])
        return rep.add("component-endpoints", {a});
    }
  }();
  if (!rep.ok()) return rep;
  [&] {
    for (std::size_t u = 0; u < s.morphism_count(); ++u) {
      Elem a = s.src(static_cast<Elem>(u)), b = s.tgt(static_cast<Elem>(u));
      if (t.then(nt.components[a], g.morphisms[u]) != t.then(f.morphisms[u], nt.components[b]))
        return rep.add("naturality", {static_cast<Elem>(u)});
    }
  }();
  return rep;
}

bool is_natural_iso(const Functor& f, const Functor& g, const NaturalTransformation& nt) {
  if (!validate_natural(f, g, nt).ok()) return false;
  for (Elem c : nt.components)
    if (inverse(*f.target, c) == kNone) return false;
  return true;
}

void enumerate_natural_transformations(const Functor& f, const Functor& g, bool only_isos, const Budget& budget,
                                       const std::function<bool(const NaturalTransformation&)>& visit) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  const std::size_t n = s.object_count();
  // Morphisms whose naturality square is decided once object `a` is assigned.
  std::vector<std::vector<Elem>> ready(n);
  for (std::size_t u = 0; u < s.morphism_count(); ++u) {
    Elem a = s.src(static_cast<Elem>(u)), b = s.tgt(static_cast<Elem>(u));
    ready[std::max(a, b)].push_back(static_cast<Elem>(u));
  }
  SearchCounter counter(budget);
  NaturalTransformation nt{std::vector<Elem>(n, kNone)};
  bool stopped = false;
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (stopped) return;
    if (a == n) {
      if (!visit(nt)) stopped = true;
      return;
    }
    for (Elem c : t.hom(f.objects[a], g.objects[a])) {
      counter.tick("natural transformation search");
      if (only_isos && inverse(t, c) == kNone) continue;
      nt.components[a] = c;
      bool ok = true;
      for (Elem u : ready[a]) {
        Elem x = s.src(u), y = s.tgt(u);
        if (t.then(nt.components[x], g.morphisms[u]) != t.then(f.morphisms[u], nt.components[y])) {
          ok = false;
          break;
        }
      }
      if (ok) rec(a + 1);
      if (stopped) return;
    }
    nt.components[a] = kNone;
  };
  rec(0);
}

std::size_t count_natural_transformations(const Functor& f, const Functor& g, bool only_isos, const Budget& budget) {
  std::size_t count = 0;
  enumerate_natural_transformations(f, g, only_isos, budget, [&](const NaturalTransformation&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<NaturalTransformation> find_natural_iso(const Functor& f, const Functor& g, const Budget& budget) {
  std::optional<NaturalTransformation> found;
  enumerate_natural_transformations(f, g, true, budget, [&](const NaturalTransformation& nt) {
    found = nt;
    return false;
  });
  return found;
}

void enumerate_functors(const CategoryRef& source, const CategoryRef& target, const FunctorConstraints& constraints,
                        const Budget& budget, const std::function<bool(const Functor&)>& visit) {
  const auto& s = *source;
  const auto& t = *target;
  const std::size_t n = s.object_count(), m = s.morphism_count();
  // Composition triples (u, v, w = v∘u) checked when the largest index is assigned.
  std::vector<std::vector<std::array<Elem, 3>>> ready(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Elem w = s.then(static_cast<Elem>(u), static_cast<Elem>(v));
      if (w == kNone) continue;
      std::size_t top = std::max({u, v, static_cast<std::size_t>(w)});
      ready[top].push_back({static_cast<Elem>(u), static_cast<Elem>(v), w});
    }
  std::vector<Elem> identity_of(m, kNone);
  for (std::size_t a = 0; a < n; ++a) identity_of[s.identity(static_cast<Elem>(a))] = static_cast<Elem>(a);

  SearchCounter counter(budget);
  Functor f{source, target, std::vector<Elem>(n, kNone), std::vector<Elem>(m, kNone)};
  bool stopped = false;
  std::function<void(std::size_t)> on_morphism = [&](std::size_t u) {
    if (stopped) return;
    if (u == m) {
      if (!visit(f)) stopped = true;
      return;
    }
    const auto& candidates = t.hom(f.objects[s.src(static_cast<Elem>(u))], f.objects[s.tgt(static_cast<Elem>(u))]);
    for (Elem img : candidates) {
      counter.tick("functor search");
      if (identity_of[u] != kNone && img != t.identity(f.objects[identity_of[u]])) continue;
      if (constraints.morphism_allowed && !constraints.morphism_allowed(static_cast<Elem>(u), img)) continue;
      f.morphisms[u] = img;
      bool ok = true;
      for (const auto& [x, y, z] : ready[u])
        if (f.morphisms[z] != t.then(f.morphisms[x], f.morphisms[y])) {
          ok = false;
          break;
        }
      if (ok) on_morphism(u + 1);
      if (stopped) return;
    }
    f.morphisms[u] = kNone;
  };
  std::function<void(std::size_t)> on_object = [&](std::size_t a) {
    if (stopped) return;
    if (a == n) {
      on_morphism(0);
      return;
    }
    for (std::size_t img = 0; img < t.object_count(); ++img) {
      counter.tick("functor search");
      if (constraints.object_allowed && !constraints.object_allowed(static_cast<Elem>(a), static_cast<Elem>(img)))
        continue;
      f.objects[a] = static_cast<Elem>(img);
      on_object(a + 1);
      if (stopped) return;
    }
    f.objects[a] = kNone;
  };
  on_object(0);
}

CategoryProduct product_category(const CategoryRef& c, const CategoryRef& d, const Budget& budget) {
  const std::size_t nd = d->object_count(), md = d->morphism_count();
  const std::size_t n = c->object_count() * nd, m = c->morphism_count() * md;
  budget.check_carrier(m, "product category morphisms");
  std::vector<Arrow> arrows(m);
  std::vector<Elem> id(n), po(n), qo(n), pm(m), qm(m);
  for (std::size_t u = 0; u < m; ++u) {
    auto x = static_cast<Elem>(u / md), y = static_cast<Elem>(u % md);
    arrows[u] = {pair_index(c->src(x), d->src(y), nd), pair_index(c->tgt(x), d->tgt(y), nd)};
    pm[u] = x;
    qm[u] = y;
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto x = static_cast<Elem>(a / nd), y = static_cast<Elem>(a % nd);
    id[a] = pair_index(c->identity(x), d->identity(y), md);
    po[a] = x;
    qo[a] = y;
  }
  auto cat = make_category(n, std::move(arrows), std::move(id), [&](Elem u, Elem v) {
    return pair_index(c->then(u / static_cast<Elem>(md), v / static_cast<Elem>(md)),
                      d->then(u % static_cast<Elem>(md), v % static_cast<Elem>(md)), md);
  });
  return {cat, {cat, c, std::move(po), std::move(pm)}, {cat, d, std::move(qo), std::move(qm)}};
}

CategoryFiberProduct fiber_product(const Functor& f, const Functor& g, const Budget& budget) {
  if (!(*f.target == *g.target)) throw PreconditionError("fiber product needs a common target");
  const auto& a = *f.source;
  const auto& b = *g.source;
  CategoryFiberProduct out;
  std::vector<Elem> obj_label(a.object_count() * b.object_count(), kNone);
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < b.object_count(); ++y)
      if (f.objects[x] == g.objects[y]) {
        obj_label[x * b.object_count() + y] = static_cast<Elem>(out.objects.size());
        out.objects.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      }
  std::vector<Elem> mor_label(a.morphism_count() * b.morphism_count(), kNone);
  for (std::size_t u = 0; u < a.morphism_count(); ++u)
    for (std::size_t v = 0; v < b.morphism_count(); ++v)
      if (f.morphisms[u] == g.morphisms[v]) {
        mor_label[u * b.morphism_count() + v] = static_cast<Elem>(out.morphisms.size());
        out.morphisms.emplace_back(static_cast<Elem>(u), static_cast<Elem>(v));
      }
  budget.check_carrier(out.morphisms.size(), "fiber product morphisms");
  const std::size_t nb = b.object_count(), mb = b.morphism_count();
  std::vector<Arrow> arrows;
  for (auto [u, v] : out.morphisms)
    arrows.push_back({obj_label[a.src(u) * nb + b.src(v)], obj_label[a.tgt(u) * nb + b.tgt(v)]});
  std::vector<Elem> id;
  for (auto [x, y] : out.objects) id.push_back(mor_label[a.identity(x) * mb + b.identity(y)]);
  const auto& mors = out.morphisms;
  out.category = make_category(out.objects.size(), std::move(arrows), std::move(id), [&](Elem p, Elem q) {
    return mor_label[a.then(mors[p].first, mors[q].first) * mb + b.then(mors[p].second, mors[q].second)];
  });
  std::vector<Elem> o1, o2, m1, m2;
  for (auto [x, y] : out.objects) {
    o1.push_back(x);
    o2.push_back(y);
  }
  for (auto [u, v] : out.morphisms) {
    m1.push_back(u);
    m2.push_back(v);
  }
  out.first = {out.category, f.source, std::move(o1), std::move(m1)};
  out.second = {out.category, g.source, std::move(o2), std::move(m2)};
  return out;
}

}  // namespace ringoid
