#include "ringoid/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ringoid {

namespace {

std::string list(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// Backtracking over d(0), d(1), ...; every law is checked as soon as all
// the elements it mentions are assigned.
void linear_maps(const RingRef& c, const FiniteModule& m, bool require_law, const Budget& budget,
                 const std::function<void(const std::vector<Elem>&)>& visit) {
  const auto n = static_cast<Elem>(m.size());
  const auto nc = static_cast<Elem>(c->size());
  std::vector<Elem> d(static_cast<std::size_t>(n), kNone);
  SearchCounter counter(budget);
  auto consistent = [&](Elem x) {
    for (Elem a = 0; a <= x; ++a)
      for (Elem b = 0; b <= x; ++b) {
        const Elem s = m.add(a, b);
        if (s <= x && std::max({a, b, s}) == x && d[s] != c->add(d[a], d[b])) return false;
        if (require_law && std::max(a, b) == x && m.act(d[a], b) != m.act(d[b], a)) return false;
      }
    for (Elem r = 0; r < nc; ++r)
      for (Elem y = 0; y <= x; ++y) {
        const Elem ry = m.act(r, y);
        if (ry <= x && std::max(y, ry) == x && d[ry] != c->mul(r, d[y])) return false;
      }
    return true;
  };
  std::function<void(Elem)> go = [&](Elem x) {
    if (x == n) {
      visit(d);
      return;
    }
    for (Elem v = 0; v < nc; ++v) {
      counter.tick("linear maps");
      d[x] = v;
      if (consistent(x)) go(x + 1);
    }
    d[x] = kNone;
  };
  go(0);
}

// C/J as a C-module.
FiniteModule quotient_module(const Ideal& j) {
  const QuotientRing q = quotient_ring(j);
  const RingRef& c = j.parent;
  const std::size_t n = q.ring->size();
  std::vector<Elem> action(c->size() * n);
  for (std::size_t r = 0; r < c->size(); ++r)
    for (std::size_t x = 0; x < n; ++x) action[r * n + x] = q.ring->mul(q.projection(static_cast<Elem>(r)), static_cast<Elem>(x));
  return FiniteModule(c, q.ring->additive(), std::move(action));
}

std::vector<std::pair<std::string, Ideal>> ideals(const RingRef& c) {
  std::vector<std::pair<std::string, Ideal>> out;
  std::set<std::vector<Elem>> seen;
  const auto n = static_cast<Elem>(c->size());
  auto add = [&](std::vector<Elem> gens) {
    Ideal j = ideal_generated(c, gens);
    if (seen.insert(j.elements).second) out.emplace_back("(" + list(gens).substr(1, list(gens).size() - 2) + ")", j);
  };
  for (Elem a = 0; a < n; ++a) add({a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) add({a, b});
  return out;
}

QuasiIdealRef quasi(const RingRef& c, const FiniteModule& m, std::vector<Elem> d) {
  return make_quasi_ideal(c, m, std::move(d));
}

Trunc1SimpRing pair_groupoid(std::size_t n) {
  auto a0 = make_cyclic_ring(n);
  auto p = product_ring(a0, a0);
  std::vector<Elem> s(n);
  for (std::size_t a = 0; a < n; ++a) s[a] = pair_index(static_cast<Elem>(a), static_cast<Elem>(a), n);
  return {a0, p.ring, p.first.map, p.second.map, s};
}

template <class T>
void sample(std::vector<T>& v, std::size_t keep, std::mt19937_64& rng) {
  if (v.size() <= keep) return;
  for (std::size_t i = 0; i < keep; ++i) std::swap(v[i], v[i + rng() % (v.size() - i)]);
  v.resize(keep);
}

std::vector<Functor> all_functors(const CategoryRef& a, const CategoryRef& b, const Budget& budget) {
  std::vector<Functor> out;
  enumerate_functors(a, b, {}, budget, [&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

CategoryRef cyclic_group_category(std::size_t n) {
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  return make_category(1, std::move(arrows), {0},
                       [n](Elem f, Elem g) { return static_cast<Elem>((static_cast<std::size_t>(f + g)) % n); });
}

}  // namespace

QuasiIdealRef half_over_z4() {
  auto r = make_cyclic_ring(4);
  std::vector<Elem> action(8);
  for (int c = 0; c < 4; ++c)
    for (int x = 0; x < 2; ++x) action[c * 2 + x] = static_cast<Elem>((c * x) % 2);
  return make_quasi_ideal(r, FiniteModule(r, cyclic_group(2), action), {0, 2});
}

QuasiIdealRef cyclic_multiplication(std::size_t n, std::size_t k) {
  auto r = make_cyclic_ring(n);
  std::vector<Elem> d(n);
  for (std::size_t x = 0; x < n; ++x) d[x] = static_cast<Elem>((k * x) % n);
  return make_quasi_ideal(r, regular_module(r), std::move(d));
}

Trunc1SimpRing polynomial_truncation(std::size_t p, std::size_t k) {
  auto a0 = make_cyclic_ring(p);
  auto a1 = make_truncated_polynomial_ring(p, k);
  std::vector<Elem> face(a1->size());
  for (std::size_t e = 0; e < face.size(); ++e) face[e] = static_cast<Elem>(e % p);
  std::vector<Elem> s(p);
  for (std::size_t a = 0; a < p; ++a) s[a] = static_cast<Elem>(a);
  return {a0, a1, face, face, s};
}

std::vector<Named<RingRef>> ring_catalog(std::size_t n, const Budget& budget) {
  std::vector<Named<RingRef>> out;
  for (std::size_t m = 1; m <= n; ++m) out.push_back({"Z/" + std::to_string(m), make_cyclic_ring(m, budget)});
  auto z2 = make_cyclic_ring(2);
  if (n >= 4) {
    out.push_back({"Z/2xZ/2", product_ring(z2, z2, budget).ring});
    out.push_back({"Z/2[x]/(x^2)", make_truncated_polynomial_ring(2, 2, budget)});
  }
  if (n >= 8) {
    out.push_back({"Z/2[x]/(x^3)", make_truncated_polynomial_ring(2, 3, budget)});
    out.push_back({"Z/2xZ/4", product_ring(z2, make_cyclic_ring(4), budget).ring});
  }
  if (n >= 9) out.push_back({"Z/3[x]/(x^2)", make_truncated_polynomial_ring(3, 2, budget)});
  return out;
}

std::vector<Named<FiniteModule>> module_catalog(const Named<RingRef>& c, std::size_t n) {
  std::vector<Named<FiniteModule>> base;
  for (const auto& [gens, j] : ideals(c.value)) {
    const bool zero = j.elements.size() == 1;
    const bool full = j.elements.size() == c.value->size();
    FiniteModule q = quotient_module(j);
    if (q.size() <= n) base.push_back({zero ? c.name : full ? "0" : c.name + "/" + gens, q});
    FiniteModule i = ideal_module(j);
    if (i.size() <= n) base.push_back({zero ? "0" : full ? c.name : gens, i});
  }
  std::vector<Named<FiniteModule>> out;
  auto push = [&](Named<FiniteModule> m) {
    for (const auto& o : out)
      if (o.value == m.value) return;
    out.push_back(std::move(m));
  };
  for (const auto& m : base) push(m);
  const std::size_t singles = out.size();
  for (std::size_t a = 0; a < singles; ++a)
    for (std::size_t b = a; b < singles; ++b)
      if (out[a].value.size() > 1 && out[b].value.size() > 1 && out[a].value.size() * out[b].value.size() <= n)
        push({out[a].name + "+" + out[b].name, direct_sum(out[a].value, out[b].value)});
  return out;
}

std::vector<std::vector<Elem>> quasi_ideal_differentials(const RingRef& c, const FiniteModule& i,
                                                         const Budget& budget) {
  std::vector<std::vector<Elem>> out;
  linear_maps(c, i, true, budget, [&](const std::vector<Elem>& d) { out.push_back(d); });
  return out;
}

Corpus generate_instances(std::uint64_t seed, const CorpusBounds& bounds, const Budget& budget) {
  Corpus out;
  std::mt19937_64 rng(seed);

  // quasi-ideals
  if (bounds.max_ring > 0 && bounds.max_module > 0)
    for (const auto& c : ring_catalog(bounds.max_ring, budget))
      for (const auto& m : module_catalog(c, bounds.max_module))
        for (auto& d : quasi_ideal_differentials(c.value, m.value, budget))
          out.quasi_ideals.push_back({c.name + "; " + m.name + "; d=" + list(d), quasi(c.value, m.value, d)});
  if (bounds.max_ring >= 4 && bounds.max_module >= 2) {
    bool seen = false;
    const auto half = half_over_z4();
    for (const auto& q : out.quasi_ideals) seen = seen || *q.value == *half;
    if (!seen) out.quasi_ideals.push_back({"Z/4; Z/2; d=[0,2]", half});
  }

  // law-check candidates: valid ones, linear ones, arbitrary ones
  if (bounds.max_candidate > 0) {
    if (bounds.max_candidate >= 4) {
      auto z2 = make_cyclic_ring(2);
      out.candidates.push_back({"Z/2; Z/2+Z/2; d=(x,y)->x", quasi(z2, direct_sum(regular_module(z2), regular_module(z2)), {0, 0, 1, 1})});
    }
    for (const auto& q : out.quasi_ideals) out.candidates.push_back(q);
    std::vector<std::pair<Named<RingRef>, Named<FiniteModule>>> pool;
    for (const auto& c : ring_catalog(bounds.max_candidate, budget))
      for (const auto& m : module_catalog(c, bounds.max_candidate)) pool.emplace_back(c, m);
    for (std::size_t k = 0; k < bounds.candidates; ++k) {
      const auto& [c, m] = pool[rng() % pool.size()];
      const std::size_t nc = c.value->size();
      std::vector<Elem> d(m.value.size());
      std::string kind;
      switch (rng() % 3) {
        case 0:
          kind = "arbitrary";
          for (auto& e : d) e = static_cast<Elem>(rng() % nc);
          break;
        case 1: {
          kind = "linear";
          std::vector<std::vector<Elem>> maps;
          linear_maps(c.value, m.value, false, budget, [&](const std::vector<Elem>& v) { maps.push_back(v); });
          d = maps[rng() % maps.size()];
          break;
        }
        default: {
          kind = "perturbed";
          auto valid = quasi_ideal_differentials(c.value, m.value, budget);
          d = valid[rng() % valid.size()];
          if (d.size() > 1) d[1 + rng() % (d.size() - 1)] = static_cast<Elem>(rng() % nc);
        }
      }
      out.candidates.push_back({c.name + "; " + m.name + "; " + kind + " d=" + list(d), quasi(c.value, m.value, d)});
    }
  }

  // truncated simplicial rings
  for (const auto& q : out.quasi_ideals) out.simplicial.push_back({"nerve " + q.name, q_to_simplicial(*q.value, budget)});
  if (bounds.max_ring >= 2) {
    out.simplicial.push_back({"pairs Z/2", pair_groupoid(2)});
    out.simplicial.push_back({"Z/2[x]/(x^2) over Z/2", polynomial_truncation(2, 2)});
    out.simplicial.push_back({"Z/2[x]/(x^3) over Z/2", polynomial_truncation(2, 3)});
  }
  if (bounds.max_ring >= 3) {
    out.simplicial.push_back({"pairs Z/3", pair_groupoid(3)});
    out.simplicial.push_back({"Z/3[x]/(x^2) over Z/3", polynomial_truncation(3, 2)});
  }
  if (bounds.max_ring >= 4) {
    out.simplicial.push_back({"Z/2[x]/(x^4) over Z/2", polynomial_truncation(2, 4)});
    out.simplicial.push_back({"Z/3[x]/(x^3) over Z/3", polynomial_truncation(3, 3)});
  }

  // morphisms among a sample of quasi-ideals
  std::vector<Named<QuasiIdealRef>> sources;
  std::vector<Named<QuasiIdealRef>> rest;
  for (const auto& q : out.quasi_ideals) {
    const bool pinned = (*q.value == *half_over_z4()) ||
                        (q.value->ring_size() == 4 && *q.value == *cyclic_multiplication(4, 2));
    if (pinned && bounds.max_ring >= 4)
      sources.push_back(q);
    else if (q.value->ring_size() * q.value->module_size() <= 16)
      rest.push_back(q);
  }
  const std::size_t want = bounds.hom_sources > sources.size() ? bounds.hom_sources - sources.size() : 0;
  sample(rest, want, rng);
  sources.insert(sources.end(), rest.begin(), rest.end());
  std::sort(sources.begin(), sources.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& a : sources)
    for (const auto& b : sources) {
      std::size_t k = 0;
      for (auto& m : all_qmorphisms(a.value, b.value, budget))
        out.morphisms.push_back({a.name + " -> " + b.name + " #" + std::to_string(k++), std::move(m)});
    }

  // correspondences
  std::vector<Named<DGCorrespondence>> adm;
  for (const auto& m : out.morphisms) {
    out.correspondences.push_back({"graph " + m.name, graph_corr(m.value)});
    adm.push_back({"adm " + m.name, adm_of_hom(m.value, budget).corr});
  }
  out.correspondences.insert(out.correspondences.end(), adm.begin(), adm.end());
  std::vector<Named<DGCorrespondence>> composites;
  for (const auto& a : adm)
    for (const auto& b : adm)
      if (*a.value.R2 == *b.value.R1 && a.value.R12->ring_size() * b.value.R12->ring_size() <= 64)
        composites.push_back({"(" + b.name + ") o (" + a.name + ")", compose(a.value, b.value, budget)});
  sample(composites, 24, rng);
  std::vector<Named<DGCorrespondence>> spans;
  for (const auto& f : out.morphisms)
    for (const auto& g : out.morphisms)
      if (f.value.source == g.value.source && !(f.value.same_maps(g.value) && *f.value.target == *g.value.target))
        spans.push_back({"span (" + f.name + ", " + g.name + ")",
                         {f.value.target, g.value.target, f.value.source, f.value, g.value}});
  sample(spans, 40, rng);
  if (bounds.max_ring >= 4) {
    auto id = adm_of_hom(identity_qmorphism(cyclic_multiplication(4, 2)), budget).corr;
    composites.push_back({"adm id o adm id on Z/4; Z/4; d=[0,2,0,2]", compose(id, id, budget)});
    // K = Z/4 over Z/2: no ring-hom section of f0
    Butterfly b{discrete_quasi_ideal(make_cyclic_ring(2)), half_over_z4(), make_cyclic_ring(4), {0, 1, 0, 1}, {0, 1, 2, 3}, {0}, {0, 2}};
    composites.push_back({"butterfly Z/4 over Z/2 and Z/4; Z/2; d=[0,2]", from_butterfly(b)});
  }
  // a quasi-iso that is not surjective gives an equivalence leg that is no anamorphism
  for (const auto& m : out.morphisms)
    if (is_quasi_iso(m.value).ok() && !is_surjective(m.value)) {
      composites.push_back({"span (" + m.name + ", same)", {m.value.target, m.value.target, m.value.source, m.value, m.value}});
      break;
    }
  out.correspondences.insert(out.correspondences.end(), composites.begin(), composites.end());
  out.correspondences.insert(out.correspondences.end(), spans.begin(), spans.end());

  // finite categories and spans between them
  if (bounds.max_category > 0) {
    for (std::size_t n = 1; n <= bounds.max_category; ++n)
      out.categories.push_back({"discrete(" + std::to_string(n) + ")", discrete_category(n)});
    for (std::size_t n = 2; n <= bounds.max_category; ++n)
      out.categories.push_back({"codiscrete(" + std::to_string(n) + ")", codiscrete_category(n)});
    if (bounds.max_category >= 2) out.categories.push_back({"arrow", arrow_category()});
    out.categories.push_back({"Z/2", cyclic_group_category(2)});
    if (bounds.max_category >= 4)
      out.categories.push_back({"square", product_category(arrow_category(), arrow_category()).category});

    std::vector<Named<CatCorrespondence>> cats;
    for (const auto& mid : out.categories)
      for (const auto& a : out.categories)
        for (const auto& b : out.categories) {
          if (mid.value->object_count() + a.value->object_count() + b.value->object_count() > 9) continue;
          auto fs = all_functors(mid.value, a.value, budget);
          auto gs = all_functors(mid.value, b.value, budget);
          for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < gs.size(); ++j)
              cats.push_back({a.name + " <- " + mid.name + " -> " + b.name + " #" + std::to_string(i) + "," +
                                  std::to_string(j),
                              {a.value, b.value, mid.value, fs[i], gs[j]}});
        }
    sample(cats, 300, rng);
    out.cat_correspondences = std::move(cats);
    for (const auto& a : out.categories)
      for (const auto& b : out.categories) {
        if (a.value->object_count() + b.value->object_count() > 6) continue;
        std::size_t k = 0;
        for (const auto& phi : all_functors(a.value, b.value, budget))
          out.cat_correspondences.push_back({"graph " + a.name + " -> " + b.name + " #" + std::to_string(k++),
                                             graph(phi, budget).corr});
      }
  }
  return out;
}

}  // namespace ringoid
