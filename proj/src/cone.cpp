#include "ringoid/cone.hpp"

namespace ringoid {

InternalRingGroupoid cone(const QuasiIdeal& q, const Budget& budget) {
  const auto& c = q.C();
  const auto& m = q.I();
  const std::size_t nc = c.size(), ni = m.size(), n = nc * ni;
  budget.check_carrier(n, "cone morphisms");
  auto base = [ni](std::size_t f) { return static_cast<Elem>(f / ni); };
  auto label = [ni](std::size_t f) { return static_cast<Elem>(f % ni); };
  std::vector<Elem> mul(n * n), comp(n * n, kNone), src(n), tgt(n), ident(nc);
  for (std::size_t f = 0; f < n; ++f) {
    src[f] = base(f);
    tgt[f] = c.add(base(f), q.diff(label(f)));
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      Elem c1 = base(f), x1 = label(f), c2 = base(g), x2 = label(g);
      Elem y = m.add(m.add(m.act(c1, x2), m.act(c2, x1)), m.act(q.diff(x2), x1));
      mul[f * n + g] = pair_index(c.mul(c1, c2), y, ni);
      if (tgt[f] == src[g]) comp[f * n + g] = pair_index(c1, m.add(x1, x2), ni);
    }
  for (std::size_t a = 0; a < nc; ++a) ident[a] = pair_index(static_cast<Elem>(a), m.zero(), ni);
  auto mor = make_ring(direct_sum(c.additive(), m.group()), std::move(mul), pair_index(c.one(), m.zero(), ni));
  return {q.ring, mor, std::move(src), std::move(tgt), std::move(ident), std::move(comp)};
}

ValidationReport validate_internal_groupoid(const InternalRingGroupoid& g, const Budget& budget) {
  require_valid(validate_ring(*g.obj), "object ring");
  require_valid(validate_ring(*g.mor), "morphism ring");
  ValidationReport rep;
  const auto no = static_cast<Elem>(g.obj->size());
  const auto nm = static_cast<Elem>(g.mor->size());
  rep.merge(validate_ring_hom({g.mor, g.obj, g.src}), "src/");
  rep.merge(validate_ring_hom({g.mor, g.obj, g.tgt}), "tgt/");
  rep.merge(validate_ring_hom({g.obj, g.mor, g.ident}), "ident/");
  [&] {
    for (Elem a = 0; a < no; ++a)
      if (g.src[g.ident[a]] != a || g.tgt[g.ident[a]] != a) return rep.add("identity-endpoints", {a});
  }();
  [&] {
    for (Elem f = 0; f < nm; ++f)
      for (Elem h = 0; h < nm; ++h)
        if ((g.tgt[f] == g.src[h]) != (g.then(f, h) != kNone)) return rep.add("composition-defined", {f, h});
  }();
  [&] {
    for (Elem f = 0; f < nm; ++f)
      for (Elem h = 0; h < nm; ++h) {
        Elem k = g.then(f, h);
        if (k != kNone && (g.src[k] != g.src[f] || g.tgt[k] != g.tgt[h])) return rep.add("composition-endpoints", {f, h});
      }
  }();
  if (!rep.ok()) return rep;
  [&] {
    for (Elem f = 0; f < nm; ++f)
      if (g.then(g.ident[g.src[f]], f) != f || g.then(f, g.ident[g.tgt[f]]) != f) return rep.add("unit", {f});
  }();
  [&] {
    for (Elem f = 0; f < nm; ++f)
      for (Elem h = 0; h < nm; ++h) {
        Elem fh = g.then(f, h);
        if (fh == kNone) continue;
        for (Elem k = 0; k < nm; ++k) {
          Elem hk = g.then(h, k);
          if (hk != kNone && g.then(fh, k) != g.then(f, hk)) return rep.add("associativity", {f, h, k});
        }
      }
  }();
  [&] {
    for (Elem f = 0; f < nm; ++f) {
      bool found = false;
      for (Elem h = 0; h < nm && !found; ++h)
        found = g.then(f, h) == g.ident[g.src[f]] && g.then(h, f) == g.ident[g.tgt[f]];
      if (!found) return rep.add("invertible", {f});
    }
  }();
  // Composition as a map out of the ring of composable pairs.
  Budget squared = budget;
  squared.max_carrier = budget.max_carrier * budget.max_carrier;
  FiberProductRing pairs = fiber_product_ring({g.mor, g.obj, g.tgt}, {g.mor, g.obj, g.src}, squared);
  std::vector<Elem> comp(pairs.pairs.size());
  for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = g.then(pairs.pairs[p].first, pairs.pairs[p].second);
  auto hom = validate_ring_hom({pairs.ring, g.mor, comp});
  for (const auto& v : hom.violations) {
    // Report witnesses as composable pairs (f, g) rather than labels.
    std::vector<Elem> w;
    for (Elem p : v.witness) {
      w.push_back(pairs.pairs[p].first);
      w.push_back(pairs.pairs[p].second);
    }
    rep.add("composition-ring-hom/" + v.law, std::move(w), v.detail);
  }
  return rep;
}

InternalRingGroupoid groupoid_from_truncation(const Trunc1SimpRing& t) {
  const auto& a1 = *t.A1;
  const std::size_t n = a1.size();
  std::vector<Elem> comp(n * n, kNone), ident = t.s;
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      Elem a = t.d1[f];
      if (a != t.d0[g]) continue;
      comp[f * n + g] = a1.sub(a1.add(static_cast<Elem>(f), static_cast<Elem>(g)), t.s[a]);
    }
  return {t.A0, t.A1, t.d0, t.d1, std::move(ident), std::move(comp)};
}

InternalRingGroupoid composition_from_truncation(const Trunc1SimpRing& t) {
  InternalRingGroupoid g = groupoid_from_truncation(t);
  auto rep = validate_internal_groupoid(g);
  if (rep.ok()) return g;
  auto good = goodness_report(t);
  std::vector<Elem> witness = good.ok() ? rep.violations.front().witness : good.violations.front().witness;
  throw PreconditionError("composition is not a ring homomorphism: " + rep.violations.front().to_string(),
                          std::move(witness));
}

Elem inverse_morphism(const InternalRingGroupoid& g, Elem f) {
  const auto& r = *g.mor;
  return r.sub(r.add(g.ident[g.src[f]], g.ident[g.tgt[f]]), f);
}

CategoryRef underlying_groupoid(const InternalRingGroupoid& g) {
  std::vector<Arrow> arrows(g.mor->size());
  for (std::size_t f = 0; f < arrows.size(); ++f) arrows[f] = {g.src[f], g.tgt[f]};
  return make_category(g.obj->size(), std::move(arrows), g.ident, g.comp);
}

Functor cone_functor(const QMorphism& m, const CategoryRef& source_cone, const CategoryRef& target_cone) {
  const std::size_t ni = m.source->module_size(), nt = m.target->module_size();
  std::vector<Elem> mor(source_cone->morphism_count());
  for (std::size_t f = 0; f < mor.size(); ++f)
    mor[f] = pair_index(m.deg0(static_cast<Elem>(f / ni)), m.deg1(static_cast<Elem>(f % ni)), nt);
  return {source_cone, target_cone, m.ring_part, std::move(mor)};
}

Functor cone_functor(const QMorphism& m) {
  return cone_functor(m, underlying_groupoid(cone(*m.source)), underlying_groupoid(cone(*m.target)));
}

AbelianGroup automorphism_group(const FiniteCategory& c, Elem a) {
  const auto& members = c.hom(a, a);
  const std::size_t k = members.size();
  auto label = index_of_subset(c.morphism_count(), members);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = label[c.then(members[i], members[j])];
  AbelianGroup g(k, std::move(table));
  if (!g.validate().ok()) throw MalformedInput("automorphisms do not form an abelian group");
  return g;
}

}  // namespace ringoid
