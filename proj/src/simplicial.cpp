#include "ringoid/simplicial.hpp"

namespace ringoid {

ValidationReport validate_simplicial(const Trunc1SimpRing& t) {
  ValidationReport rep;
  rep.merge(validate_ring(*t.A0), "A0/");
  rep.merge(validate_ring(*t.A1), "A1/");
  if (t.d0.size() != t.A1->size() || t.d1.size() != t.A1->size() || t.s.size() != t.A0->size()) {
    rep.add("shape", {}, "structure maps have wrong length");
    return rep;
  }
  auto in_range = [](const std::vector<Elem>& map, std::size_t n) {
    for (Elem e : map)
      if (e < 0 || static_cast<std::size_t>(e) >= n) return false;
    return true;
  };
  if (!in_range(t.d0, t.A0->size()) || !in_range(t.d1, t.A0->size()) || !in_range(t.s, t.A1->size())) {
    rep.add("shape", {}, "structure map value out of range");
    return rep;
  }
  if (!rep.ok()) return rep;
  rep.merge(validate_ring_hom(t.face0()), "d0/");
  rep.merge(validate_ring_hom(t.face1()), "d1/");
  rep.merge(validate_ring_hom(t.section()), "s/");
  for (std::size_t a = 0; a < t.A0->size(); ++a)
    if (t.d0[t.s[a]] != static_cast<Elem>(a)) {
      rep.add("d0-section", {static_cast<Elem>(a)});
      break;
    }
  for (std::size_t a = 0; a < t.A0->size(); ++a)
    if (t.d1[t.s[a]] != static_cast<Elem>(a)) {
      rep.add("d1-section", {static_cast<Elem>(a)});
      break;
    }
  return rep;
}

ValidationReport goodness_report(const Trunc1SimpRing& t) {
  ValidationReport rep;
  const auto& a1 = *t.A1;
  const Elem z0 = t.A0->zero();
  for (std::size_t a = 0; a < a1.size(); ++a) {
    if (t.d0[a] != z0) continue;
    for (std::size_t b = 0; b < a1.size(); ++b)
      if (t.d1[b] == z0 && a1.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != a1.zero()) {
        rep.add("goodness", {static_cast<Elem>(a), static_cast<Elem>(b)}, "(Ker d0)·(Ker d1) != 0");
        return rep;
      }
  }
  return rep;
}

bool is_good(const Trunc1SimpRing& t) { return goodness_report(t).ok(); }

Trunc1SimpRing q_to_simplicial(const QuasiIdeal& q, const Budget& budget) {
  const auto& c = q.C();
  const auto& m = q.I();
  const std::size_t nc = c.size(), ni = m.size(), n = nc * ni;
  budget.check_carrier(n, "C × I");
  auto split = [ni](std::size_t e) { return std::pair{static_cast<Elem>(e / ni), static_cast<Elem>(e % ni)}; };
  std::vector<Elem> mul(n * n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) {
      auto [c1, x1] = split(e);
      auto [c2, x2] = split(f);
      Elem x = m.add(m.add(m.act(c1, x2), m.act(c2, x1)), m.act(q.diff(x1), x2));
      mul[e * n + f] = pair_index(c.mul(c1, c2), x, ni);
    }
  auto a1 = make_ring(direct_sum(c.additive(), m.group()), std::move(mul), pair_index(c.one(), m.zero(), ni));
  std::vector<Elem> d0(n), d1(n), s(nc);
  for (std::size_t e = 0; e < n; ++e) {
    auto [ce, xe] = split(e);
    d0[e] = ce;
    d1[e] = c.add(ce, q.diff(xe));
  }
  for (std::size_t a = 0; a < nc; ++a) s[a] = pair_index(static_cast<Elem>(a), m.zero(), ni);
  return {q.ring, a1, std::move(d0), std::move(d1), std::move(s)};
}

QuasiIdealRef simplicial_to_q(const Trunc1SimpRing& t) {
  auto good = goodness_report(t);
  if (!good.ok()) throw PreconditionError("simplicial ring is not good", good.violations.front().witness);
  const auto& a1 = *t.A1;
  std::vector<Elem> ker;
  for (std::size_t e = 0; e < a1.size(); ++e)
    if (t.d0[e] == t.A0->zero()) ker.push_back(static_cast<Elem>(e));
  auto label = index_of_subset(a1.size(), ker);
  const std::size_t nk = ker.size(), nc = t.A0->size();
  std::vector<Elem> action(nc * nk), d(nk);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t x = 0; x < nk; ++x) action[c * nk + x] = label[a1.mul(t.s[c], ker[x])];
  for (std::size_t x = 0; x < nk; ++x) d[x] = t.d1[ker[x]];
  FiniteModule module(t.A0, restrict_group(a1.additive(), ker), std::move(action));
  return make_quasi_ideal(t.A0, std::move(module), std::move(d));
}

std::optional<SimplicialIso> find_simplicial_isomorphism(const Trunc1SimpRing& a, const Trunc1SimpRing& b,
                                                         const Budget& budget) {
  if (a.A0->size() != b.A0->size() || a.A1->size() != b.A1->size()) return std::nullopt;
  std::optional<SimplicialIso> found;
  enumerate_ring_homs(a.A0, b.A0, {}, budget, [&](const RingHom& h0) {
    if (!is_bijective(h0.map, b.A0->size())) return true;
    // Where the section and both faces pin the degree-1 map down.
    std::vector<Elem> pinned(a.A1->size(), kNone);
    for (std::size_t c = 0; c < a.A0->size(); ++c) pinned[a.s[c]] = b.s[h0.map[c]];
    auto allowed = [&](Elem e, Elem img) {
      if (pinned[e] != kNone && pinned[e] != img) return false;
      return b.d0[img] == h0.map[a.d0[e]] && b.d1[img] == h0.map[a.d1[e]];
    };
    enumerate_ring_homs(a.A1, b.A1, allowed, budget, [&](const RingHom& h1) {
      if (!is_bijective(h1.map, b.A1->size())) return true;
      found = SimplicialIso{h0, h1};
      return false;
    });
    return !found;
  });
  return found;
}

}  // namespace ringoid
