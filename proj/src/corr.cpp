#include "ringoid/corr.hpp"

#include <algorithm>
#include <set>

namespace ringoid {

namespace {

bool same_ends(const DGCorrespondence& a, const DGCorrespondence& b) { return *a.R1 == *b.R1 && *a.R2 == *b.R2; }

// x ↦ (f1 x, g1 x) into I1 × I2.
std::vector<Elem> pairing(const DGCorrespondence& c) {
  const std::size_t n2 = c.R2->module_size();
  std::vector<Elem> out(c.R12->module_size());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = pair_index(c.f.deg1(static_cast<Elem>(x)), c.g.deg1(static_cast<Elem>(x)), n2);
  return out;
}

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

void require_admissible(const DGCorrespondence& c, const char* what) {
  if (classify(c) != CorrClass::admissible) throw PreconditionError(std::string(what) + ": correspondence is not admissible");
}

}  // namespace

ValidationReport validate_correspondence(const DGCorrespondence& c) {
  ValidationReport rep;
  if (!(*c.f.source == *c.R12) || !(*c.g.source == *c.R12) || !(*c.f.target == *c.R1) || !(*c.g.target == *c.R2)) {
    rep.add("shape", {}, "legs do not match the objects");
    return rep;
  }
  rep.merge(validate_quasi_ideal(*c.R1), "R1/");
  rep.merge(validate_quasi_ideal(*c.R2), "R2/");
  rep.merge(validate_quasi_ideal(*c.R12), "R12/");
  rep.merge(validate_qmorphism(c.f), "f/");
  rep.merge(validate_qmorphism(c.g), "g/");
  return rep;
}

const char* to_string(CorrClass k) {
  switch (k) {
    case CorrClass::plain: return "plain";
    case CorrClass::equivalence_leg: return "equivalence-leg";
    case CorrClass::anamorphism: return "anamorphism";
    case CorrClass::weakly_admissible: return "weakly-admissible";
    case CorrClass::admissible: return "admissible";
  }
  return "?";
}

CorrClass classify(const DGCorrespondence& c) {
  if (!is_quasi_iso(c.f).ok()) return CorrClass::plain;
  const std::size_t target = c.R1->module_size() * c.R2->module_size();
  auto p = pairing(c);
  if (is_bijective(p, target)) return CorrClass::admissible;
  if (is_surjective(p, target)) return CorrClass::weakly_admissible;
  if (is_surjective(c.f)) return CorrClass::anamorphism;
  return CorrClass::equivalence_leg;
}

DGCorrespondence graph_corr(const QMorphism& m) { return {m.source, m.target, m.source, identity_qmorphism(m.source), m}; }

ValidationReport validate_butterfly(const Butterfly& b) {
  ValidationReport rep;
  const auto& k = *b.K;
  const auto& r1 = *b.R1;
  const auto& r2 = *b.R2;
  if (b.f0.size() != k.size() || b.g0.size() != k.size() || b.h1.size() != r1.module_size() ||
      b.h2.size() != r2.module_size()) {
    rep.add("shape", {}, "butterfly maps have wrong length");
    return rep;
  }
  auto in_range = [](const std::vector<Elem>& m, std::size_t n) {
    return std::all_of(m.begin(), m.end(), [n](Elem e) { return e >= 0 && static_cast<std::size_t>(e) < n; });
  };
  if (!in_range(b.f0, r1.ring_size()) || !in_range(b.g0, r2.ring_size()) || !in_range(b.h1, k.size()) ||
      !in_range(b.h2, k.size())) {
    rep.add("shape", {}, "butterfly map value out of range");
    return rep;
  }
  rep.merge(validate_ring_hom({b.K, r1.ring, b.f0}), "f0/");
  rep.merge(validate_ring_hom({b.K, r2.ring, b.g0}), "g0/");
  const auto n1 = static_cast<Elem>(r1.module_size());
  const auto n2 = static_cast<Elem>(r2.module_size());
  const auto nk = static_cast<Elem>(k.size());
  [&] {
    for (Elem x = 0; x < n1; ++x)
      if (b.f0[b.h1[x]] != r1.diff(x)) return rep.add("f0-h1", {x}, "f0 h1 != d1");
  }();
  [&] {
    for (Elem y = 0; y < n2; ++y)
      if (b.g0[b.h2[y]] != r2.diff(y)) return rep.add("g0-h2", {y}, "g0 h2 != d2");
  }();
  [&] {
    for (Elem x = 0; x < n1; ++x)
      for (Elem x2 = 0; x2 < n1; ++x2)
        if (b.h1[r1.I().add(x, x2)] != k.add(b.h1[x], b.h1[x2])) return rep.add("h1-additive", {x, x2});
  }();
  [&] {
    for (Elem y = 0; y < n2; ++y)
      for (Elem y2 = 0; y2 < n2; ++y2)
        if (b.h2[r2.I().add(y, y2)] != k.add(b.h2[y], b.h2[y2])) return rep.add("h2-additive", {y, y2});
  }();
  [&] {
    for (Elem a = 0; a < nk; ++a)
      for (Elem x = 0; x < n1; ++x)
        if (b.h1[r1.act(b.f0[a], x)] != k.mul(a, b.h1[x])) return rep.add("h1-linear", {a, x});
  }();
  [&] {
    for (Elem a = 0; a < nk; ++a)
      for (Elem y = 0; y < n2; ++y)
        if (b.h2[r2.act(b.g0[a], y)] != k.mul(a, b.h2[y])) return rep.add("h2-linear", {a, y});
  }();
  [&] {
    for (Elem x = 0; x < n1; ++x)
      if (b.g0[b.h1[x]] != r2.C().zero()) return rep.add("complex", {x}, "g0 h1 != 0");
  }();
  [&] {
    for (Elem y = 0; y < n2; ++y)
      for (Elem y2 = y + 1; y2 < n2; ++y2)
        if (b.h2[y] == b.h2[y2]) return rep.add("h2-injective", {y, y2});
  }();
  [&] {
    std::vector<char> in_image(k.size(), 0);
    for (Elem e : b.h2) in_image[e] = 1;
    for (Elem a = 0; a < nk; ++a)
      if (static_cast<bool>(in_image[a]) != (b.f0[a] == r1.C().zero())) return rep.add("exact", {a}, "Im h2 != Ker f0");
  }();
  [&] {
    std::vector<char> hit(r1.ring_size(), 0);
    for (Elem e : b.f0) hit[e] = 1;
    for (std::size_t c = 0; c < hit.size(); ++c)
      if (!hit[c]) return rep.add("f0-surjective", {static_cast<Elem>(c)});
  }();
  return rep;
}

Butterfly to_butterfly(const DGCorrespondence& c) {
  require_admissible(c, "to_butterfly");
  const auto& r1 = *c.R1;
  const auto& r2 = *c.R2;
  auto p = pairing(c);
  std::vector<Elem> inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<Elem>(x);
  const std::size_t n2 = r2.module_size();
  std::vector<Elem> h1(r1.module_size()), h2(n2);
  for (std::size_t x = 0; x < h1.size(); ++x)
    h1[x] = c.R12->diff(inv[pair_index(static_cast<Elem>(x), r2.I().zero(), n2)]);
  for (std::size_t y = 0; y < n2; ++y) h2[y] = c.R12->diff(inv[pair_index(r1.I().zero(), static_cast<Elem>(y), n2)]);
  return {c.R1, c.R2, c.R12->ring, c.f.ring_part, c.g.ring_part, std::move(h1), std::move(h2)};
}

DGCorrespondence from_butterfly(const Butterfly& b) {
  const auto& r1 = *b.R1;
  const auto& r2 = *b.R2;
  const auto& k = *b.K;
  const std::size_t n1 = r1.module_size(), n2 = r2.module_size(), n = n1 * n2, nk = k.size();
  std::vector<Elem> action(nk * n), d(n), p1(n), p2(n);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<Elem>(x / n2);
    p2[x] = static_cast<Elem>(x % n2);
    d[x] = k.add(b.h1[p1[x]], b.h2[p2[x]]);
  }
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t x = 0; x < n; ++x)
      action[a * n + x] = pair_index(r1.act(b.f0[a], p1[x]), r2.act(b.g0[a], p2[x]), n2);
  FiniteModule module(b.K, direct_sum(r1.I().group(), r2.I().group()), std::move(action));
  auto mid = make_quasi_ideal(b.K, std::move(module), std::move(d));
  return {b.R1, b.R2, mid, {mid, b.R1, b.f0, std::move(p1)}, {mid, b.R2, b.g0, std::move(p2)}};
}

ValidationReport validate_corr_morphism(const CorrMorphism& m) {
  ValidationReport rep;
  if (!same_ends(m.source, m.target)) {
    rep.add("ends", {}, "correspondences have different ends");
    return rep;
  }
  rep.merge(validate_qmorphism(m.h), "h/");
  if (!rep.ok()) return rep;
  if (!compose(m.h, m.target.f).same_maps(m.source.f)) rep.add("over-first-end", {});
  if (!compose(m.h, m.target.g).same_maps(m.source.g)) rep.add("over-second-end", {});
  return rep;
}

CorrMorphism identity_corr_morphism(const DGCorrespondence& c) { return {c, c, identity_qmorphism(c.R12)}; }

CorrMorphism compose(const CorrMorphism& first, const CorrMorphism& second) {
  return {first.source, second.target, compose(first.h, second.h)};
}

bool is_iso(const CorrMorphism& m) { return is_bijective(m.h); }

void enumerate_corr_morphisms(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget,
                              const std::function<bool(const CorrMorphism&)>& visit) {
  if (!same_ends(a, b)) throw PreconditionError("correspondences have different ends");
  QMorphismConstraints k;
  k.ring_allowed = [&](Elem c, Elem img) {
    return b.f.deg0(img) == a.f.deg0(c) && b.g.deg0(img) == a.g.deg0(c);
  };
  k.module_allowed = [&](const std::vector<Elem>&, Elem x, Elem img) {
    return b.f.deg1(img) == a.f.deg1(x) && b.g.deg1(img) == a.g.deg1(x);
  };
  enumerate_qmorphisms(a.R12, b.R12, k, budget, [&](const QMorphism& h) { return visit(CorrMorphism{a, b, h}); });
}

std::vector<CorrMorphism> all_corr_morphisms(const DGCorrespondence& a, const DGCorrespondence& b,
                                             const Budget& budget) {
  std::vector<CorrMorphism> out;
  enumerate_corr_morphisms(a, b, budget, [&](const CorrMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

IsoSearch iso_search(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget) {
  IsoSearch out;
  enumerate_corr_morphisms(a, b, budget, [&](const CorrMorphism& m) {
    ++out.morphisms;
    if (is_iso(m)) {
      ++out.isomorphisms;
      if (!out.iso) out.iso = m;
    } else {
      out.all_invertible = false;
    }
    return true;
  });
  return out;
}

DGCorrespondence compose(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget) {
  if (!(*a.R2 == *b.R1)) throw PreconditionError("correspondences are not composable");
  QFiberProduct fp = fiber_product(a.g, b.f, budget);
  return {a.R1, b.R2, fp.object, compose(fp.first, a.f), compose(fp.second, b.g)};
}

AdmResult admissibilize(const DGCorrespondence& c, const Budget& budget) {
  auto qi = is_quasi_iso(c.f);
  if (!qi.ok()) throw PreconditionError("admissibilize: first leg is not a quasi-isomorphism: " + qi.failure, qi.witness);
  const auto& r12 = *c.R12;
  const auto& c12 = r12.C();
  QProduct L = product(c.R1, c.R2, budget);
  const auto& lq = *L.object;
  const auto& il = lq.I();
  const std::size_t nl = il.size(), n2c = c.R2->ring_size(), n2i = c.R2->module_size();
  std::vector<Elem> phi0(r12.ring_size()), phi1(r12.module_size());
  for (std::size_t r = 0; r < phi0.size(); ++r)
    phi0[r] = pair_index(c.f.deg0(static_cast<Elem>(r)), c.g.deg0(static_cast<Elem>(r)), n2c);
  for (std::size_t x = 0; x < phi1.size(); ++x)
    phi1[x] = pair_index(c.f.deg1(static_cast<Elem>(x)), c.g.deg1(static_cast<Elem>(x)), n2i);

  Budget squared = budget;
  squared.max_carrier = budget.max_carrier * budget.max_carrier;
  squared.check_carrier(c12.size() * nl, "pushout group");
  AbelianGroup G = direct_sum(c12.additive(), il.group());
  auto split = [nl](Elem e) { return std::pair{static_cast<Elem>(e / static_cast<Elem>(nl)), static_cast<Elem>(e % static_cast<Elem>(nl))}; };
  auto product_in_G = [&](Elem a, Elem b) {
    auto [r, y] = split(a);
    auto [r2, y2] = split(b);
    Elem z = il.add(il.add(lq.act(phi0[r], y2), lq.act(phi0[r2], y)), lq.act(lq.diff(y), y2));
    return pair_index(c12.mul(r, r2), z, nl);
  };
  auto act_of = [&](Elem a, Elem z) {
    auto [r, y] = split(a);
    return il.add(lq.act(phi0[r], z), lq.act(lq.diff(y), z));
  };

  std::vector<Elem> N;
  for (std::size_t x = 0; x < r12.module_size(); ++x)
    N.push_back(pair_index(r12.diff(static_cast<Elem>(x)), il.neg(phi1[x]), nl));
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  if (!is_subgroup(G, N)) throw PreconditionError("relations do not form a subgroup");
  auto in_N = index_of_subset(G.size(), N);
  for (Elem n : N) {
    for (std::size_t a = 0; a < G.size(); ++a)
      if (in_N[product_in_G(n, static_cast<Elem>(a))] == kNone)
        throw PreconditionError("product is not well defined on the quotient", {n, static_cast<Elem>(a)});
    for (std::size_t z = 0; z < nl; ++z)
      if (act_of(n, static_cast<Elem>(z)) != il.zero())
        throw PreconditionError("action is not well defined on the quotient", {n, static_cast<Elem>(z)});
  }

  GroupQuotient Q = quotient_group(G, N);
  const std::size_t k = Q.group.size();
  budget.check_carrier(k, "admissibilization");
  std::vector<Elem> mul(k * k), action(k * nl), dt(nl), chi0(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) mul[i * k + j] = Q.projection[product_in_G(Q.representative[i], Q.representative[j])];
    for (std::size_t z = 0; z < nl; ++z) action[i * nl + z] = act_of(Q.representative[i], static_cast<Elem>(z));
    auto [r, y] = split(Q.representative[i]);
    chi0[i] = lq.C().add(phi0[r], lq.diff(y));
  }
  for (std::size_t y = 0; y < nl; ++y) dt[y] = Q.projection[pair_index(c12.zero(), static_cast<Elem>(y), nl)];
  auto ring = make_ring(Q.group, std::move(mul), Q.projection[pair_index(c12.one(), il.zero(), nl)]);
  require_valid(validate_ring(*ring), "admissibilization ring");
  auto mid = make_quasi_ideal(ring, FiniteModule(ring, il.group(), std::move(action)), std::move(dt));

  QMorphism chi{mid, L.object, chi0, identity_map(nl)};
  DGCorrespondence adm{c.R1, c.R2, mid, compose(chi, L.first), compose(chi, L.second)};
  std::vector<Elem> psi0(r12.ring_size());
  for (std::size_t r = 0; r < psi0.size(); ++r) psi0[r] = Q.projection[pair_index(static_cast<Elem>(r), il.zero(), nl)];
  CorrMorphism unit{c, adm, {c.R12, mid, std::move(psi0), phi1}};
  return {std::move(adm), std::move(unit), std::move(chi)};
}

namespace {

// Does d restrict to a bijection from `degree1` onto `degree0`?
bool acyclic(const QuasiIdeal& q, const std::vector<Elem>& degree1, const std::vector<Elem>& degree0) {
  if (degree1.size() != degree0.size()) return false;
  std::set<Elem> image;
  for (Elem x : degree1) image.insert(q.diff(x));
  return image.size() == degree0.size() && std::equal(image.begin(), image.end(), degree0.begin());
}

}  // namespace

WeakAdmResult admissibilize_weak(const DGCorrespondence& c) {
  auto cls = classify(c);
  if (cls != CorrClass::weakly_admissible && cls != CorrClass::admissible)
    throw PreconditionError("admissibilize_weak: correspondence is not weakly admissible");
  const auto& r = *c.R12;
  const auto& m = r.I();
  std::vector<Elem> gens;
  for (std::size_t x = 0; x < r.module_size(); ++x)
    if (c.f.deg1(static_cast<Elem>(x)) == c.R1->I().zero() && c.g.deg1(static_cast<Elem>(x)) == c.R2->I().zero())
      gens.push_back(static_cast<Elem>(x));

  // Close under d, multiplication by C12, and the action of the degree 0 part on I12.
  std::vector<Elem> j1 = submodule_generated(m, gens), j0;
  for (;;) {
    std::vector<Elem> images;
    for (Elem x : j1) images.push_back(r.diff(x));
    j0 = ideal_generated(r.ring, images).elements;
    std::vector<Elem> more = j1;
    for (Elem a : j0)
      for (std::size_t x = 0; x < r.module_size(); ++x) more.push_back(r.act(a, static_cast<Elem>(x)));
    auto next = submodule_generated(m, more);
    if (next == j1) break;
    j1 = std::move(next);
  }
  for (Elem a : j0)
    if (c.f.deg0(a) != c.R1->C().zero() || c.g.deg0(a) != c.R2->C().zero())
      throw PreconditionError("legs do not vanish on the generated ideal", {a});
  for (Elem x : j1)
    if (c.f.deg1(x) != c.R1->I().zero() || c.g.deg1(x) != c.R2->I().zero())
      throw PreconditionError("legs do not vanish on the generated ideal", {x});

  WeakAdmResult out;
  out.ideal_degree0 = j0;
  out.ideal_degree1 = j1;
  out.f_surjective = is_surjective(c.f);
  std::vector<Elem> kf0, kf1;
  for (std::size_t a = 0; a < r.ring_size(); ++a)
    if (c.f.deg0(static_cast<Elem>(a)) == c.R1->C().zero()) kf0.push_back(static_cast<Elem>(a));
  for (std::size_t x = 0; x < r.module_size(); ++x)
    if (c.f.deg1(static_cast<Elem>(x)) == c.R1->I().zero()) kf1.push_back(static_cast<Elem>(x));
  out.kernel_acyclic = acyclic(r, kf1, kf0);
  out.ideal_acyclic = acyclic(r, j1, j0);
  if (!out.f_surjective || !out.kernel_acyclic || !out.ideal_acyclic)
    throw PreconditionError("weak admissibilization: surjectivity or acyclicity fails");

  QuotientRing qr = quotient_ring(make_ideal(r.ring, j0));
  QuotientModule qm = quotient_module(m, j1);
  const std::size_t nk = qr.ring->size(), nq = qm.module.size();
  std::vector<Elem> action(nk * nq), d(nq), f0(nk), g0(nk), f1(nq), g1(nq);
  for (std::size_t a = 0; a < nk; ++a) {
    for (std::size_t u = 0; u < nq; ++u)
      action[a * nq + u] = qm.projection[r.act(qr.representative[a], qm.representative[u])];
    f0[a] = c.f.deg0(qr.representative[a]);
    g0[a] = c.g.deg0(qr.representative[a]);
  }
  for (std::size_t u = 0; u < nq; ++u) {
    d[u] = qr.projection(r.diff(qm.representative[u]));
    f1[u] = c.f.deg1(qm.representative[u]);
    g1[u] = c.g.deg1(qm.representative[u]);
  }
  auto mid = make_quasi_ideal(qr.ring, FiniteModule(qr.ring, qm.module.group(), std::move(action)), std::move(d));
  out.admissible = {c.R1, c.R2, mid, {mid, c.R1, std::move(f0), std::move(f1)}, {mid, c.R2, std::move(g0), std::move(g1)}};
  out.unit = {c, out.admissible, {c.R12, mid, qr.projection.map, qm.projection}};
  return out;
}

AdmOfHom adm_of_hom(const QMorphism& m, const Budget& budget) {
  const auto& r1 = *m.source;
  const auto& r2 = *m.target;
  const auto& c1 = r1.C();
  const auto& i2 = r2.I();
  const std::size_t n2 = i2.size(), n = c1.size() * n2;
  budget.check_carrier(n, "adm_of_hom");
  auto split = [n2](std::size_t e) { return std::pair{static_cast<Elem>(e / n2), static_cast<Elem>(e % n2)}; };
  std::vector<Elem> mul(n * n), f0(n), g0(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [x, y] = split(a);
    f0[a] = x;
    g0[a] = r2.C().add(m.deg0(x), r2.diff(y));
    for (std::size_t b = 0; b < n; ++b) {
      auto [x2, y2] = split(b);
      Elem z = i2.add(i2.add(i2.act(m.deg0(x), y2), i2.act(m.deg0(x2), y)), i2.act(r2.diff(y), y2));
      mul[a * n + b] = pair_index(c1.mul(x, x2), z, n2);
    }
  }
  auto K = make_ring(direct_sum(c1.additive(), i2.group()), std::move(mul), pair_index(c1.one(), i2.zero(), n2));
  std::vector<Elem> h1(r1.module_size()), h2(n2);
  for (std::size_t z = 0; z < h1.size(); ++z)
    h1[z] = pair_index(r1.diff(static_cast<Elem>(z)), i2.neg(m.deg1(static_cast<Elem>(z))), n2);
  for (std::size_t y = 0; y < n2; ++y) h2[y] = pair_index(c1.zero(), static_cast<Elem>(y), n2);
  Butterfly b{m.source, m.target, K, std::move(f0), std::move(g0), std::move(h1), std::move(h2)};
  DGCorrespondence corr = from_butterfly(b);

  std::vector<Elem> s0(c1.size()), s1(r1.module_size());
  for (std::size_t x = 0; x < s0.size(); ++x) s0[x] = pair_index(static_cast<Elem>(x), i2.zero(), n2);
  for (std::size_t z = 0; z < s1.size(); ++z) s1[z] = pair_index(static_cast<Elem>(z), m.deg1(static_cast<Elem>(z)), n2);
  QMorphism s{m.source, corr.R12, std::move(s0), std::move(s1)};
  Splitting dist{s, compose(s, corr.g)};
  return {std::move(corr), std::move(b), std::move(dist)};
}

SplittingReport splittings(const DGCorrespondence& c, const Budget& budget) {
  require_admissible(c, "splittings");
  SplittingReport out;
  QMorphismConstraints k;
  k.ring_allowed = [&](Elem a, Elem img) { return c.f.deg0(img) == a; };
  k.module_allowed = [&](const std::vector<Elem>&, Elem x, Elem img) { return c.f.deg1(img) == x; };
  enumerate_qmorphisms(c.R1, c.R12, k, budget, [&](const QMorphism& s) {
    out.full.push_back({s, compose(s, c.g)});
    return true;
  });
  enumerate_ring_homs(c.R1->ring, c.R12->ring, [&](Elem a, Elem img) { return c.f.deg0(img) == a; }, budget,
                      [&](const RingHom& h) {
                        out.degree0.push_back(h);
                        return true;
                      });
  std::vector<char> hit(out.degree0.size(), 0);
  bool injective = true;
  for (const auto& s : out.full) {
    auto it = std::find_if(out.degree0.begin(), out.degree0.end(),
                           [&](const RingHom& h) { return h.map == s.s.ring_part; });
    if (it == out.degree0.end()) {
      injective = false;
      continue;
    }
    auto i = static_cast<std::size_t>(it - out.degree0.begin());
    if (hit[i]) injective = false;
    hit[i] = 1;
  }
  out.restriction_bijective = injective && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  return out;
}

DGCorrespondence invert(const DGCorrespondence& c) {
  require_admissible(c, "invert");
  auto qi = is_quasi_iso(c.g);
  if (!qi.ok()) throw PreconditionError("invert: second leg is not a quasi-isomorphism: " + qi.failure, qi.witness);
  return {c.R2, c.R1, c.R12, c.g, c.f};
}

DGCorrespondence an_compose(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget) {
  return admissibilize(compose(a, b, budget), budget).admissible;
}

CorrMorphism adm_map(const CorrMorphism& h, const AdmResult& source, const AdmResult& target, const Budget& budget) {
  QMorphism want = compose(h.h, target.unit.h);
  std::optional<CorrMorphism> found;
  std::size_t count = 0;
  enumerate_corr_morphisms(source.admissible, target.admissible, budget, [&](const CorrMorphism& u) {
    if (compose(source.unit.h, u.h).same_maps(want)) {
      ++count;
      if (!found) found = u;
    }
    return true;
  });
  if (count != 1) throw PreconditionError("no unique factorization through the unit", {static_cast<Elem>(count)});
  return *found;
}

AdjunctionCheck check_adjunction(const AdmResult& adm, const DGCorrespondence& a, const Budget& budget) {
  AdjunctionCheck out;
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> original, restricted;
  enumerate_corr_morphisms(adm.unit.source, a, budget, [&](const CorrMorphism& m) {
    original.insert({m.h.ring_part, m.h.module_part});
    return true;
  });
  out.from_original = original.size();
  enumerate_corr_morphisms(adm.admissible, a, budget, [&](const CorrMorphism& u) {
    ++out.from_adm;
    QMorphism r = compose(adm.unit.h, u.h);
    restricted.insert({r.ring_part, r.module_part});
    return true;
  });
  out.bijective = restricted.size() == out.from_adm && restricted == original;
  return out;
}

namespace {

std::size_t table_hash(const QuasiIdeal& q) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](const std::vector<Elem>& v) {
    for (Elem e : v) h = (h ^ static_cast<std::size_t>(e + 1)) * 1099511628211ull;
    h = (h ^ 0xffu) * 1099511628211ull;
  };
  mix(q.C().additive().add_table());
  mix(q.C().mul_table());
  mix(q.I().group().add_table());
  mix(q.I().action_table());
  mix(q.d);
  return h;
}

}  // namespace

const DGCorrespondence& IdentityCache::get(const QuasiIdealRef& q, const Budget& budget) {
  auto& bucket = cells_[table_hash(*q)];
  for (const auto& [key, cell] : bucket)
    if (*key == *q) return cell;
  bucket.emplace_back(q, adm_of_hom(identity_qmorphism(q), budget).corr);
  return bucket.back().second;
}

namespace {

void record_iso(CoherenceReport& out, const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget,
                Elem triple, Elem check, const char* law) {
  ++out.checks;
  auto search = iso_search(a, b, budget);
  if (!search.found()) {
    out.report.add(law, {triple, check}, "no isomorphism");
    return;
  }
  if (!search.all_invertible) out.report.add("groupoid", {triple, check}, "non-invertible morphism between admissibles");
  auto aut = iso_search(b, b, budget);
  if (search.isomorphisms != aut.isomorphisms)
    out.report.add("iso-torsor", {triple, check}, "isomorphisms do not match automorphisms of the target");
  if (search.unique()) ++out.literal_unique;
}

}  // namespace

CoherenceReport coherence_suite(const std::vector<CorrTriple>& sample, const CoherenceOptions& options) {
  CoherenceReport out;
  const Budget& budget = options.budget;
  CorrComposer fiber = options.compose ? options.compose
                                       : CorrComposer([&budget](const DGCorrespondence& a, const DGCorrespondence& b) {
                                           return compose(a, b, budget);
                                         });
  auto an = [&](const DGCorrespondence& a, const DGCorrespondence& b) {
    return admissibilize(fiber(a, b), budget).admissible;
  };
  IdentityCache ids;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto t = static_cast<Elem>(i);
    const auto& [alpha, beta, gamma] = sample[i];
    try {
      auto adm_alpha = admissibilize(alpha, budget).admissible;
      auto adm_beta = admissibilize(beta, budget).admissible;
      auto adm_gamma = admissibilize(gamma, budget).admissible;
      record_iso(out, an(alpha, beta), an(adm_alpha, adm_beta), budget, t, 0, "adm-of-composite");
      record_iso(out, an(an(adm_alpha, adm_beta), adm_gamma), an(adm_alpha, an(adm_beta, adm_gamma)), budget, t, 1,
                 "associativity");
      record_iso(out, an(ids.get(alpha.R1, budget), adm_alpha), adm_alpha, budget, t, 2, "left-identity");
      record_iso(out, an(adm_alpha, ids.get(alpha.R2, budget)), adm_alpha, budget, t, 3, "right-identity");
    } catch (const RingoidError& e) {
      out.report.add("construction", {t}, e.what());
    }
  }
  return out;
}

CoherenceReport functoriality_suite(const std::vector<std::pair<QMorphism, QMorphism>>& pairs, const Budget& budget) {
  CoherenceReport out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [phi, psi] = pairs[i];
    try {
      auto lhs = adm_of_hom(compose(phi, psi), budget).corr;
      auto rhs = an_compose(adm_of_hom(phi, budget).corr, adm_of_hom(psi, budget).corr, budget);
      record_iso(out, lhs, rhs, budget, static_cast<Elem>(i), 0, "functoriality");
    } catch (const RingoidError& e) {
      out.report.add("construction", {static_cast<Elem>(i)}, e.what());
    }
  }
  return out;
}

}  // namespace ringoid
