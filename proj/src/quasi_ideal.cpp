#include "ringoid/quasi_ideal.hpp"

#include <algorithm>

#include "ringoid/search.hpp"

namespace ringoid {

QuasiIdealRef make_quasi_ideal(RingRef ring, FiniteModule module, std::vector<Elem> d) {
  if (!ring) throw MalformedInput("quasi-ideal without a ring");
  if (!(*module.base() == *ring)) throw MalformedInput("module is over a different ring");
  if (d.size() != module.size()) throw MalformedInput("differential has wrong length");
  for (Elem e : d)
    if (e < 0 || static_cast<std::size_t>(e) >= ring->size()) throw MalformedInput("differential value out of range");
  return std::make_shared<const QuasiIdeal>(QuasiIdeal{std::move(ring), std::move(module), std::move(d)});
}

QuasiIdealRef discrete_quasi_ideal(const RingRef& ring) {
  return make_quasi_ideal(ring, zero_module(ring), {ring->zero()});
}

ValidationReport validate_quasi_ideal(const QuasiIdeal& q) {
  require_valid(validate_ring(q.C()), "ring of a quasi-ideal");
  require_valid(validate_module(q.I()), "module of a quasi-ideal");
  ValidationReport rep;
  const auto& c = q.C();
  const auto& m = q.I();
  const auto nc = static_cast<Elem>(c.size());
  const auto nm = static_cast<Elem>(m.size());
  [&] {
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        if (q.diff(m.add(x, y)) != c.add(q.diff(x), q.diff(y))) return rep.add("d-additive", {x, y});
  }();
  [&] {
    for (Elem a = 0; a < nc; ++a)
      for (Elem x = 0; x < nm; ++x)
        if (q.diff(m.act(a, x)) != c.mul(a, q.diff(x))) return rep.add("d-linear", {a, x});
  }();
  [&] {
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        if (m.act(q.diff(x), y) != m.act(q.diff(y), x))
          return rep.add("quasi-ideal-law", {x, y}, "d(x)·y != d(y)·x");
  }();
  return rep;
}

namespace {

// Homogeneous elements of the graded ring C ⊕ I[1] with zero in degrees
// -2 and 1. `degree` is 0 or -1; other degrees only occur as zero.
struct Graded {
  int degree;
  Elem value;  // kNone encodes the zero of a vanishing degree
};

struct DGView {
  const QuasiIdeal& q;

  Graded zero_in(int degree) const {
    if (degree == 0) return {0, q.C().zero()};
    if (degree == -1) return {-1, q.I().zero()};
    return {degree, kNone};
  }
  Graded mul(Graded a, Graded b) const {
    const int deg = a.degree + b.degree;
    if (a.value == kNone || b.value == kNone) return zero_in(deg);
    if (a.degree == 0 && b.degree == 0) return {0, q.C().mul(a.value, b.value)};
    if (a.degree == 0 && b.degree == -1) return {-1, q.I().act(a.value, b.value)};
    // Graded commutativity: x·c = (-1)^{0} c·x.
    if (a.degree == -1 && b.degree == 0) return {-1, q.I().act(b.value, a.value)};
    return zero_in(deg);
  }
  Graded add(Graded a, Graded b) const {
    if (a.value == kNone) return b;
    if (b.value == kNone) return a;
    if (a.degree == 0) return {0, q.C().add(a.value, b.value)};
    return {-1, q.I().add(a.value, b.value)};
  }
  Graded negate(Graded a) const {
    if (a.value == kNone) return a;
    if (a.degree == 0) return {0, q.C().neg(a.value)};
    return {-1, q.I().neg(a.value)};
  }
  Graded differential(Graded a) const {
    if (a.degree == -1 && a.value != kNone) return {0, q.diff(a.value)};
    return zero_in(a.degree + 1);
  }
  static bool same(Graded a, Graded b) { return a.degree == b.degree && a.value == b.value; }
};

}  // namespace

ValidationReport dg_leibniz_report(const QuasiIdeal& q) {
  ValidationReport rep;
  DGView v{q};
  // Homogeneous elements, numbered C first, then I after an offset of |C|.
  std::vector<Graded> elems;
  for (std::size_t c = 0; c < q.ring_size(); ++c) elems.push_back({0, static_cast<Elem>(c)});
  for (std::size_t x = 0; x < q.module_size(); ++x) elems.push_back({-1, static_cast<Elem>(x)});
  const auto n = static_cast<Elem>(elems.size());
  [&] {
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) {
        Graded a = elems[i], b = elems[j];
        if (a.degree != b.degree) continue;
        Graded lhs = v.differential(v.add(a, b));
        Graded rhs = v.add(v.differential(a), v.differential(b));
        if (!DGView::same(lhs, rhs)) return rep.add("differential-additive", {i, j});
      }
  }();
  [&] {
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) {
        Graded a = elems[i], b = elems[j];
        Graded lhs = v.differential(v.mul(a, b));
        Graded second = v.mul(a, v.differential(b));
        if (a.degree % 2 != 0) second = v.negate(second);
        Graded rhs = v.add(v.mul(v.differential(a), b), second);
        if (!DGView::same(lhs, rhs)) return rep.add("leibniz", {i, j});
      }
  }();
  return rep;
}

Elem derived_product(const QuasiIdeal& q, Elem x, Elem y) { return q.act(q.diff(x), y); }

Ideal image_ideal(const QuasiIdeal& q) {
  std::vector<Elem> im(q.d.begin(), q.d.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return make_ideal(q.ring, std::move(im));
}

std::vector<Elem> kernel_elements(const QuasiIdeal& q) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < q.module_size(); ++x)
    if (q.d[x] == q.C().zero()) out.push_back(static_cast<Elem>(x));
  return out;
}

QuotientRing pi0(const QuasiIdeal& q) { return quotient_ring(image_ideal(q)); }

Pi1 pi1(const QuasiIdeal& q) {
  QuotientRing components = pi0(q);
  auto ker = kernel_elements(q);
  for (Elem z : image_ideal(q).elements)
    for (Elem x : ker)
      if (q.act(z, x) != q.I().zero()) throw PreconditionError("d(I) does not annihilate Ker d", {z, x});
  Submodule sub = make_submodule(q.I(), ker);
  auto label = index_of_subset(q.module_size(), ker);
  const std::size_t nk = ker.size(), np = components.ring->size();
  std::vector<Elem> action(np * nk);
  for (std::size_t k = 0; k < np; ++k)
    for (std::size_t x = 0; x < nk; ++x)
      action[k * nk + x] = label[q.act(components.representative[k], ker[x])];
  FiniteModule module(components.ring, sub.module.group(), std::move(action));
  return {std::move(components), std::move(module), std::move(ker)};
}

ValidationReport validate_qmorphism(const QMorphism& m) {
  ValidationReport rep;
  const auto& s = *m.source;
  const auto& t = *m.target;
  if (m.ring_part.size() != s.ring_size() || m.module_part.size() != s.module_size()) {
    rep.add("shape", {}, "component maps have wrong length");
    return rep;
  }
  for (Elem e : m.ring_part)
    if (e < 0 || static_cast<std::size_t>(e) >= t.ring_size()) {
      rep.add("shape", {e}, "ring part out of range");
      return rep;
    }
  for (Elem e : m.module_part)
    if (e < 0 || static_cast<std::size_t>(e) >= t.module_size()) {
      rep.add("shape", {e}, "module part out of range");
      return rep;
    }
  rep.merge(validate_ring_hom(m.ring_hom()), "ring-part/");
  const auto nc = static_cast<Elem>(s.ring_size());
  const auto nm = static_cast<Elem>(s.module_size());
  [&] {
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        if (m.deg1(s.I().add(x, y)) != t.I().add(m.deg1(x), m.deg1(y))) return rep.add("module-part-additive", {x, y});
  }();
  [&] {
    for (Elem c = 0; c < nc; ++c)
      for (Elem x = 0; x < nm; ++x)
        if (m.deg1(s.act(c, x)) != t.act(m.deg0(c), m.deg1(x))) return rep.add("module-part-linear", {c, x});
  }();
  [&] {
    for (Elem x = 0; x < nm; ++x)
      if (t.diff(m.deg1(x)) != m.deg0(s.diff(x))) return rep.add("commutes-with-d", {x});
  }();
  return rep;
}

QMorphism identity_qmorphism(const QuasiIdealRef& q) {
  std::vector<Elem> r(q->ring_size()), i(q->module_size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<Elem>(k);
  for (std::size_t k = 0; k < i.size(); ++k) i[k] = static_cast<Elem>(k);
  return {q, q, std::move(r), std::move(i)};
}

QMorphism compose(const QMorphism& first, const QMorphism& second) {
  if (!(*first.target == *second.source)) throw PreconditionError("morphisms are not composable");
  std::vector<Elem> r(first.ring_part.size()), i(first.module_part.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = second.deg0(first.ring_part[k]);
  for (std::size_t k = 0; k < i.size(); ++k) i[k] = second.deg1(first.module_part[k]);
  return {first.source, second.target, std::move(r), std::move(i)};
}

bool is_surjective(const QMorphism& m) {
  return is_surjective(m.ring_part, m.target->ring_size()) && is_surjective(m.module_part, m.target->module_size());
}

bool is_bijective(const QMorphism& m) {
  return is_bijective(m.ring_part, m.target->ring_size()) && is_bijective(m.module_part, m.target->module_size());
}

QuasiIsoReport is_quasi_iso(const QMorphism& m) {
  const auto& s = *m.source;
  const auto& t = *m.target;
  QuasiIsoReport rep;
  auto note = [&rep](std::string what, std::vector<Elem> witness) {
    if (rep.failure.empty()) {
      rep.failure = std::move(what);
      rep.witness = std::move(witness);
    }
  };
  // Ker d -> Ker d'. The map is additive, so injective iff no nonzero
  // kernel element goes to zero.
  bool ker_inj = true, ker_surj = true;
  std::vector<char> hit(t.module_size(), 0);
  for (Elem x : kernel_elements(s)) {
    Elem y = m.deg1(x);
    hit[y] = 1;
    if (x != s.I().zero() && y == t.I().zero() && ker_inj) {
      ker_inj = false;
      note("kernel map not injective", {x});
    }
  }
  for (Elem y : kernel_elements(t))
    if (!hit[y]) {
      ker_surj = false;
      note("kernel map not surjective", {y});
      break;
    }
  rep.kernel_bijective = ker_inj && ker_surj;

  // Coker d -> Coker d'.
  auto src_im = index_of_subset(s.ring_size(), image_ideal(s).elements);
  auto tgt_ideal = image_ideal(t).elements;
  auto tgt_im = index_of_subset(t.ring_size(), tgt_ideal);
  bool cok_inj = true, cok_surj = true;
  for (std::size_t c = 0; c < s.ring_size(); ++c)
    if (src_im[c] == kNone && tgt_im[m.deg0(static_cast<Elem>(c))] != kNone) {
      cok_inj = false;
      note("cokernel map not injective", {static_cast<Elem>(c)});
      break;
    }
  std::vector<char> reached(t.ring_size(), 0);
  for (std::size_t c = 0; c < s.ring_size(); ++c)
    for (Elem z : tgt_ideal) reached[t.C().add(m.deg0(static_cast<Elem>(c)), z)] = 1;
  for (std::size_t c = 0; c < t.ring_size(); ++c)
    if (!reached[c]) {
      cok_surj = false;
      note("cokernel map not surjective", {static_cast<Elem>(c)});
      break;
    }
  rep.cokernel_bijective = cok_inj && cok_surj;
  return rep;
}

QuasiIdealRef from_ideal(const Ideal& ideal) {
  require_valid(validate_ideal(*ideal.parent, ideal.elements), "ideal");
  FiniteModule m = ideal_module(ideal);
  return make_quasi_ideal(ideal.parent, std::move(m), ideal.elements);
}

namespace {

// Agreeing pairs of I_a x I_b, labeled in lexicographic order.
struct PairModule {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> label;  // pair_index -> label
  std::size_t nb;

  Elem at(Elem x, Elem y) const { return label[pair_index(x, y, nb)]; }
};

}  // namespace

QFiberProduct fiber_product(const QMorphism& a, const QMorphism& b, const Budget& budget) {
  if (!(*a.target == *b.target)) throw PreconditionError("fiber product needs a common target");
  const auto& qa = *a.source;
  const auto& qb = *b.source;
  FiberProductRing ring = fiber_product_ring(a.ring_hom(), b.ring_hom(), budget);

  PairModule pm{{}, std::vector<Elem>(qa.module_size() * qb.module_size(), kNone), qb.module_size()};
  for (std::size_t x = 0; x < qa.module_size(); ++x)
    for (std::size_t y = 0; y < qb.module_size(); ++y)
      if (a.deg1(static_cast<Elem>(x)) == b.deg1(static_cast<Elem>(y))) {
        pm.label[pair_index(static_cast<Elem>(x), static_cast<Elem>(y), pm.nb)] = static_cast<Elem>(pm.pairs.size());
        pm.pairs.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      }
  const std::size_t k = pm.pairs.size(), nc = ring.ring->size();
  budget.check_carrier(k, "fiber product module");
  std::vector<Elem> add(k * k), action(nc * k), d(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto [x1, y1] = pm.pairs[i];
    for (std::size_t j = 0; j < k; ++j) {
      auto [x2, y2] = pm.pairs[j];
      add[i * k + j] = pm.at(qa.I().add(x1, x2), qb.I().add(y1, y2));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      auto [c1, c2] = ring.pairs[c];
      action[c * k + i] = pm.at(qa.act(c1, x1), qb.act(c2, y1));
    }
    auto it = std::find(ring.pairs.begin(), ring.pairs.end(), std::make_pair(qa.diff(x1), qb.diff(y1)));
    d[i] = static_cast<Elem>(it - ring.pairs.begin());
  }
  FiniteModule module(ring.ring, AbelianGroup(k, std::move(add)), std::move(action));
  auto object = make_quasi_ideal(ring.ring, std::move(module), std::move(d));
  std::vector<Elem> m1(k), m2(k);
  for (std::size_t i = 0; i < k; ++i) {
    m1[i] = pm.pairs[i].first;
    m2[i] = pm.pairs[i].second;
  }
  return {object, {object, a.source, ring.first.map, std::move(m1)}, {object, b.source, ring.second.map, std::move(m2)}};
}

QProduct product(const QuasiIdealRef& a, const QuasiIdealRef& b, const Budget& budget) {
  ProductRing ring = product_ring(a->ring, b->ring, budget);
  const std::size_t na = a->module_size(), nb = b->module_size(), k = na * nb;
  budget.check_carrier(k, "product module");
  const std::size_t ncb = b->ring_size(), nc = ring.ring->size();
  std::vector<Elem> action(nc * k), d(k), m1(k), m2(k);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t x = 0; x < k; ++x) {
      auto c1 = static_cast<Elem>(c / ncb), c2 = static_cast<Elem>(c % ncb);
      action[c * k + x] = pair_index(a->act(c1, static_cast<Elem>(x / nb)), b->act(c2, static_cast<Elem>(x % nb)), nb);
    }
  for (std::size_t x = 0; x < k; ++x) {
    m1[x] = static_cast<Elem>(x / nb);
    m2[x] = static_cast<Elem>(x % nb);
    d[x] = pair_index(a->diff(m1[x]), b->diff(m2[x]), ncb);
  }
  FiniteModule module(ring.ring, direct_sum(a->I().group(), b->I().group()), std::move(action));
  auto object = make_quasi_ideal(ring.ring, std::move(module), std::move(d));
  return {object, {object, a, ring.first.map, std::move(m1)}, {object, b, ring.second.map, std::move(m2)}};
}

void enumerate_qmorphisms(const QuasiIdealRef& source, const QuasiIdealRef& target,
                          const QMorphismConstraints& constraints, const Budget& budget,
                          const std::function<bool(const QMorphism&)>& visit) {
  const auto& s = *source;
  const auto& t = *target;
  SearchCounter counter(budget);
  bool stopped = false;
  enumerate_ring_homs(source->ring, target->ring, constraints.ring_allowed, budget, [&](const RingHom& h) {
    const auto& phi = h.map;
    AdditiveConstraints ac;
    ac.allowed = [&](Elem x, Elem img) {
      if (t.diff(img) != phi[s.diff(x)]) return false;
      return !constraints.module_allowed || constraints.module_allowed(phi, x, img);
    };
    ac.consistent = [&](const std::vector<Elem>& map, std::span<const Elem> fresh) {
      for (Elem x : fresh)
        for (std::size_t c = 0; c < s.ring_size(); ++c) {
          Elem cx = map[s.act(static_cast<Elem>(c), x)];
          if (cx != kNone && cx != t.act(phi[c], map[x])) return false;
        }
      return true;
    };
    enumerate_additive_maps(s.I().group(), t.I().group(), ac, counter, [&](const std::vector<Elem>& map) {
      for (std::size_t c = 0; c < s.ring_size(); ++c)
        for (std::size_t x = 0; x < s.module_size(); ++x)
          if (map[s.act(static_cast<Elem>(c), static_cast<Elem>(x))] != t.act(phi[c], map[x])) return true;
      if (!visit(QMorphism{source, target, phi, map})) stopped = true;
      return !stopped;
    });
    return !stopped;
  });
}

std::vector<QMorphism> all_qmorphisms(const QuasiIdealRef& source, const QuasiIdealRef& target, const Budget& budget) {
  std::vector<QMorphism> out;
  enumerate_qmorphisms(source, target, {}, budget, [&](const QMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<QMorphism> find_isomorphism(const QuasiIdealRef& a, const QuasiIdealRef& b, const Budget& budget) {
  if (a->ring_size() != b->ring_size() || a->module_size() != b->module_size()) return std::nullopt;
  std::optional<QMorphism> found;
  enumerate_qmorphisms(a, b, {}, budget, [&](const QMorphism& m) {
    if (is_bijective(m)) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace ringoid
