#include "ringoid/ring.hpp"

#include <algorithm>

#include "ringoid/search.hpp"

namespace ringoid {

FiniteRing::FiniteRing(AbelianGroup additive, std::vector<Elem> mul, Elem one)
    : additive_(std::move(additive)), mul_(std::move(mul)), one_(one) {
  const std::size_t n = additive_.size();
  if (mul_.size() != n * n) throw MalformedInput("multiplication table has wrong size");
  for (Elem e : mul_)
    if (e < 0 || static_cast<std::size_t>(e) >= n) throw MalformedInput("multiplication table entry out of range");
  if (one_ < 0 || static_cast<std::size_t>(one_) >= n) throw MalformedInput("unit index out of range");
}

RingRef make_ring(AbelianGroup additive, std::vector<Elem> mul, Elem one) {
  return std::make_shared<const FiniteRing>(std::move(additive), std::move(mul), one);
}

ValidationReport validate_ring(const FiniteRing& r) {
  ValidationReport rep = r.additive().validate();
  const auto n = static_cast<Elem>(r.size());
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (r.mul(a, b) != r.mul(b, a)) return rep.add("commutativity", {a, b});
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return rep.add("associativity", {a, b, c});
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) return rep.add("unit", {a});
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
              r.mul(r.add(b, c), a) != r.add(r.mul(b, a), r.mul(c, a)))
            return rep.add("distributivity", {a, b, c});
  }();
  return rep;
}

RingRef make_cyclic_ring(std::size_t n, const Budget& budget) {
  if (n == 0) throw PreconditionError("cyclic ring needs n >= 1");
  budget.check_carrier(n, "cyclic ring");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a * b) % n);
  return make_ring(cyclic_group(n), std::move(mul), static_cast<Elem>(1 % n));
}

RingRef zero_ring() { return make_cyclic_ring(1); }

RingRef make_truncated_polynomial_ring(std::size_t p, std::size_t k, const Budget& budget) {
  if (p < 2 || k < 1) throw PreconditionError("truncated polynomial ring needs p >= 2, k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    budget.check_carrier(n, "truncated polynomial ring");
  }
  auto digits = [&](std::size_t e) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i, e /= p) d[i] = e % p;
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t e = 0;
    for (std::size_t i = k; i-- > 0;) e = e * p + d[i];
    return static_cast<Elem>(e);
  };
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      std::vector<std::size_t> s(k), m(k, 0);
      for (std::size_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; i + j < k; ++j) m[i + j] = (m[i + j] + da[i] * db[j]) % p;
      add[a * n + b] = encode(s);
      mul[a * n + b] = encode(m);
    }
  return make_ring(AbelianGroup(n, std::move(add)), std::move(mul), 1);
}

ValidationReport validate_ring_hom(const RingHom& h) {
  ValidationReport rep;
  const auto& r = *h.domain;
  const auto& s = *h.codomain;
  if (h.map.size() != r.size()) {
    rep.add("shape", {static_cast<Elem>(h.map.size())}, "map size differs from domain size");
    return rep;
  }
  for (std::size_t a = 0; a < r.size(); ++a)
    if (h.map[a] < 0 || static_cast<std::size_t>(h.map[a]) >= s.size()) {
      rep.add("shape", {static_cast<Elem>(a)}, "image out of range");
      return rep;
    }
  const auto n = static_cast<Elem>(r.size());
  if (h(r.one()) != s.one()) rep.add("unit", {r.one()});
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (h(r.add(a, b)) != s.add(h(a), h(b))) return rep.add("additivity", {a, b});
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (h(r.mul(a, b)) != s.mul(h(a), h(b))) return rep.add("multiplicativity", {a, b});
  }();
  return rep;
}

RingHom identity_hom(const RingRef& r) {
  std::vector<Elem> map(r->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
  return {r, r, std::move(map)};
}

RingHom compose(const RingHom& first, const RingHom& second) {
  std::vector<Elem> map(first.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second(first(static_cast<Elem>(i)));
  return {first.domain, second.codomain, std::move(map)};
}

bool is_injective(std::span<const Elem> map, std::size_t codomain_size) {
  std::vector<char> seen(codomain_size, 0);
  for (Elem e : map) {
    if (seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

bool is_surjective(std::span<const Elem> map, std::size_t codomain_size) {
  std::vector<char> seen(codomain_size, 0);
  std::size_t hit = 0;
  for (Elem e : map)
    if (!seen[e]) {
      seen[e] = 1;
      ++hit;
    }
  return hit == codomain_size;
}

bool is_bijective(std::span<const Elem> map, std::size_t codomain_size) {
  return map.size() == codomain_size && is_injective(map, codomain_size);
}

ProductRing product_ring(const RingRef& r, const RingRef& s, const Budget& budget) {
  const std::size_t nr = r->size(), ns = s->size(), n = nr * ns;
  budget.check_carrier(n, "product ring");
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mul[x * n + y] = pair_index(r->mul(static_cast<Elem>(x / ns), static_cast<Elem>(y / ns)),
                                  s->mul(static_cast<Elem>(x % ns), static_cast<Elem>(y % ns)), ns);
  auto ring = make_ring(direct_sum(r->additive(), s->additive()), std::move(mul), pair_index(r->one(), s->one(), ns));
  std::vector<Elem> p1(n), p2(n);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<Elem>(x / ns);
    p2[x] = static_cast<Elem>(x % ns);
  }
  return {ring, {ring, r, std::move(p1)}, {ring, s, std::move(p2)}};
}

ValidationReport validate_ideal(const FiniteRing& r, std::span<const Elem> elements) {
  ValidationReport rep;
  std::vector<char> in(r.size(), 0);
  for (Elem e : elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= r.size()) {
      rep.add("shape", {e}, "element out of range");
      return rep;
    }
    in[e] = 1;
  }
  if (!in[r.zero()]) rep.add("contains-zero", {r.zero()});
  [&] {
    for (Elem a : elements)
      for (Elem b : elements)
        if (!in[r.sub(a, b)]) return rep.add("additive-subgroup", {a, b});
  }();
  [&] {
    for (std::size_t c = 0; c < r.size(); ++c)
      for (Elem a : elements)
        if (!in[r.mul(static_cast<Elem>(c), a)]) return rep.add("absorption", {static_cast<Elem>(c), a});
  }();
  return rep;
}

Ideal make_ideal(const RingRef& r, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require_valid(validate_ideal(*r, elements), "ideal");
  return {r, std::move(elements)};
}

Ideal ideal_generated(const RingRef& r, std::span<const Elem> generators) {
  std::vector<Elem> gens;
  for (std::size_t c = 0; c < r->size(); ++c)
    for (Elem g : generators) gens.push_back(r->mul(static_cast<Elem>(c), g));
  return {r, subgroup_closure(r->additive(), gens)};
}

QuotientRing quotient_ring(const Ideal& ideal) {
  const auto& r = *ideal.parent;
  require_valid(validate_ideal(r, ideal.elements), "ideal");
  auto q = quotient_group(r.additive(), ideal.elements);
  const std::size_t k = q.representative.size();
  std::vector<Elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mul[i * k + j] = q.projection[r.mul(q.representative[i], q.representative[j])];
  auto ring = make_ring(q.group, std::move(mul), q.projection[r.one()]);
  return {ring, {ideal.parent, ring, q.projection}, q.representative};
}

Subring make_subring(const RingRef& r, std::span<const Elem> elements) {
  const auto idx = index_of_subset(r->size(), elements);
  const std::size_t k = elements.size();
  if (idx[r->one()] == kNone) throw PreconditionError("subset does not contain one", {r->one()});
  auto group = restrict_group(r->additive(), elements);
  std::vector<Elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem p = idx[r->mul(elements[i], elements[j])];
      if (p == kNone) throw PreconditionError("subset is not closed under multiplication", {elements[i], elements[j]});
      mul[i * k + j] = p;
    }
  auto ring = make_ring(std::move(group), std::move(mul), idx[r->one()]);
  return {ring, {ring, r, std::vector<Elem>(elements.begin(), elements.end())}};
}

FiberProductRing fiber_product_ring(const RingHom& a, const RingHom& b, const Budget& budget) {
  if (!(*a.codomain == *b.codomain)) throw PreconditionError("fiber product needs a common codomain");
  const std::size_t na = a.domain->size(), nb = b.domain->size();
  std::vector<Elem> members;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      if (a(static_cast<Elem>(x)) == b(static_cast<Elem>(y))) {
        members.push_back(pair_index(static_cast<Elem>(x), static_cast<Elem>(y), nb));
        pairs.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      }
  budget.check_carrier(members.size(), "fiber product ring");
  const std::size_t k = members.size();
  const auto idx = index_of_subset(na * nb, members);
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto [x1, y1] = pairs[i];
      auto [x2, y2] = pairs[j];
      add[i * k + j] = idx[pair_index(a.domain->add(x1, x2), b.domain->add(y1, y2), nb)];
      mul[i * k + j] = idx[pair_index(a.domain->mul(x1, x2), b.domain->mul(y1, y2), nb)];
    }
  auto ring = make_ring(AbelianGroup(k, std::move(add)), std::move(mul),
                        idx[pair_index(a.domain->one(), b.domain->one(), nb)]);
  std::vector<Elem> p1(k), p2(k);
  for (std::size_t i = 0; i < k; ++i) {
    p1[i] = pairs[i].first;
    p2[i] = pairs[i].second;
  }
  return {ring, {ring, a.domain, std::move(p1)}, {ring, b.domain, std::move(p2)}, std::move(pairs)};
}

namespace {

AdditiveConstraints ring_hom_constraints(const FiniteRing& r, const FiniteRing& s) {
  AdditiveConstraints c;
  c.allowed = [&r, &s](Elem src, Elem tgt) { return src != r.one() || tgt == s.one(); };
  c.consistent = [&r, &s](const std::vector<Elem>& map, std::span<const Elem> fresh) {
    for (Elem e : fresh)
      for (std::size_t b = 0; b < map.size(); ++b) {
        if (map[b] == kNone) continue;
        Elem p = map[r.mul(e, static_cast<Elem>(b))];
        if (p != kNone && p != s.mul(map[e], map[b])) return false;
      }
    return true;
  };
  return c;
}

bool multiplicative(const FiniteRing& r, const FiniteRing& s, const std::vector<Elem>& map) {
  if (map[r.one()] != s.one()) return false;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a; b < r.size(); ++b)
      if (map[r.mul(static_cast<Elem>(a), static_cast<Elem>(b))] != s.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace

void enumerate_ring_homs(const RingRef& r, const RingRef& s, const std::function<bool(Elem, Elem)>& allowed,
                         const Budget& budget, const std::function<bool(const RingHom&)>& visit) {
  SearchCounter counter(budget);
  auto constraints = ring_hom_constraints(*r, *s);
  if (allowed) {
    constraints.allowed = [&r, &s, &allowed](Elem src, Elem tgt) {
      return (src != r->one() || tgt == s->one()) && allowed(src, tgt);
    };
  }
  enumerate_additive_maps(r->additive(), s->additive(), constraints, counter, [&](const std::vector<Elem>& map) {
    if (!multiplicative(*r, *s, map)) return true;
    return visit(RingHom{r, s, map});
  });
}

std::vector<RingHom> enumerate_ring_homs(const RingRef& r, const RingRef& s, const Budget& budget) {
  SearchCounter counter(budget);
  std::vector<RingHom> out;
  auto constraints = ring_hom_constraints(*r, *s);
  enumerate_additive_maps(r->additive(), s->additive(), constraints, counter, [&](const std::vector<Elem>& map) {
    if (multiplicative(*r, *s, map)) out.push_back({r, s, map});
    return true;
  });
  return out;
}

std::optional<RingHom> find_ring_isomorphism(const RingRef& r, const RingRef& s, const Budget& budget) {
  if (r->size() != s->size()) return std::nullopt;
  SearchCounter counter(budget);
  std::optional<RingHom> found;
  auto constraints = ring_hom_constraints(*r, *s);
  enumerate_additive_maps(r->additive(), s->additive(), constraints, counter, [&](const std::vector<Elem>& map) {
    if (multiplicative(*r, *s, map) && is_bijective(map, s->size())) {
      found = RingHom{r, s, map};
      return false;
    }
    return true;
  });
  return found;
}

std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < r.size(); ++a)
    if (r.mul(static_cast<Elem>(a), static_cast<Elem>(a)) == static_cast<Elem>(a)) out.push_back(static_cast<Elem>(a));
  return out;
}

}  // namespace ringoid
