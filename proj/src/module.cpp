#include "ringoid/module.hpp"

#include <algorithm>

namespace ringoid {

FiniteModule::FiniteModule(RingRef base, AbelianGroup group, std::vector<Elem> action)
    : base_(std::move(base)), group_(std::move(group)), action_(std::move(action)) {
  if (action_.size() != base_->size() * group_.size()) throw MalformedInput("action table has wrong size");
  for (Elem e : action_)
    if (e < 0 || static_cast<std::size_t>(e) >= group_.size()) throw MalformedInput("action table entry out of range");
}

FiniteModule regular_module(const RingRef& r) { return FiniteModule(r, r->additive(), r->mul_table()); }

FiniteModule zero_module(const RingRef& r) {
  return FiniteModule(r, trivial_group(), std::vector<Elem>(r->size(), 0));
}

FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n) {
  const std::size_t nn = n.size(), size = m.size() * nn, nc = m.base()->size();
  std::vector<Elem> action(nc * size);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t x = 0; x < size; ++x)
      action[c * size + x] = pair_index(m.act(static_cast<Elem>(c), static_cast<Elem>(x / nn)),
                                        n.act(static_cast<Elem>(c), static_cast<Elem>(x % nn)), nn);
  return FiniteModule(m.base(), direct_sum(m.group(), n.group()), std::move(action));
}

FiniteModule ideal_module(const Ideal& ideal) {
  return make_submodule(regular_module(ideal.parent), ideal.elements).module;
}

ValidationReport validate_module(const FiniteModule& m) {
  ValidationReport rep = m.group().validate();
  const auto& c = *m.base();
  const auto nc = static_cast<Elem>(c.size());
  const auto nm = static_cast<Elem>(m.size());
  [&] {
    for (Elem x = 0; x < nm; ++x)
      if (m.act(c.one(), x) != x) return rep.add("unit-action", {x});
  }();
  [&] {
    for (Elem a = 0; a < nc; ++a)
      for (Elem x = 0; x < nm; ++x)
        for (Elem y = 0; y < nm; ++y)
          if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y))) return rep.add("additive-in-module", {a, x, y});
  }();
  [&] {
    for (Elem a = 0; a < nc; ++a)
      for (Elem b = 0; b < nc; ++b)
        for (Elem x = 0; x < nm; ++x)
          if (m.act(c.add(a, b), x) != m.add(m.act(a, x), m.act(b, x))) return rep.add("additive-in-scalar", {a, b, x});
  }();
  [&] {
    for (Elem a = 0; a < nc; ++a)
      for (Elem b = 0; b < nc; ++b)
        for (Elem x = 0; x < nm; ++x)
          if (m.act(c.mul(a, b), x) != m.act(a, m.act(b, x))) return rep.add("associative-action", {a, b, x});
  }();
  return rep;
}

ValidationReport validate_module_hom(const ModuleHom& h) {
  ValidationReport rep;
  if (h.map.size() != h.domain.size()) {
    rep.add("shape", {static_cast<Elem>(h.map.size())}, "map size differs from domain size");
    return rep;
  }
  for (std::size_t x = 0; x < h.map.size(); ++x)
    if (h.map[x] < 0 || static_cast<std::size_t>(h.map[x]) >= h.codomain.size()) {
      rep.add("shape", {static_cast<Elem>(x)}, "image out of range");
      return rep;
    }
  if (!h.link && !(*h.domain.base() == *h.codomain.base())) {
    rep.add("base", {}, "modules over different rings need a linking hom");
    return rep;
  }
  const auto nm = static_cast<Elem>(h.domain.size());
  const auto nc = static_cast<Elem>(h.domain.base()->size());
  [&] {
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        if (h(h.domain.add(x, y)) != h.codomain.add(h(x), h(y))) return rep.add("additivity", {x, y});
  }();
  [&] {
    for (Elem c = 0; c < nc; ++c)
      for (Elem x = 0; x < nm; ++x) {
        Elem image_scalar = h.link ? (*h.link)(c) : c;
        if (h(h.domain.act(c, x)) != h.codomain.act(image_scalar, h(x))) return rep.add("linearity", {c, x});
      }
  }();
  return rep;
}

std::vector<Elem> submodule_generated(const FiniteModule& m, std::span<const Elem> gens) {
  std::vector<Elem> all;
  for (std::size_t c = 0; c < m.base()->size(); ++c)
    for (Elem g : gens) all.push_back(m.act(static_cast<Elem>(c), g));
  return subgroup_closure(m.group(), all);
}

bool is_submodule(const FiniteModule& m, std::span<const Elem> elements) {
  if (!is_subgroup(m.group(), elements)) return false;
  std::vector<char> in(m.size(), 0);
  for (Elem e : elements) in[e] = 1;
  for (std::size_t c = 0; c < m.base()->size(); ++c)
    for (Elem e : elements)
      if (!in[m.act(static_cast<Elem>(c), e)]) return false;
  return true;
}

Submodule make_submodule(const FiniteModule& m, std::span<const Elem> elements) {
  const auto idx = index_of_subset(m.size(), elements);
  auto group = restrict_group(m.group(), elements);
  const std::size_t k = elements.size(), nc = m.base()->size();
  std::vector<Elem> action(nc * k);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < k; ++i) {
      Elem e = idx[m.act(static_cast<Elem>(c), elements[i])];
      if (e == kNone) throw PreconditionError("subset is not closed under the action", {static_cast<Elem>(c), elements[i]});
      action[c * k + i] = e;
    }
  return {FiniteModule(m.base(), std::move(group), std::move(action)),
          std::vector<Elem>(elements.begin(), elements.end())};
}

QuotientModule quotient_module(const FiniteModule& m, std::span<const Elem> submodule) {
  if (!is_submodule(m, submodule)) throw PreconditionError("subset is not a submodule");
  auto q = quotient_group(m.group(), submodule);
  const std::size_t k = q.representative.size(), nc = m.base()->size();
  std::vector<Elem> action(nc * k);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < k; ++i) action[c * k + i] = q.projection[m.act(static_cast<Elem>(c), q.representative[i])];
  return {FiniteModule(m.base(), q.group, std::move(action)), q.projection, q.representative};
}

Submodule kernel(const ModuleHom& h) {
  std::vector<Elem> ker;
  for (std::size_t x = 0; x < h.domain.size(); ++x)
    if (h.map[x] == h.codomain.zero()) ker.push_back(static_cast<Elem>(x));
  return make_submodule(h.domain, ker);
}

Submodule image(const ModuleHom& h) {
  std::vector<Elem> im(h.map.begin(), h.map.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  if (!is_submodule(h.codomain, im)) throw PreconditionError("image is not a submodule of the codomain");
  return make_submodule(h.codomain, im);
}

QuotientModule cokernel(const ModuleHom& h) { return quotient_module(h.codomain, image(h).inclusion); }

FiniteModule restrict_scalars(const FiniteModule& m, const RingHom& along) {
  const std::size_t nc = along.domain->size(), nm = m.size();
  std::vector<Elem> action(nc * nm);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t x = 0; x < nm; ++x) action[c * nm + x] = m.act(along(static_cast<Elem>(c)), static_cast<Elem>(x));
  return FiniteModule(along.domain, m.group(), std::move(action));
}

}  // namespace ringoid
