#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringoid/ring.hpp"

namespace ringoid {

/// A module over a finite ring: an abelian group plus an action table
/// indexed [c * |M| + x].
class FiniteModule {
 public:
  FiniteModule(RingRef base, AbelianGroup group, std::vector<Elem> action);

  const RingRef& base() const noexcept { return base_; }
  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_.size(); }
  Elem zero() const noexcept { return group_.zero(); }
  Elem add(Elem a, Elem b) const { return group_.add(a, b); }
  Elem neg(Elem a) const { return group_.neg(a); }
  Elem sub(Elem a, Elem b) const { return group_.sub(a, b); }
  Elem act(Elem c, Elem x) const { return action_[static_cast<std::size_t>(c) * size() + x]; }
  const std::vector<Elem>& action_table() const noexcept { return action_; }

  bool operator==(const FiniteModule& o) const {
    return group_ == o.group_ && action_ == o.action_ && *base_ == *o.base_;
  }

 private:
  RingRef base_;
  AbelianGroup group_;
  std::vector<Elem> action_;
};

FiniteModule regular_module(const RingRef& r);
FiniteModule zero_module(const RingRef& r);
/// Componentwise action on M x N, carrier m*|N| + n.
FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n);
/// The C-module structure on an ideal of C, relabeled in order.
FiniteModule ideal_module(const Ideal& ideal);

ValidationReport validate_module(const FiniteModule& m);

/// A module map. When `link` is set the map is linear along it
/// (h(c·x) = link(c)·h(x)); otherwise both modules share the base ring.
struct ModuleHom {
  FiniteModule domain;
  FiniteModule codomain;
  std::vector<Elem> map;
  std::optional<RingHom> link;

  Elem operator()(Elem x) const { return map[x]; }
};

ValidationReport validate_module_hom(const ModuleHom& h);

/// Sorted elements of the submodule generated by `gens`.
std::vector<Elem> submodule_generated(const FiniteModule& m, std::span<const Elem> gens);
bool is_submodule(const FiniteModule& m, std::span<const Elem> elements);

struct Submodule {
  FiniteModule module;
  std::vector<Elem> inclusion;  // label -> ambient element
};
/// The submodule on a sorted closed subset, relabeled in order.
Submodule make_submodule(const FiniteModule& m, std::span<const Elem> elements);

struct QuotientModule {
  FiniteModule module;
  std::vector<Elem> projection;
  std::vector<Elem> representative;
};
QuotientModule quotient_module(const FiniteModule& m, std::span<const Elem> submodule);

Submodule kernel(const ModuleHom& h);
Submodule image(const ModuleHom& h);
QuotientModule cokernel(const ModuleHom& h);

/// Restriction of scalars along a ring hom base' -> base.
FiniteModule restrict_scalars(const FiniteModule& m, const RingHom& along);

}  // namespace ringoid
