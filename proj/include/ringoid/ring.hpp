#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ringoid/group.hpp"

namespace ringoid {

/// A finite commutative unital ring given by closed operation tables.
/// Values are immutable; share them through RingRef.
class FiniteRing {
 public:
  FiniteRing(AbelianGroup additive, std::vector<Elem> mul, Elem one);

  std::size_t size() const noexcept { return additive_.size(); }
  const AbelianGroup& additive() const noexcept { return additive_; }
  Elem zero() const noexcept { return additive_.zero(); }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const { return additive_.add(a, b); }
  Elem neg(Elem a) const { return additive_.neg(a); }
  Elem sub(Elem a, Elem b) const { return additive_.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * size() + b]; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }

  bool operator==(const FiniteRing&) const = default;

 private:
  AbelianGroup additive_;
  std::vector<Elem> mul_;
  Elem one_;
};

using RingRef = std::shared_ptr<const FiniteRing>;

RingRef make_ring(AbelianGroup additive, std::vector<Elem> mul, Elem one);

/// Every violated ring axiom with its least witness. Throws MalformedInput
/// only through construction; a constructed ring is always well-shaped.
ValidationReport validate_ring(const FiniteRing& r);

/// Z/n with canonical tables. Throws BudgetExceeded beyond the carrier bound.
RingRef make_cyclic_ring(std::size_t n, const Budget& budget = {});
RingRef zero_ring();

/// Z/p[x]/(x^k); the element sum a_i x^i has index sum a_i p^i.
RingRef make_truncated_polynomial_ring(std::size_t p, std::size_t k, const Budget& budget = {});

struct RingHom {
  RingRef domain;
  RingRef codomain;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool operator==(const RingHom& o) const { return map == o.map && *domain == *o.domain && *codomain == *o.codomain; }
};

ValidationReport validate_ring_hom(const RingHom& h);
RingHom identity_hom(const RingRef& r);
/// second ∘ first
RingHom compose(const RingHom& first, const RingHom& second);
bool is_injective(std::span<const Elem> map, std::size_t codomain_size);
bool is_surjective(std::span<const Elem> map, std::size_t codomain_size);
bool is_bijective(std::span<const Elem> map, std::size_t codomain_size);

struct ProductRing {
  RingRef ring;  // carrier a*|s| + b
  RingHom first;
  RingHom second;
};
ProductRing product_ring(const RingRef& r, const RingRef& s, const Budget& budget = {});

struct Ideal {
  RingRef parent;
  std::vector<Elem> elements;  // sorted
};

ValidationReport validate_ideal(const FiniteRing& r, std::span<const Elem> elements);
/// Sorts and validates; throws PreconditionError with a witness otherwise.
Ideal make_ideal(const RingRef& r, std::vector<Elem> elements);
Ideal ideal_generated(const RingRef& r, std::span<const Elem> generators);

struct QuotientRing {
  RingRef ring;
  RingHom projection;
  std::vector<Elem> representative;  // least element of each coset
};
QuotientRing quotient_ring(const Ideal& ideal);

/// The subring on a sorted subset closed under the ring operations,
/// relabeled in order, with its inclusion.
struct Subring {
  RingRef ring;
  RingHom inclusion;
};
Subring make_subring(const RingRef& r, std::span<const Elem> elements);

/// {(x, y) : a(x) = b(y)} as a subring of the product, with both projections.
struct FiberProductRing {
  RingRef ring;
  RingHom first;
  RingHom second;
  std::vector<std::pair<Elem, Elem>> pairs;  // label -> (x, y)
};
FiberProductRing fiber_product_ring(const RingHom& a, const RingHom& b, const Budget& budget = {});

/// All unital ring homomorphisms r -> s in lexicographic order of the
/// images of the greedy additive generators of r.
std::vector<RingHom> enumerate_ring_homs(const RingRef& r, const RingRef& s, const Budget& budget = {});
/// Same order, restricted to maps with allowed(a, image) for every a.
/// `visit` returns false to stop.
void enumerate_ring_homs(const RingRef& r, const RingRef& s, const std::function<bool(Elem, Elem)>& allowed,
                         const Budget& budget, const std::function<bool(const RingHom&)>& visit);
std::optional<RingHom> find_ring_isomorphism(const RingRef& r, const RingRef& s, const Budget& budget = {});

std::vector<Elem> idempotents(const FiniteRing& r);

}  // namespace ringoid
