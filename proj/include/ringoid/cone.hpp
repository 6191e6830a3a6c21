#pragma once

#include "ringoid/category.hpp"
#include "ringoid/simplicial.hpp"

namespace ringoid {

/// A groupoid internal to rings: object and morphism rings, source, target
/// and identity homs, and a composition table then(f, g) = g∘f on pairs
/// with tgt f = src g (kNone elsewhere).
struct InternalRingGroupoid {
  RingRef obj;
  RingRef mor;
  std::vector<Elem> src;
  std::vector<Elem> tgt;
  std::vector<Elem> ident;
  std::vector<Elem> comp;

  Elem then(Elem f, Elem g) const { return comp[static_cast<std::size_t>(f) * mor->size() + g]; }
  bool operator==(const InternalRingGroupoid& o) const {
    return *obj == *o.obj && *mor == *o.mor && src == o.src && tgt == o.tgt && ident == o.ident && comp == o.comp;
  }
};

/// Objects C; f_{c,x} at index c·|I| + x goes c -> c + d(x); componentwise
/// sum; f_{c,x}·f_{c',x'} = f_{cc', cx' + c'x + d(x')x};
/// f_{c+dx,y} ∘ f_{c,x} = f_{c,x+y}.
InternalRingGroupoid cone(const QuasiIdeal& q, const Budget& budget = {});

/// Homs, identity sections, composition domain and endpoints, unit,
/// associativity, inverses, and composition as a ring hom out of the ring
/// of composable pairs. Throws PreconditionError if a ring is invalid. The
/// pairs ring may reach the square of the carrier bound.
ValidationReport validate_internal_groupoid(const InternalRingGroupoid& g, const Budget& budget = {});

/// The structure with composition g∘f = f + g - s(a), a = d1 f = d0 g,
/// with d0 as source and d1 as target. Always a category; a ring groupoid
/// exactly on good inputs.
InternalRingGroupoid groupoid_from_truncation(const Trunc1SimpRing& t);
/// groupoid_from_truncation, validated. Throws PreconditionError carrying
/// the goodness witness when composition is not a ring hom.
InternalRingGroupoid composition_from_truncation(const Trunc1SimpRing& t);

/// ident(src f) + ident(tgt f) - f.
Elem inverse_morphism(const InternalRingGroupoid& g, Elem f);

/// Forgets the rings; same objects, morphisms and composition.
CategoryRef underlying_groupoid(const InternalRingGroupoid& g);

/// Cone(m) between the underlying groupoids of the cones of source and target.
Functor cone_functor(const QMorphism& m, const CategoryRef& source_cone, const CategoryRef& target_cone);
Functor cone_functor(const QMorphism& m);

/// Automorphisms of `a` under composition, relabeled in index order.
/// Throws MalformedInput if they do not form an abelian group.
AbelianGroup automorphism_group(const FiniteCategory& c, Elem a);

}  // namespace ringoid
