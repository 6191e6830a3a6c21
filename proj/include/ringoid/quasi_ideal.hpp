#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringoid/module.hpp"

namespace ringoid {

/// A triple (C, I, d): a C-module I with a C-linear d : I -> C such that
/// d(x)·y = d(y)·x. Read as a DG ring it sits in degrees 0 (C) and -1 (I).
struct QuasiIdeal {
  RingRef ring;
  FiniteModule module;
  std::vector<Elem> d;

  const FiniteRing& C() const { return *ring; }
  const FiniteModule& I() const { return module; }
  std::size_t ring_size() const { return ring->size(); }
  std::size_t module_size() const { return module.size(); }
  Elem diff(Elem x) const { return d[x]; }
  Elem act(Elem c, Elem x) const { return module.act(c, x); }

  bool operator==(const QuasiIdeal& o) const { return *ring == *o.ring && module == o.module && d == o.d; }
};

using QuasiIdealRef = std::shared_ptr<const QuasiIdeal>;

/// Checks shapes only (module over `ring`, d of the right length and range).
QuasiIdealRef make_quasi_ideal(RingRef ring, FiniteModule module, std::vector<Elem> d);
/// (C, 0, 0).
QuasiIdealRef discrete_quasi_ideal(const RingRef& ring);

/// Linearity and the quasi-ideal law, least witness first. Throws
/// PreconditionError when the ring or module themselves are invalid.
ValidationReport validate_quasi_ideal(const QuasiIdeal& q);

/// The DG-ring view: the graded Leibniz rule d(ab) = d(a)b + (-1)^|a| a d(b)
/// on all homogeneous pairs, where products of two degree -1 elements vanish.
/// An independent route to validate_quasi_ideal.
ValidationReport dg_leibniz_report(const QuasiIdeal& q);

/// d(x)·y; commutative and associative on a valid quasi-ideal.
Elem derived_product(const QuasiIdeal& q, Elem x, Elem y);

/// Sorted d(I), re-validated as an ideal of C.
Ideal image_ideal(const QuasiIdeal& q);
/// Sorted Ker d.
std::vector<Elem> kernel_elements(const QuasiIdeal& q);

/// C / d(I) with its projection.
QuotientRing pi0(const QuasiIdeal& q);

struct Pi1 {
  QuotientRing components;    // pi0
  FiniteModule automorphisms;  // Ker d over pi0
  std::vector<Elem> inclusion;  // label -> element of I
};
/// Ker d with the action descended to C/d(I). Throws PreconditionError if
/// d(I) fails to annihilate Ker d.
Pi1 pi1(const QuasiIdeal& q);

/// A morphism (C, I, d) -> (C', I', d'): a ring hom C -> C' and an additive
/// map I -> I' linear along it, commuting with the differentials.
struct QMorphism {
  QuasiIdealRef source;
  QuasiIdealRef target;
  std::vector<Elem> ring_part;
  std::vector<Elem> module_part;

  Elem deg0(Elem c) const { return ring_part[c]; }
  Elem deg1(Elem x) const { return module_part[x]; }
  RingHom ring_hom() const { return {source->ring, target->ring, ring_part}; }
  bool same_maps(const QMorphism& o) const { return ring_part == o.ring_part && module_part == o.module_part; }
};

ValidationReport validate_qmorphism(const QMorphism& m);
QMorphism identity_qmorphism(const QuasiIdealRef& q);
/// second ∘ first
QMorphism compose(const QMorphism& first, const QMorphism& second);
bool is_surjective(const QMorphism& m);
bool is_bijective(const QMorphism& m);

struct QuasiIsoReport {
  bool kernel_bijective = false;
  bool cokernel_bijective = false;
  std::string failure;  // which side fails and how
  std::vector<Elem> witness;

  bool ok() const noexcept { return kernel_bijective && cokernel_bijective; }
  explicit operator bool() const noexcept { return ok(); }
};

/// True iff the induced maps Ker d -> Ker d' and Coker d -> Coker d' are
/// bijective.
QuasiIsoReport is_quasi_iso(const QMorphism& m);

/// Ker d = 0: the ideal with its inclusion.
QuasiIdealRef from_ideal(const Ideal& ideal);

struct QFiberProduct {
  QuasiIdealRef object;
  QMorphism first;
  QMorphism second;
};
/// Degreewise fiber product of a : A -> T and b : B -> T; carriers are the
/// agreeing pairs in lexicographic order.
QFiberProduct fiber_product(const QMorphism& a, const QMorphism& b, const Budget& budget = {});

struct QProduct {
  QuasiIdealRef object;
  QMorphism first;
  QMorphism second;
};
QProduct product(const QuasiIdealRef& a, const QuasiIdealRef& b, const Budget& budget = {});

/// Constraints for enumerate_qmorphisms; unset callbacks allow everything.
struct QMorphismConstraints {
  std::function<bool(Elem c, Elem image)> ring_allowed;
  std::function<bool(const std::vector<Elem>& ring_part, Elem x, Elem image)> module_allowed;
};

/// Every QMorphism source -> target meeting the constraints, in a
/// deterministic order. `visit` returns false to stop.
void enumerate_qmorphisms(const QuasiIdealRef& source, const QuasiIdealRef& target,
                          const QMorphismConstraints& constraints, const Budget& budget,
                          const std::function<bool(const QMorphism&)>& visit);
std::vector<QMorphism> all_qmorphisms(const QuasiIdealRef& source, const QuasiIdealRef& target,
                                      const Budget& budget = {});
std::optional<QMorphism> find_isomorphism(const QuasiIdealRef& a, const QuasiIdealRef& b, const Budget& budget = {});

}  // namespace ringoid
