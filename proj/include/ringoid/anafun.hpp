#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringoid/category.hpp"
#include "ringoid/corr.hpp"

namespace ringoid {

/// C1 <-F- C12 -G-> C2.
struct CatCorrespondence {
  CategoryRef C1;
  CategoryRef C2;
  CategoryRef C12;
  Functor F;
  Functor G;
};

ValidationReport validate_cat_correspondence(const CatCorrespondence& c);

enum class CatClass { plain, eq, ana, wadm, adm };
const char* to_string(CatClass k);

/// Objects of Graph_Φ: triples (c1, c2, ψ) with ψ : Φ(c1) -> c2 an iso.
struct GraphObject {
  Elem c1;
  Elem c2;
  Elem psi;
  bool operator==(const GraphObject&) const = default;
};

struct GraphCorr {
  CatCorrespondence corr;
  std::vector<GraphObject> objects;            // lexicographic in (c1, c2, ψ)
  std::vector<std::array<Elem, 4>> morphisms;  // (source, target, u1, u2), sorted
  /// Object label of (c1, c2, ψ), kNone if ψ is not an iso Φ(c1) -> c2.
  Elem find(const GraphObject& t) const;
  Elem find_morphism(Elem source, Elem target, Elem u1, Elem u2) const;
};
/// Morphisms (u1, u2) with u2 ∘ ψ = ψ' ∘ Φ(u1), ordered by (source,
/// target, u1, u2); composition componentwise.
GraphCorr graph(const Functor& phi, const Budget& budget = {});

/// A quasi-inverse of F: per object c1 of C1 a chosen σ(c1) in C12 and an
/// iso ε : F σ(c1) -> c1 (the identity when σ(c1) is an on-the-nose preimage).
struct QuasiInverse {
  std::vector<Elem> sigma;
  std::vector<Elem> epsilon;
};
/// Prefers on-the-nose preimages; among candidates takes the least, or the
/// greatest when `prefer_last`. Throws PreconditionError if F is not an
/// equivalence.
QuasiInverse choose_quasi_inverse(const CatCorrespondence& c, bool prefer_last = false);

/// G ∘ F^{-1} for the given quasi-inverse.
Functor collapse(const CatCorrespondence& c, const QuasiInverse& q);
Functor collapse(const CatCorrespondence& c, bool prefer_last = false);

/// The unit C12 -> Graph_{GF^{-1}}, c ↦ (F c, G c, G(β_c)) with β_c : σ(F c) -> c
/// the morphism over ε.
Functor unit_functor(const CatCorrespondence& c, const QuasiInverse& q, const GraphCorr& g);

struct CriterionResult {
  CatClass label = CatClass::plain;
  std::vector<Elem> witness;  // object, or (object, iso1, iso2) for lifting
};
/// Criterion (b): the unit on objects, bijective or surjective.
CriterionResult criterion_b(const CatCorrespondence& c, const Budget& budget = {});
/// Criterion (c): isos out of H(c) in C1 × C2 lift to isos out of c,
/// uniquely or at least once.
CriterionResult criterion_c(const CatCorrespondence& c);

struct CatClassification {
  CatClass label = CatClass::plain;  // from (b)
  CatClass by_c = CatClass::plain;
  bool agree() const noexcept { return label == by_c; }
};
CatClassification classify_cat(const CatCorrespondence& c, const Budget& budget = {});

/// Functors H : C12 -> C12' with F'H = F and G'H = G.
void enumerate_cat_corr_morphisms(const CatCorrespondence& a, const CatCorrespondence& b, const Budget& budget,
                                  const std::function<bool(const Functor&)>& visit);
std::size_t count_cat_corr_morphisms(const CatCorrespondence& a, const CatCorrespondence& b,
                                     const Budget& budget = {});
/// An invertible such H, if one exists.
std::optional<Functor> find_cat_corr_iso(const CatCorrespondence& a, const CatCorrespondence& b,
                                         const Budget& budget = {});

struct SaturateResult {
  CatCorrespondence saturated;  // graph(collapse(c))
  Functor unit;
  std::optional<CatCorrespondence> quotient;  // weakly admissible shortcut
  bool quotient_isomorphic = false;
};
/// Throws PreconditionError unless F is an equivalence.
SaturateResult saturate(const CatCorrespondence& c, const Budget& budget = {});

/// Objects of C12 modulo c ~ c' (same F and G images, and the iso over
/// id_{F c} maps to id under G); morphisms [c] -> [c'] are hom(F c, F c').
/// Throws PreconditionError if the iso over the identity is not unique.
CatCorrespondence quotient_saturation(const CatCorrespondence& c);

/// Strict fiber product of a.G and b.F.
CatCorrespondence compose_cat(const CatCorrespondence& a, const CatCorrespondence& b, const Budget& budget = {});

/// Cone + underlying groupoid applied to all three objects and both legs.
/// The cones may reach the square of the carrier bound.
CatCorrespondence cone_image(const DGCorrespondence& c, const Budget& budget = {});

struct BridgeReport {
  CorrClass dg = CorrClass::plain;
  CatClass cat = CatClass::plain;
  bool cat_criteria_agree = false;
  bool adm_agree = false;
  bool wadm_agree = false;
  bool ana_agree = false;
  bool eq_agree = false;
  bool ok() const noexcept { return cat_criteria_agree && adm_agree && wadm_agree && ana_agree && eq_agree; }
};
BridgeReport bridge_two_notions(const DGCorrespondence& c, const Budget& budget = {});

}  // namespace ringoid
