#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringoid/quasi_ideal.hpp"

namespace ringoid {

/// R1 <-f- R12 -g-> R2.
struct DGCorrespondence {
  QuasiIdealRef R1;
  QuasiIdealRef R2;
  QuasiIdealRef R12;
  QMorphism f;
  QMorphism g;
};

ValidationReport validate_correspondence(const DGCorrespondence& c);

enum class CorrClass { plain, equivalence_leg, anamorphism, weakly_admissible, admissible };
const char* to_string(CorrClass k);
/// The strongest label: admissible (f quasi-iso, (f1, g1) : I12 -> I1 × I2
/// bijective), weakly admissible (same map surjective), anamorphism (f
/// surjective quasi-iso), equivalence leg (f quasi-iso), plain.
CorrClass classify(const DGCorrespondence& c);

/// R1 <-id- R1 -m-> R2.
DGCorrespondence graph_corr(const QMorphism& m);

/// K with f0 : K -> C1, g0 : K -> C2 and h1 : I1 -> K, h2 : I2 -> K.
struct Butterfly {
  QuasiIdealRef R1;
  QuasiIdealRef R2;
  RingRef K;
  std::vector<Elem> f0;
  std::vector<Elem> g0;
  std::vector<Elem> h1;
  std::vector<Elem> h2;

  bool operator==(const Butterfly& o) const {
    return *R1 == *o.R1 && *R2 == *o.R2 && *K == *o.K && f0 == o.f0 && g0 == o.g0 && h1 == o.h1 && h2 == o.h2;
  }
};

/// Laws: homs, f0 h1 = d1, g0 h2 = d2, linearity of h1, h2 along f0, g0,
/// g0 h1 = 0, h2 injective, Im h2 = Ker f0, f0 surjective.
ValidationReport validate_butterfly(const Butterfly& b);
/// Throws PreconditionError unless c is admissible.
Butterfly to_butterfly(const DGCorrespondence& c);
/// R12 = (K, I1 × I2, h1(x1) + h2(x2)), index x1·|I2| + x2, with the
/// K-action (f0(k)x1, g0(k)x2).
DGCorrespondence from_butterfly(const Butterfly& b);

/// A morphism h : R12 -> R12' over both ends.
struct CorrMorphism {
  DGCorrespondence source;
  DGCorrespondence target;
  QMorphism h;
};
ValidationReport validate_corr_morphism(const CorrMorphism& m);
CorrMorphism identity_corr_morphism(const DGCorrespondence& c);
/// second ∘ first
CorrMorphism compose(const CorrMorphism& first, const CorrMorphism& second);
bool is_iso(const CorrMorphism& m);

void enumerate_corr_morphisms(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget,
                              const std::function<bool(const CorrMorphism&)>& visit);
std::vector<CorrMorphism> all_corr_morphisms(const DGCorrespondence& a, const DGCorrespondence& b,
                                             const Budget& budget = {});

struct IsoSearch {
  std::optional<CorrMorphism> iso;  // the first isomorphism found
  std::size_t morphisms = 0;
  std::size_t isomorphisms = 0;
  bool all_invertible = true;

  bool found() const noexcept { return iso.has_value(); }
  bool unique() const noexcept { return isomorphisms == 1; }
};
/// Exhaustive over CorrMorphisms a -> b. Throws PreconditionError if the
/// ends differ.
IsoSearch iso_search(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget = {});

/// Degreewise fiber product of a.g and b.f over R2.
DGCorrespondence compose(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget = {});

struct AdmResult {
  DGCorrespondence admissible;
  CorrMorphism unit;  // c -> admissible
  QMorphism chi;      // new middle -> R1 × R2
};
/// Pushout construction: degree 0 is (C12 ⊕ I1 × I2) modulo
/// {(d x, -(f1 x, g1 x))}, degree -1 is I1 × I2. Throws PreconditionError
/// if f is not a quasi-isomorphism or the product is not well defined.
AdmResult admissibilize(const DGCorrespondence& c, const Budget& budget = {});

struct WeakAdmResult {
  DGCorrespondence admissible;
  CorrMorphism unit;               // c -> admissible, the quotient map
  std::vector<Elem> ideal_degree0;  // the generated DG ideal
  std::vector<Elem> ideal_degree1;
  bool f_surjective = false;
  bool kernel_acyclic = false;
  bool ideal_acyclic = false;
};
/// R12 modulo the DG ideal generated by Ker(I12 -> I1 × I2). Throws
/// PreconditionError unless c is weakly admissible or if an acyclicity
/// assertion fails.
WeakAdmResult admissibilize_weak(const DGCorrespondence& c);

/// A section s : R1 -> R12 of f.
struct Splitting {
  QMorphism s;
  QMorphism induced;  // g ∘ s
};

struct AdmOfHom {
  DGCorrespondence corr;
  Butterfly butterfly;
  Splitting distinguished;
};
/// K = C1 × I2 (index x·|I2| + y) with (x,y)(x',y') = (xx', φ0(x)y' +
/// φ0(x')y + d(y)y'); f0(x,y) = x, g0(x,y) = φ0(x) + dy, h1(z) = (dz, -φ1 z),
/// h2(y) = (0,y). The distinguished splitting is s0(x) = (x,0),
/// s1(z) = (z, φ1 z).
AdmOfHom adm_of_hom(const QMorphism& m, const Budget& budget = {});

struct SplittingReport {
  std::vector<Splitting> full;
  std::vector<RingHom> degree0;  // ring-hom sections of f0
  bool restriction_bijective = false;
};
/// Throws PreconditionError unless c is admissible.
SplittingReport splittings(const DGCorrespondence& c, const Budget& budget = {});

/// R2 <-g- R12 -f-> R1. Throws PreconditionError unless c is admissible
/// and g is a quasi-isomorphism.
DGCorrespondence invert(const DGCorrespondence& c);

/// Composition of 1-cells: admissibilize ∘ compose.
DGCorrespondence an_compose(const DGCorrespondence& a, const DGCorrespondence& b, const Budget& budget = {});

/// For h : c -> c' between anamorphisms, the unique CorrMorphism
/// Adm(c) -> Adm(c') with u ∘ unit = unit' ∘ h.
CorrMorphism adm_map(const CorrMorphism& h, const AdmResult& source, const AdmResult& target,
                     const Budget& budget = {});

struct AdjunctionCheck {
  std::size_t from_original = 0;  // CorrMorphisms c -> a
  std::size_t from_adm = 0;       // CorrMorphisms Adm(c) -> a
  bool bijective = false;         // u ↦ u ∘ unit
};
AdjunctionCheck check_adjunction(const AdmResult& adm, const DGCorrespondence& a, const Budget& budget = {});

/// adm_of_hom(id_R), cached by the quasi-ideal's tables. Owned by the
/// caller; not thread-safe.
class IdentityCache {
 public:
  const DGCorrespondence& get(const QuasiIdealRef& q, const Budget& budget = {});
  std::size_t size() const noexcept { return cells_.size(); }

 private:
  std::map<std::size_t, std::vector<std::pair<QuasiIdealRef, DGCorrespondence>>> cells_;
};

using CorrComposer = std::function<DGCorrespondence(const DGCorrespondence&, const DGCorrespondence&)>;

/// A composable triple α: R1 ⇒ R2, β: R2 ⇒ R3, γ: R3 ⇒ R4 of anamorphisms.
struct CorrTriple {
  DGCorrespondence alpha;
  DGCorrespondence beta;
  DGCorrespondence gamma;
};

struct CoherenceOptions {
  CorrComposer compose;  // defaults to the fiber product
  Budget budget;
};

struct CoherenceReport {
  ValidationReport report;
  std::size_t checks = 0;
  std::size_t literal_unique = 0;  // checks whose isomorphism was the only one
  bool ok() const noexcept { return report.ok(); }
};

/// For each triple i: Adm(β∘α) ≅ Adm(Adm β ∘ Adm α), associativity, both
/// identity laws, and the groupoid property of every search between
/// admissibles. The isomorphisms found must number exactly the
/// automorphisms of the target. Witnesses are {triple index, check index}.
CoherenceReport coherence_suite(const std::vector<CorrTriple>& sample, const CoherenceOptions& options = {});

/// adm(ψ∘φ) ≅ adm(φ) ∘AN adm(ψ) for each composable pair.
CoherenceReport functoriality_suite(const std::vector<std::pair<QMorphism, QMorphism>>& pairs,
                                     const Budget& budget = {});

}  // namespace ringoid
