#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringoid/anafun.hpp"
#include "ringoid/corr.hpp"
#include "ringoid/simplicial.hpp"

namespace ringoid {

template <class T>
struct Named {
  std::string name;
  T value;
};

struct CorpusBounds {
  std::size_t max_ring = 4;       // |C| of corpus quasi-ideals
  std::size_t max_module = 4;     // |I| of corpus quasi-ideals
  std::size_t max_candidate = 8;  // |C|, |I| of law-check candidates
  std::size_t candidates = 240;   // random candidate triples on top of the fixed ones
  std::size_t hom_sources = 14;   // quasi-ideals sampled for morphisms
  std::size_t max_category = 4;   // objects of catalog categories (4: the square only)
};

struct Corpus {
  std::vector<Named<QuasiIdealRef>> quasi_ideals;  // all valid
  std::vector<Named<QuasiIdealRef>> candidates;    // (C, I, d) in range, laws unchecked
  std::vector<Named<Trunc1SimpRing>> simplicial;   // good and non-good
  std::vector<Named<QMorphism>> morphisms;
  std::vector<Named<DGCorrespondence>> correspondences;
  std::vector<Named<CatCorrespondence>> cat_correspondences;
  std::vector<Named<CategoryRef>> categories;

  bool empty() const noexcept {
    return quasi_ideals.empty() && candidates.empty() && simplicial.empty() && morphisms.empty() &&
           correspondences.empty() && cat_correspondences.empty();
  }
};

/// Small rings of size at most n in a fixed order, with names.
std::vector<Named<RingRef>> ring_catalog(std::size_t n, const Budget& budget = {});
/// Quotients C/J, ideals J and pairwise sums, of size at most n, deduplicated.
std::vector<Named<FiniteModule>> module_catalog(const Named<RingRef>& c, std::size_t n);
/// Every d : I -> C making (C, I, d) a quasi-ideal, in lexicographic order.
std::vector<std::vector<Elem>> quasi_ideal_differentials(const RingRef& c, const FiniteModule& i,
                                                         const Budget& budget = {});

/// Reproducible for a given (seed, bounds); zero bounds give an empty corpus.
/// Always contains (Z/4, Z/4, ·2) when the bounds allow size 4, the
/// Z/2 ⊕ Z/2 projection candidate, the non-good Z/2[x]/(x³) truncation and
/// non-admissible composites.
Corpus generate_instances(std::uint64_t seed, const CorpusBounds& bounds = {}, const Budget& budget = {});

/// Z/2 as a Z/4-module through the projection, d(1) = 2.
QuasiIdealRef half_over_z4();
/// (Z/n, Z/n, multiplication by k).
QuasiIdealRef cyclic_multiplication(std::size_t n, std::size_t k);
/// A0 = Z/p, A1 = Z/p[x]/(x^k), both faces x ↦ 0, s the inclusion.
Trunc1SimpRing polynomial_truncation(std::size_t p, std::size_t k);

}  // namespace ringoid
