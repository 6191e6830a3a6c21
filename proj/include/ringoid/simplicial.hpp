#pragma once

#include <optional>

#include "ringoid/quasi_ideal.hpp"

namespace ringoid {

/// A 1-truncated simplicial ring: face maps d0, d1 : A1 -> A0 and a common
/// section s : A0 -> A1.
struct Trunc1SimpRing {
  RingRef A0;
  RingRef A1;
  std::vector<Elem> d0;
  std::vector<Elem> d1;
  std::vector<Elem> s;

  RingHom face0() const { return {A1, A0, d0}; }
  RingHom face1() const { return {A1, A0, d1}; }
  RingHom section() const { return {A0, A1, s}; }
  bool operator==(const Trunc1SimpRing& o) const {
    return *A0 == *o.A0 && *A1 == *o.A1 && d0 == o.d0 && d1 == o.d1 && s == o.s;
  }
};

/// Ring and hom laws plus d0∘s = d1∘s = id.
ValidationReport validate_simplicial(const Trunc1SimpRing& t);

/// Law "goodness" with the least pair (a, b), a ∈ Ker d0, b ∈ Ker d1,
/// a·b != 0, when (Ker d0)·(Ker d1) = 0 fails.
ValidationReport goodness_report(const Trunc1SimpRing& t);
bool is_good(const Trunc1SimpRing& t);

/// A1 = C × I (index c·|I| + x) with (c,x)(c',x') = (cc', cx' + c'x + d(x)x'),
/// d0(c,x) = c, d1(c,x) = c + d(x), s(c) = (c,0).
Trunc1SimpRing q_to_simplicial(const QuasiIdeal& q, const Budget& budget = {});

/// C = A0, I = Ker d0 relabeled in order, c·x = s(c)x, d = d1 on I.
/// Throws PreconditionError with the goodness witness on a non-good input.
QuasiIdealRef simplicial_to_q(const Trunc1SimpRing& t);

struct SimplicialIso {
  RingHom degree0;
  RingHom degree1;
};
/// An isomorphism commuting with both faces and the section, if one exists.
std::optional<SimplicialIso> find_simplicial_isomorphism(const Trunc1SimpRing& a, const Trunc1SimpRing& b,
                                                         const Budget& budget = {});

}  // namespace ringoid
