#include "doctest.h"
#include "ringoid/cone.hpp"
#include "ringoid/search.hpp"

using namespace ringoid;

namespace {

QuasiIdealRef cyclic_multiplication(int n, int k) {
  auto r = make_cyclic_ring(static_cast<std::size_t>(n));
  std::vector<Elem> d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) d[x] = static_cast<Elem>((k * x) % n);
  return make_quasi_ideal(r, regular_module(r), std::move(d));
}

Elem f(Elem c, Elem x) { return pair_index(c, x, 4); }

}  // namespace

TEST_CASE("cone of multiplication by two on Z/4") {
  auto q = cyclic_multiplication(4, 2);
  auto g = cone(*q);
  CHECK(validate_internal_groupoid(g).ok());
  CHECK(g.src[f(1, 1)] == 1);
  CHECK(g.tgt[f(1, 1)] == 3);
  CHECK(g.then(f(1, 1), f(3, 1)) == f(1, 2));
  CHECK(g.tgt[f(1, 2)] == 1);
  CHECK(g.mor->mul(f(1, 1), f(1, 1)) == f(1, 0));
  CHECK(inverse_morphism(g, f(1, 1)) == f(3, 3));
  CHECK(g.then(f(1, 1), f(3, 3)) == f(1, 0));
  for (Elem m = 0; m < 16; ++m) CHECK(inverse_morphism(g, inverse_morphism(g, m)) == m);
  for (Elem a = 0; a < 4; ++a) CHECK(inverse_morphism(g, g.ident[a]) == g.ident[a]);

  auto cat = underlying_groupoid(g);
  CHECK(cat->object_count() == 4);
  CHECK(cat->morphism_count() == 16);
  CHECK(component_count(*cat) == 2);
  for (Elem a = 0; a < 4; ++a) CHECK(cat->hom(a, a).size() == 2);
  CHECK(validate_category(*cat).ok());
  CHECK(is_groupoid(*cat));
}

TEST_CASE("discrete cones") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto g = cone(*discrete_quasi_ideal(make_cyclic_ring(n)));
    CHECK(validate_internal_groupoid(g).ok());
    auto cat = underlying_groupoid(g);
    CHECK(cat->morphism_count() == n);
    CHECK(component_count(*cat) == n);
  }
}

TEST_CASE("patched composition is caught") {
  auto g = cone(*cyclic_multiplication(4, 2));
  // f(1,1) then f(3,1) should be f(1,2); send it to f(1,0) instead.
  g.comp[f(1, 1) * 16 + f(3, 1)] = f(1, 0);
  auto rep = validate_internal_groupoid(g);
  CHECK_FALSE(rep.ok());
  CHECK((rep.has("associativity") || rep.has("composition-ring-hom/additive") ||
         rep.has("composition-ring-hom/multiplicative")));
}

TEST_CASE("components and automorphisms match the homotopy invariants") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto q = cyclic_multiplication(n, k);
      auto g = cone(*q);
      CHECK(validate_internal_groupoid(g).ok());
      auto cat = underlying_groupoid(g);
      CHECK(component_count(*cat) == pi0(*q).ring->size());
      auto p1 = pi1(*q).automorphisms.group();
      for (Elem a = 0; a < n; ++a) CHECK(find_group_isomorphism(automorphism_group(*cat, a), p1).has_value());
    }
}

TEST_CASE("composition from a truncation") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) {
      auto q = cyclic_multiplication(n, k);
      CHECK(composition_from_truncation(q_to_simplicial(*q)) == cone(*q));
    }
  auto a0 = make_cyclic_ring(2);
  auto a1 = make_truncated_polynomial_ring(2, 3);
  std::vector<Elem> face(8);
  for (int e = 0; e < 8; ++e) face[e] = static_cast<Elem>(e % 2);
  Trunc1SimpRing cubic{a0, a1, face, face, {0, 1}};
  auto raw = groupoid_from_truncation(cubic);
  auto rep = validate_internal_groupoid(raw);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations.front().law.starts_with("composition-ring-hom/"));
  try {
    composition_from_truncation(cubic);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.witness() == std::vector<Elem>{2, 2});
  }

  auto r = make_cyclic_ring(3);
  Trunc1SimpRing flat{r, r, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  auto disc = composition_from_truncation(flat);
  CHECK(underlying_groupoid(disc)->morphism_count() == 3);
  CHECK(component_count(*underlying_groupoid(disc)) == 3);
}

TEST_CASE("quasi-isomorphisms are exactly the cone equivalences") {
  std::vector<QuasiIdealRef> family;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) family.push_back(cyclic_multiplication(n, k));
  auto dual = make_truncated_polynomial_ring(2, 2);  // a + bt at a + 2b
  family.push_back(make_quasi_ideal(dual, regular_module(dual), {0, 2, 0, 2}));
  family.push_back(make_quasi_ideal(dual, regular_module(dual), {0, 0, 0, 0}));
  family.push_back(from_ideal(make_ideal(dual, {0, 2})));
  family.push_back(discrete_quasi_ideal(dual));
  family.push_back(discrete_quasi_ideal(product_ring(make_cyclic_ring(2), make_cyclic_ring(2)).ring));

  std::size_t checked = 0, positives = 0;
  for (const auto& a : family)
    for (const auto& b : family)
      for (const auto& mor : all_qmorphisms(a, b)) {
        auto F = cone_functor(mor);
        REQUIRE(validate_functor(F).ok());
        bool qi = is_quasi_iso(mor).ok();
        CHECK(qi == analyze_functor(F).equivalence());
        ++checked;
        positives += qi;
      }
  CHECK(checked >= 50);
  CHECK(positives > 0);
  CHECK(positives < checked);
}
