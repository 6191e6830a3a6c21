#include "doctest.h"
#include "ringoid/simplicial.hpp"

using namespace ringoid;

namespace {

QuasiIdealRef cyclic_multiplication(int n, int k) {
  auto r = make_cyclic_ring(static_cast<std::size_t>(n));
  std::vector<Elem> d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) d[x] = static_cast<Elem>((k * x) % n);
  return make_quasi_ideal(r, regular_module(r), std::move(d));
}

// A0 = Z/2, A1 = Z/2[x]/(x³), both faces kill x, s the inclusion.
Trunc1SimpRing cubic_truncation() {
  auto a0 = make_cyclic_ring(2);
  auto a1 = make_truncated_polynomial_ring(2, 3);
  std::vector<Elem> face(8);
  for (int e = 0; e < 8; ++e) face[e] = static_cast<Elem>(e % 2);
  return {a0, a1, face, face, {0, 1}};
}

// A1 = A0 × A0, faces the projections, s the diagonal.
Trunc1SimpRing pair_groupoid(std::size_t n) {
  auto a0 = make_cyclic_ring(n);
  auto p = product_ring(a0, a0);
  std::vector<Elem> s(n);
  for (std::size_t a = 0; a < n; ++a) s[a] = pair_index(static_cast<Elem>(a), static_cast<Elem>(a), n);
  return {a0, p.ring, p.first.map, p.second.map, s};
}

Trunc1SimpRing identity_truncation(std::size_t n) {
  auto a0 = make_cyclic_ring(n);
  std::vector<Elem> id(n);
  for (std::size_t a = 0; a < n; ++a) id[a] = static_cast<Elem>(a);
  return {a0, a0, id, id, id};
}

}  // namespace

TEST_CASE("quasi-ideal to simplicial ring") {
  auto q = cyclic_multiplication(4, 2);
  auto t = q_to_simplicial(*q);
  CHECK(t.A1->size() == 16);
  CHECK(validate_simplicial(t).ok());
  CHECK(is_good(t));
  CHECK(t.A1->mul(pair_index(1, 1, 4), pair_index(1, 1, 4)) == pair_index(1, 0, 4));
  // Oracle: the product formula in integer arithmetic.
  for (int c1 = 0; c1 < 4; ++c1)
    for (int x1 = 0; x1 < 4; ++x1)
      for (int c2 = 0; c2 < 4; ++c2)
        for (int x2 = 0; x2 < 4; ++x2) {
          int c = (c1 * c2) % 4, x = (c1 * x2 + c2 * x1 + 2 * x1 * x2) % 4;
          CHECK(t.A1->mul(pair_index(c1, x1, 4), pair_index(c2, x2, 4)) == pair_index(c, x, 4));
        }

  auto z2 = make_cyclic_ring(2);
  auto dual = q_to_simplicial(*make_quasi_ideal(z2, regular_module(z2), {0, 0}));
  CHECK(find_ring_isomorphism(dual.A1, make_truncated_polynomial_ring(2, 2)).has_value());
  CHECK_FALSE(find_ring_isomorphism(dual.A1, product_ring(z2, z2).ring).has_value());

  auto discrete = q_to_simplicial(*discrete_quasi_ideal(make_cyclic_ring(6)));
  CHECK(discrete.A1->size() == 6);
  CHECK(is_bijective(discrete.d0, 6));
  CHECK(is_bijective(discrete.d1, 6));
  CHECK(is_bijective(discrete.s, 6));
}

TEST_CASE("goodness") {
  auto t = cubic_truncation();
  CHECK(validate_simplicial(t).ok());
  auto rep = goodness_report(t);
  REQUIRE(rep.has("goodness"));
  CHECK(rep.find("goodness")->witness == std::vector<Elem>{2, 2});  // (x, x)
  CHECK(t.A1->mul(2, 2) == 4);                                       // x² != 0
  try {
    simplicial_to_q(t);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.witness() == std::vector<Elem>{2, 2});
  }

  CHECK(is_good(identity_truncation(4)));
  CHECK(simplicial_to_q(identity_truncation(4))->module_size() == 1);
  CHECK(is_good(pair_groupoid(3)));
}

TEST_CASE("invalid structure maps are reported") {
  auto t = identity_truncation(3);
  t.s = {0, 2, 1};
  auto rep = validate_simplicial(t);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("roundtrips") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto q = cyclic_multiplication(n, k);
      auto t = q_to_simplicial(*q);
      CHECK(is_good(t));
      CHECK(validate_simplicial(t).ok());
      auto back = simplicial_to_q(t);
      CHECK(*back == *q);
    }
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    for (const auto& t : {pair_groupoid(n), identity_truncation(n)}) {
      REQUIRE(is_good(t));
      auto q = simplicial_to_q(t);
      CHECK(validate_quasi_ideal(*q).ok());
      auto again = q_to_simplicial(*q);
      CHECK(find_simplicial_isomorphism(t, again).has_value());
    }
  }
  CHECK_FALSE(find_simplicial_isomorphism(pair_groupoid(2), q_to_simplicial(*cyclic_multiplication(2, 0))).has_value());
}
