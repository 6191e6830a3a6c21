#include <numeric>
#include <set>

#include "doctest.h"
#include "ringoid/quasi_ideal.hpp"

using namespace ringoid;

namespace {

// (Z/n, Z/n, multiplication by k); d = ·k is linear and satisfies the law.
QuasiIdealRef cyclic_multiplication(int n, int k) {
  auto r = make_cyclic_ring(static_cast<std::size_t>(n));
  std::vector<Elem> d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) d[x] = static_cast<Elem>((k * x) % n);
  return make_quasi_ideal(r, regular_module(r), std::move(d));
}

// Z/2 acting on Z/2 ⊕ Z/2 with d(x, y) = x; (x, y) has index 2x + y.
QuasiIdealRef projection_on_pairs() {
  auto r = make_cyclic_ring(2);
  auto m = direct_sum(regular_module(r), regular_module(r));
  return make_quasi_ideal(r, m, {0, 0, 1, 1});
}

}  // namespace

TEST_CASE("validation of the basic examples") {
  auto q = cyclic_multiplication(4, 2);
  CHECK(validate_quasi_ideal(*q).ok());
  CHECK(dg_leibniz_report(*q).ok());

  for (int n = 1; n <= 6; ++n) CHECK(validate_quasi_ideal(*discrete_quasi_ideal(make_cyclic_ring(n))).ok());

  auto bad = projection_on_pairs();
  auto rep = validate_quasi_ideal(*bad);
  REQUIRE(rep.has("quasi-ideal-law"));
  CHECK_FALSE(rep.has("d-linear"));
  // The violating pair is {(0,1), (1,0)}, reported least first.
  CHECK(rep.find("quasi-ideal-law")->witness == std::vector<Elem>{1, 2});
  CHECK(bad->act(bad->diff(2), 1) == 1);
  CHECK(bad->act(bad->diff(1), 2) == 0);
  CHECK(dg_leibniz_report(*bad).has("leibniz"));
}

TEST_CASE("linearity and additivity failures are reported") {
  auto r = make_cyclic_ring(4);
  CHECK(validate_quasi_ideal(*make_quasi_ideal(r, regular_module(r), {0, 1, 2, 3})).ok());

  auto z2 = make_cyclic_ring(2);
  auto m = direct_sum(regular_module(z2), regular_module(z2));
  auto nonadditive = make_quasi_ideal(z2, m, {0, 1, 1, 1});
  auto rep = validate_quasi_ideal(*nonadditive);
  CHECK(rep.has("d-additive"));
  CHECK(rep.find("d-additive")->witness == std::vector<Elem>{1, 2});
  CHECK_FALSE(dg_leibniz_report(*nonadditive).ok());

  // Z/2[t]/t², a + bt at index a + 2b; swapping coefficients is additive
  // but d(t·1) = 1 while t·d(1) = t² = 0.
  auto dual = make_truncated_polynomial_ring(2, 2);
  auto swapped = make_quasi_ideal(dual, regular_module(dual), {0, 2, 1, 3});
  auto lin = validate_quasi_ideal(*swapped);
  CHECK_FALSE(lin.has("d-additive"));
  REQUIRE(lin.has("d-linear"));
  CHECK(lin.find("d-linear")->witness == std::vector<Elem>{2, 1});
  CHECK(dg_leibniz_report(*swapped).has("leibniz"));

  // Z/2 over Z/4 through the projection, d(1) = 2.
  std::vector<Elem> action(8);
  for (int c = 0; c < 4; ++c)
    for (int x = 0; x < 2; ++x) action[c * 2 + x] = static_cast<Elem>((c * x) % 2);
  FiniteModule z2_over_z4(r, cyclic_group(2), action);
  REQUIRE(validate_module(z2_over_z4).ok());
  CHECK(validate_quasi_ideal(*make_quasi_ideal(r, z2_over_z4, {0, 2})).ok());
}

TEST_CASE("invalid substrate is a precondition error") {
  auto r = make_cyclic_ring(2);
  // Action with 1·x = 0 violates the unit law.
  FiniteModule m(r, cyclic_group(2), {0, 0, 0, 0});
  auto q = make_quasi_ideal(r, m, {0, 0});
  CHECK_THROWS_AS(validate_quasi_ideal(*q), PreconditionError);
  CHECK_THROWS_AS(make_quasi_ideal(r, regular_module(r), {0}), MalformedInput);
  CHECK_THROWS_AS(make_quasi_ideal(r, regular_module(r), {0, 5}), MalformedInput);
}

TEST_CASE("derived product") {
  auto q = cyclic_multiplication(4, 2);
  CHECK(derived_product(*q, 0, 0) == 0);
  CHECK(derived_product(*q, 1, 1) == 2);
  CHECK(derived_product(*q, 2, 2) == 0);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto c = cyclic_multiplication(n, k);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          // Oracle: k·x·y mod n.
          CHECK(derived_product(*c, x, y) == static_cast<Elem>((k * x * y) % n));
          CHECK(derived_product(*c, x, y) == derived_product(*c, y, x));
          for (Elem z = 0; z < n; ++z)
            CHECK(derived_product(*c, derived_product(*c, x, y), z) == derived_product(*c, x, derived_product(*c, y, z)));
        }
    }
}

TEST_CASE("homotopy invariants of cyclic multiplication") {
  auto q = cyclic_multiplication(4, 2);
  auto p0 = pi0(*q);
  CHECK(p0.ring->size() == 2);
  auto p1 = pi1(*q);
  CHECK(p1.automorphisms.size() == 2);
  CHECK(p1.inclusion == std::vector<Elem>{0, 2});
  CHECK(validate_module(p1.automorphisms).ok());

  // Oracle: d(Z/n) = gZ/n and Ker = (n/g)Z/n with g = gcd(n, k), counted by
  // scanning integers.
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      auto c = cyclic_multiplication(n, k);
      std::set<int> image, ker;
      for (int x = 0; x < n; ++x) {
        image.insert((k * x) % n);
        if ((k * x) % n == 0) ker.insert(x);
      }
      CHECK(pi0(*c).ring->size() * image.size() == static_cast<std::size_t>(n));
      CHECK(pi1(*c).automorphisms.size() == ker.size());
      CHECK(ker.size() == static_cast<std::size_t>(std::gcd(n, k)));
    }

  auto r = make_cyclic_ring(6);
  CHECK(pi0(*discrete_quasi_ideal(r)).ring->size() == 6);
  auto full = from_ideal(make_ideal(r, {0, 1, 2, 3, 4, 5}));
  CHECK(pi0(*full).ring->size() == 1);
  CHECK(pi1(*full).automorphisms.size() == 1);
  auto zero_d = make_quasi_ideal(r, regular_module(r), std::vector<Elem>(6, 0));
  CHECK(pi1(*zero_d).automorphisms.size() == 6);
}

TEST_CASE("from_ideal") {
  auto r = make_cyclic_ring(4);
  auto q = from_ideal(make_ideal(r, {0, 2}));
  CHECK(validate_quasi_ideal(*q).ok());
  CHECK(q->d == std::vector<Elem>{0, 2});
  CHECK(kernel_elements(*q).size() == 1);
  auto zero = from_ideal(make_ideal(r, {0}));
  CHECK(zero->module_size() == 1);
  CHECK(validate_quasi_ideal(*zero).ok());
}

TEST_CASE("morphisms and quasi-isomorphisms") {
  auto q = cyclic_multiplication(4, 2);
  auto id = identity_qmorphism(q);
  CHECK(validate_qmorphism(id).ok());
  CHECK(is_quasi_iso(id).ok());

  auto r4 = make_cyclic_ring(4);
  auto r2 = make_cyclic_ring(2);
  auto ideal = from_ideal(make_ideal(r4, {0, 2}));
  QMorphism proj{ideal, discrete_quasi_ideal(r2), {0, 1, 0, 1}, {0, 0}};
  CHECK(validate_qmorphism(proj).ok());
  CHECK(is_quasi_iso(proj).ok());

  QMorphism incl{discrete_quasi_ideal(r4), q, {0, 1, 2, 3}, {0}};
  CHECK(validate_qmorphism(incl).ok());
  auto rep = is_quasi_iso(incl);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.cokernel_bijective);
  CHECK_FALSE(rep.kernel_bijective);

  QMorphism broken{q, q, {0, 1, 2, 3}, {0, 2, 0, 2}};
  REQUIRE(validate_qmorphism(broken).has("commutes-with-d"));
  CHECK(validate_qmorphism(broken).find("commutes-with-d")->witness == std::vector<Elem>{1});
}

TEST_CASE("morphism enumeration against a brute-force scan") {
  // Every pair of maps (Z/n -> Z/m, Z/n -> Z/m), filtered by the laws with
  // integer arithmetic.
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l) {
          auto a = cyclic_multiplication(n, k);
          auto b = cyclic_multiplication(m, l);
          int expected = 0;
          int total = 1;
          for (int i = 0; i < n; ++i) total *= m;
          for (int f0 = 0; f0 < total; ++f0)
            for (int f1 = 0; f1 < total; ++f1) {
              std::vector<int> r(n), s(n);
              for (int i = 0, c = f0, e = f1; i < n; ++i, c /= m, e /= m) {
                r[i] = c % m;
                s[i] = e % m;
              }
              bool ok = r[1 % n] == 1 % m;
              for (int x = 0; x < n && ok; ++x) {
                ok = (l * s[x]) % m == r[(k * x) % n];
                for (int y = 0; y < n && ok; ++y)
                  ok = r[(x + y) % n] == (r[x] + r[y]) % m && r[(x * y) % n] == (r[x] * r[y]) % m &&
                       s[(x + y) % n] == (s[x] + s[y]) % m && s[(x * y) % n] == (r[x] * s[y]) % m;
              }
              expected += ok;
            }
          auto found = all_qmorphisms(a, b);
          CHECK(found.size() == static_cast<std::size_t>(expected));
          for (const auto& f : found) CHECK(validate_qmorphism(f).ok());
        }
}

TEST_CASE("fiber products") {
  auto r4 = make_cyclic_ring(4);
  auto r2 = make_cyclic_ring(2);
  auto pr = product_ring(r2, r2);
  auto t = discrete_quasi_ideal(r2);
  QMorphism a{discrete_quasi_ideal(r4), t, {0, 1, 0, 1}, {0}};
  QMorphism b{discrete_quasi_ideal(pr.ring), t, pr.first.map, {0}};
  REQUIRE(validate_qmorphism(a).ok());
  REQUIRE(validate_qmorphism(b).ok());
  auto fp = fiber_product(a, b);
  CHECK(fp.object->ring_size() == 8);
  CHECK(validate_quasi_ideal(*fp.object).ok());
  CHECK(validate_qmorphism(fp.first).ok());
  CHECK(validate_qmorphism(fp.second).ok());

  auto q = cyclic_multiplication(4, 2);
  auto id = identity_qmorphism(q);
  auto diag = fiber_product(id, id);
  CHECK(find_isomorphism(diag.object, q).has_value());
  QMorphism to_t{q, discrete_quasi_ideal(r2), {0, 1, 0, 1}, {0, 0, 0, 0}};
  REQUIRE(validate_qmorphism(to_t).ok());
  auto along_id = fiber_product(to_t, identity_qmorphism(to_t.target));
  CHECK(find_isomorphism(along_id.object, q).has_value());
  CHECK(validate_qmorphism(along_id.first).ok());
}

TEST_CASE("products") {
  auto a = cyclic_multiplication(4, 2);
  auto b = cyclic_multiplication(2, 1);
  auto p = product(a, b);
  CHECK(validate_quasi_ideal(*p.object).ok());
  CHECK(validate_qmorphism(p.first).ok());
  CHECK(validate_qmorphism(p.second).ok());
  CHECK(p.object->ring_size() == 8);
  CHECK(p.object->module_size() == 8);
}
