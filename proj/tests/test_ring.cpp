#include "doctest.h"
#include "ringoid/module.hpp"
#include "ringoid/ring.hpp"

using namespace ringoid;

namespace {

RingRef patched(const FiniteRing& r, Elem a, Elem b, Elem value) {
  auto mul = r.mul_table();
  mul[static_cast<std::size_t>(a) * r.size() + b] = value;
  return make_ring(r.additive(), std::move(mul), r.one());
}

// Brute-force count of unital ring homs between two cyclic rings, over all
// |s|^|r| maps, using integer arithmetic rather than the tables.
int brute_force_cyclic_hom_count(int r, int s) {
  int count = 0;
  int total = 1;
  for (int i = 0; i < r; ++i) total *= s;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(r);
    for (int i = 0, c = code; i < r; ++i, c /= s) f[i] = c % s;
    bool ok = f[1 % r] == 1 % s;
    for (int a = 0; a < r && ok; ++a)
      for (int b = 0; b < r && ok; ++b)
        ok = f[(a + b) % r] == (f[a] + f[b]) % s && f[(a * b) % r] == (f[a] * f[b]) % s;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("cyclic rings") {
  auto z1 = make_cyclic_ring(1);
  CHECK(z1->size() == 1);
  CHECK(z1->one() == z1->zero());
  CHECK(validate_ring(*z1).ok());

  auto z4 = make_cyclic_ring(4);
  CHECK(z4->add(2, 3) == 1);
  CHECK(z4->mul(2, 2) == 0);
  CHECK(validate_ring(*z4).ok());

  auto z6 = make_cyclic_ring(6);
  std::vector<Elem> scan;
  for (int a = 0; a < 6; ++a)
    if ((a * a) % 6 == a) scan.push_back(a);
  CHECK(idempotents(*z6) == scan);
  CHECK(scan == std::vector<Elem>{0, 1, 3, 4});

  CHECK_THROWS_AS(make_cyclic_ring(65), BudgetExceeded);
  CHECK_NOTHROW(make_cyclic_ring(64));
  CHECK_THROWS_AS(make_cyclic_ring(0), PreconditionError);
}

TEST_CASE("product rings") {
  auto z2 = make_cyclic_ring(2);
  auto p = product_ring(z2, z2);
  CHECK(p.ring->size() == 4);
  const Elem e10 = pair_index(1, 0, 2), e01 = pair_index(0, 1, 2);
  CHECK(p.ring->mul(e10, e01) == p.ring->zero());
  CHECK(validate_ring(*p.ring).ok());
  CHECK(validate_ring_hom(p.first).ok());
  CHECK(validate_ring_hom(p.second).ok());

  auto z4 = make_cyclic_ring(4);
  auto unit = product_ring(zero_ring(), z4);
  CHECK(find_ring_isomorphism(unit.ring, z4).has_value());

  auto p23 = product_ring(z2, make_cyclic_ring(3));
  auto z6 = make_cyclic_ring(6);
  CHECK(find_ring_isomorphism(p23.ring, z6).has_value());
  // The CRT map x -> (x mod 2, x mod 3) is an explicit isomorphism.
  RingHom crt{z6, p23.ring, {}};
  for (int x = 0; x < 6; ++x) crt.map.push_back(pair_index(x % 2, x % 3, 3));
  CHECK(validate_ring_hom(crt).ok());
  CHECK(is_bijective(crt.map, 6));

  CHECK_FALSE(find_ring_isomorphism(p.ring, z4).has_value());
}

TEST_CASE("validate_ring reports witnesses") {
  auto z4 = make_cyclic_ring(4);
  auto bad = patched(*z4, 2, 3, 1);
  auto rep = validate_ring(*bad);
  REQUIRE(rep.has("distributivity"));
  CHECK(rep.find("distributivity")->witness == std::vector<Elem>{2, 1, 2});
  CHECK(rep.has("commutativity"));

  // mul(a, b) = -(a + b) on Z/3: a commutative Latin square that is not associative.
  std::vector<Elem> mul(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mul[a * 3 + b] = (6 - a - b) % 3;
  auto latin = make_ring(cyclic_group(3), mul, 1);
  auto rep2 = validate_ring(*latin);
  REQUIRE(rep2.has("associativity"));
  CHECK(rep2.find("associativity")->witness == std::vector<Elem>{0, 0, 1});
  CHECK_FALSE(rep2.has("commutativity"));
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(AbelianGroup(2, {0, 1, 1}), MalformedInput);
  CHECK_THROWS_AS(AbelianGroup(2, {1, 1, 1, 1}), MalformedInput);  // no identity
  CHECK_THROWS_AS(make_ring(cyclic_group(2), {0, 0, 0}, 1), MalformedInput);
  CHECK_THROWS_AS(make_ring(cyclic_group(2), {0, 0, 0, 1}, 2), MalformedInput);
}

TEST_CASE("quotient rings") {
  auto z4 = make_cyclic_ring(4);
  auto q = quotient_ring(make_ideal(z4, {0, 2}));
  CHECK(q.ring->size() == 2);
  CHECK(find_ring_isomorphism(q.ring, make_cyclic_ring(2)).has_value());
  CHECK(validate_ring_hom(q.projection).ok());
  CHECK(q.projection.map == std::vector<Elem>{0, 1, 0, 1});

  auto same = quotient_ring(make_ideal(z4, {0}));
  CHECK(*same.ring == *z4);
  CHECK(same.projection.map == identity_hom(z4).map);

  auto all = quotient_ring(make_ideal(z4, {0, 1, 2, 3}));
  CHECK(all.ring->size() == 1);

  CHECK_THROWS_AS(make_ideal(z4, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(make_ideal(z4, {2}), PreconditionError);
  auto z6 = make_cyclic_ring(6);
  CHECK(ideal_generated(z6, std::vector<Elem>{4}).elements == std::vector<Elem>{0, 2, 4});
}

TEST_CASE("ring hom enumeration") {
  auto z2 = make_cyclic_ring(2), z4 = make_cyclic_ring(4);
  CHECK(brute_force_cyclic_hom_count(4, 2) == 1);
  CHECK(brute_force_cyclic_hom_count(2, 4) == 0);
  CHECK(enumerate_ring_homs(z4, z2).size() == 1);
  CHECK(enumerate_ring_homs(z2, z4).empty());
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= 6; ++s)
      CHECK(enumerate_ring_homs(make_cyclic_ring(r), make_cyclic_ring(s)).size() ==
            static_cast<std::size_t>(brute_force_cyclic_hom_count(r, s)));

  auto p = product_ring(z2, z2).ring;
  auto homs = enumerate_ring_homs(p, p);
  CHECK(homs.size() == 4);  // pairs of projections: (p1,p2), (p2,p1), (p1,p1), (p2,p2)
  bool has_identity = false;
  for (const auto& h : homs) {
    CHECK(validate_ring_hom(h).ok());
    has_identity |= h.map == identity_hom(p).map;
  }
  CHECK(has_identity);

  Budget tiny;
  tiny.max_search = 2;
  CHECK_THROWS_AS(enumerate_ring_homs(p, make_truncated_polynomial_ring(2, 3), tiny), BudgetExceeded);
}

TEST_CASE("fiber product of rings") {
  auto z4 = make_cyclic_ring(4), z2 = make_cyclic_ring(2);
  auto p = product_ring(z2, z2);
  RingHom a{z4, z2, {0, 1, 0, 1}};
  auto fp = fiber_product_ring(a, p.first);
  CHECK(fp.ring->size() == 8);
  CHECK(validate_ring(*fp.ring).ok());
  CHECK(validate_ring_hom(fp.first).ok());
  CHECK(validate_ring_hom(fp.second).ok());
}

TEST_CASE("truncated polynomial rings") {
  auto r = make_truncated_polynomial_ring(2, 3);
  CHECK(r->size() == 8);
  CHECK(validate_ring(*r).ok());
  const Elem x = 2, x2 = 4;
  CHECK(r->mul(x, x) == x2);
  CHECK(r->mul(x, x2) == 0);
}

TEST_CASE("module kernels, images, cokernels") {
  auto z4 = make_cyclic_ring(4);
  auto m = regular_module(z4);
  CHECK(validate_module(m).ok());

  ModuleHom zero_map{m, m, {0, 0, 0, 0}, std::nullopt};
  CHECK(validate_module_hom(zero_map).ok());
  CHECK(kernel(zero_map).inclusion.size() == 4);
  CHECK(image(zero_map).inclusion.size() == 1);

  ModuleHom twice{m, m, {0, 2, 0, 2}, std::nullopt};
  CHECK(validate_module_hom(twice).ok());
  CHECK(kernel(twice).inclusion == std::vector<Elem>{0, 2});
  CHECK(image(twice).inclusion == std::vector<Elem>{0, 2});
  CHECK(cokernel(twice).module.size() == 2);

  ModuleHom id{m, m, {0, 1, 2, 3}, std::nullopt};
  CHECK(kernel(id).inclusion.size() == 1);
  CHECK(cokernel(id).module.size() == 1);

  ModuleHom not_linear{m, m, {0, 3, 2, 1}, std::nullopt};  // x -> -x is linear
  CHECK(validate_module_hom(not_linear).ok());
  ModuleHom bad{m, m, {0, 1, 1, 0}, std::nullopt};
  CHECK(validate_module_hom(bad).has("additivity"));
}

TEST_CASE("first isomorphism bookkeeping holds for every endomorphism of small modules") {
  for (int n = 1; n <= 8; ++n) {
    auto r = make_cyclic_ring(static_cast<std::size_t>(n));
    auto m = direct_sum(regular_module(r), regular_module(r));
    // Every Z/n-linear map of (Z/n)^2 is a 2x2 matrix.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            ModuleHom h{m, m, {}, std::nullopt};
            for (int x = 0; x < n * n; ++x) {
              int u = x / n, v = x % n;
              h.map.push_back(pair_index((a * u + b * v) % n, (c * u + d * v) % n, n));
            }
            REQUIRE(validate_module_hom(h).ok());
            CHECK(kernel(h).inclusion.size() * image(h).inclusion.size() == m.size());
          }
    if (n >= 4) break;
  }
}
