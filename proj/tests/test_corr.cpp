#include "doctest.h"
#include "ringoid/corr.hpp"

using namespace ringoid;

namespace {

QuasiIdealRef cyclic_multiplication(int n, int k) {
  auto r = make_cyclic_ring(static_cast<std::size_t>(n));
  std::vector<Elem> d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) d[x] = static_cast<Elem>((k * x) % n);
  return make_quasi_ideal(r, regular_module(r), std::move(d));
}

// Z/2 as a Z/4-module through the projection, with d(1) = 2.
QuasiIdealRef half_over_z4() {
  auto r = make_cyclic_ring(4);
  std::vector<Elem> action(8);
  for (int c = 0; c < 4; ++c)
    for (int x = 0; x < 2; ++x) action[c * 2 + x] = static_cast<Elem>((c * x) % 2);
  return make_quasi_ideal(r, FiniteModule(r, cyclic_group(2), action), {0, 2});
}

std::vector<QMorphism> sample_homs() {
  std::vector<QuasiIdealRef> objs{cyclic_multiplication(2, 0), cyclic_multiplication(2, 1), cyclic_multiplication(4, 2),
                                  discrete_quasi_ideal(make_cyclic_ring(2)), half_over_z4()};
  std::vector<QMorphism> out;
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& m : all_qmorphisms(a, b)) out.push_back(m);
  return out;
}

// The unique CorrMorphism u : Adm(c) -> target with u ∘ unit = h, counted.
std::size_t factorizations(const AdmResult& adm, const DGCorrespondence& target, const QMorphism& h,
                           std::optional<CorrMorphism>& found) {
  std::size_t count = 0;
  enumerate_corr_morphisms(adm.admissible, target, {}, [&](const CorrMorphism& u) {
    if (compose(adm.unit.h, u.h).same_maps(h)) {
      ++count;
      found = u;
    }
    return true;
  });
  return count;
}

}  // namespace

TEST_CASE("graphs of morphisms") {
  auto homs = sample_homs();
  REQUIRE(homs.size() >= 20);
  for (const auto& m : homs) {
    auto g = graph_corr(m);
    CHECK(validate_correspondence(g).ok());
    auto k = classify(g);
    CHECK(k >= CorrClass::anamorphism);
    // (id, g1) : I1 -> I1 × I2 is bijective exactly when I2 = 0.
    CHECK((k == CorrClass::admissible) == (m.target->module_size() == 1));
  }
}

TEST_CASE("classification") {
  auto q = cyclic_multiplication(4, 2);
  auto z = discrete_quasi_ideal(zero_ring());
  // The zero map to the zero ring is not a quasi-iso onto a nonzero R1.
  auto mid = discrete_quasi_ideal(zero_ring());
  QMorphism to_q{mid, q, {0}, {0}};
  CHECK_FALSE(validate_qmorphism(to_q).ok());  // not unital
  auto r = discrete_quasi_ideal(make_cyclic_ring(4));
  QMorphism incl{r, q, {0, 1, 2, 3}, {0}};
  DGCorrespondence c{q, q, r, incl, incl};
  REQUIRE(validate_correspondence(c).ok());
  CHECK(classify(c) == CorrClass::plain);
  (void)z;
}

TEST_CASE("adm_of_hom and butterflies") {
  auto q = cyclic_multiplication(4, 2);
  auto a = adm_of_hom(identity_qmorphism(q));
  CHECK(a.butterfly.K->size() == 16);
  CHECK(validate_butterfly(a.butterfly).ok());
  CHECK(validate_correspondence(a.corr).ok());
  CHECK(classify(a.corr) == CorrClass::admissible);
  std::size_t kernel = 0;
  for (Elem e : a.butterfly.f0) kernel += e == 0;
  CHECK(kernel == 4);
  CHECK(is_surjective(a.butterfly.f0, 4));
  CHECK(a.butterfly.K->mul(pair_index(1, 1, 4), pair_index(1, 1, 4)) == pair_index(1, 0, 4));

  auto disc = discrete_quasi_ideal(make_cyclic_ring(3));
  auto trivial = adm_of_hom(identity_qmorphism(disc));
  CHECK(trivial.butterfly.K->size() == 3);
  CHECK(classify(trivial.corr) == CorrClass::admissible);

  for (const auto& m : sample_homs()) {
    auto h = adm_of_hom(m);
    CHECK(validate_butterfly(h.butterfly).ok());
    CHECK(classify(h.corr) == CorrClass::admissible);
    CHECK(validate_qmorphism(h.distinguished.s).ok());
    CHECK(h.distinguished.induced.same_maps(m));
    CHECK(to_butterfly(h.corr) == h.butterfly);
    auto back = from_butterfly(to_butterfly(h.corr));
    CHECK(*back.R12 == *h.corr.R12);
  }

  auto broken = a.butterfly;
  broken.h2[1] = broken.h2[0];
  CHECK(validate_butterfly(broken).has("h2-injective"));
  CHECK_THROWS_AS(to_butterfly(graph_corr(identity_qmorphism(q))), PreconditionError);
}

TEST_CASE("admissibilization of graphs matches adm_of_hom") {
  for (const auto& m : sample_homs()) {
    auto g = graph_corr(m);
    auto adm = admissibilize(g);
    CHECK(validate_correspondence(adm.admissible).ok());
    CHECK(validate_corr_morphism(adm.unit).ok());
    CHECK(classify(adm.admissible) == CorrClass::admissible);
    auto explicit_form = adm_of_hom(m);
    auto search = iso_search(adm.admissible, explicit_form.corr);
    REQUIRE(search.found());
    CHECK(search.all_invertible);
    // Exactly one morphism is compatible with the distinguished splitting.
    std::optional<CorrMorphism> u;
    CHECK(factorizations(adm, explicit_form.corr, explicit_form.distinguished.s, u) == 1);
    REQUIRE(u.has_value());
    CHECK(is_iso(*u));
    CHECK(search.isomorphisms == iso_search(explicit_form.corr, explicit_form.corr).isomorphisms);
  }
}

TEST_CASE("admissibilization of an admissible correspondence") {
  for (const auto& m : sample_homs()) {
    auto c = adm_of_hom(m).corr;
    auto adm = admissibilize(c);
    CHECK(is_iso(adm.unit));
    auto weak = admissibilize_weak(c);
    CHECK(weak.ideal_degree1.size() == 1);
    CHECK(weak.ideal_degree0.size() == 1);
  }
}

TEST_CASE("composition of admissibles is only weakly admissible") {
  auto q = cyclic_multiplication(4, 2);
  auto id = adm_of_hom(identity_qmorphism(q)).corr;
  auto twice = compose(id, id);
  CHECK(validate_correspondence(twice).ok());
  CHECK(classify(twice) == CorrClass::weakly_admissible);
  auto weak = admissibilize_weak(twice);
  CHECK(weak.f_surjective);
  CHECK(weak.kernel_acyclic);
  CHECK(weak.ideal_acyclic);
  CHECK(classify(weak.admissible) == CorrClass::admissible);
  CHECK(validate_corr_morphism(weak.unit).ok());
  CHECK(iso_search(weak.admissible, id).found());
  CHECK(iso_search(weak.admissible, admissibilize(twice).admissible).found());
}

TEST_CASE("composition with graphs") {
  auto homs = sample_homs();
  for (const auto& phi : homs)
    for (const auto& psi : homs) {
      if (!(*phi.target == *psi.source)) continue;
      auto lhs = compose(graph_corr(phi), graph_corr(psi));
      CHECK(classify(lhs) >= CorrClass::anamorphism);
      CHECK(iso_search(lhs, graph_corr(compose(phi, psi))).found());
    }
  auto c = adm_of_hom(homs[3]).corr;
  auto right = compose(c, graph_corr(identity_qmorphism(c.R2)));
  auto search = iso_search(right, c);
  CHECK(search.found());
}

TEST_CASE("adjunction with the unit") {
  auto homs = sample_homs();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < homs.size(); i += 3) {
    auto c = graph_corr(homs[i]);
    auto adm = admissibilize(c);
    for (const auto& psi : homs) {
      if (!(*psi.source == *c.R1) || !(*psi.target == *c.R2)) continue;
      auto a = adm_of_hom(psi).corr;
      auto check = check_adjunction(adm, a);
      CHECK(check.bijective);
      CHECK(check.from_original == check.from_adm);
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("splittings") {
  for (const auto& m : sample_homs()) {
    auto h = adm_of_hom(m);
    auto rep = splittings(h.corr);
    CHECK(rep.restriction_bijective);
    CHECK(rep.full.size() == rep.degree0.size());
    bool has_distinguished = false;
    for (const auto& s : rep.full) has_distinguished |= s.s.same_maps(h.distinguished.s) && s.induced.same_maps(m);
    CHECK(has_distinguished);
  }
  // K = Z/4 over C1 = Z/2: f0 has no ring-hom section.
  auto r1 = discrete_quasi_ideal(make_cyclic_ring(2));
  auto r2 = half_over_z4();
  Butterfly b{r1, r2, make_cyclic_ring(4), {0, 1, 0, 1}, {0, 1, 2, 3}, {0}, {0, 2}};
  REQUIRE(validate_butterfly(b).ok());
  auto c = from_butterfly(b);
  REQUIRE(classify(c) == CorrClass::admissible);
  auto rep = splittings(c);
  CHECK(rep.full.empty());
  CHECK(rep.degree0.empty());
  CHECK(rep.restriction_bijective);
}

TEST_CASE("inversion") {
  auto q = cyclic_multiplication(4, 2);
  auto id = adm_of_hom(identity_qmorphism(q)).corr;
  CHECK(iso_search(invert(id), id).found());

  auto ideal = from_ideal(make_ideal(make_cyclic_ring(4), {0, 2}));
  auto target = discrete_quasi_ideal(make_cyclic_ring(2));
  QMorphism phi{ideal, target, {0, 1, 0, 1}, {0, 0}};
  REQUIRE(is_quasi_iso(phi).ok());
  auto c = adm_of_hom(phi).corr;
  auto inv = invert(c);
  CHECK(iso_search(an_compose(c, inv), adm_of_hom(identity_qmorphism(ideal)).corr).found());
  CHECK(iso_search(an_compose(inv, c), adm_of_hom(identity_qmorphism(target)).corr).found());

  QMorphism not_qi{discrete_quasi_ideal(make_cyclic_ring(4)), q, {0, 1, 2, 3}, {0}};
  CHECK_THROWS_AS(invert(adm_of_hom(not_qi).corr), PreconditionError);
}

TEST_CASE("coherence") {
  auto q = cyclic_multiplication(4, 2);
  auto id = adm_of_hom(identity_qmorphism(q)).corr;
  auto clean = coherence_suite({{id, id, id}});
  CHECK(clean.ok());
  CHECK(clean.checks == 4);

  auto homs = sample_homs();
  std::vector<CorrTriple> triples;
  for (const auto& a : homs)
    for (const auto& b : homs) {
      if (!(*a.target == *b.source) || triples.size() >= 3) continue;
      triples.push_back({graph_corr(a), adm_of_hom(b).corr, graph_corr(identity_qmorphism(b.target))});
    }
  auto rep = coherence_suite(triples);
  CHECK_MESSAGE(rep.ok(), rep.report.to_string());

  CoherenceOptions corrupt;
  corrupt.compose = [](const DGCorrespondence& a, const DGCorrespondence& b) {
    auto c = compose(a, b);
    auto& g = c.g.ring_part;
    if (g.size() > 1) std::swap(g[0], g[1]);
    return c;
  };
  auto bad = coherence_suite({{id, id, id}}, corrupt);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("functoriality") {
  auto homs = sample_homs();
  std::vector<std::pair<QMorphism, QMorphism>> pairs;
  for (const auto& a : homs)
    for (const auto& b : homs)
      if (*a.target == *b.source && pairs.size() < 8) pairs.emplace_back(a, b);
  auto rep = functoriality_suite(pairs);
  CHECK_MESSAGE(rep.ok(), rep.report.to_string());
}

TEST_CASE("identity cache") {
  IdentityCache cache;
  auto q = cyclic_multiplication(4, 2);
  const auto& a = cache.get(q);
  const auto& b = cache.get(cyclic_multiplication(4, 2));
  CHECK(&a == &b);
  CHECK(cache.size() == 1);
}
