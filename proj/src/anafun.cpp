#include "ringoid/anafun.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ringoid/cone.hpp"

namespace ringoid {

namespace {

bool same_category(const CategoryRef& a, const CategoryRef& b) { return a == b || (a && b && *a == *b); }

void require_equivalence(const CatCorrespondence& c, const char* what) {
  const FunctorAnalysis an = analyze_functor(c.F);
  if (!an.equivalence()) throw PreconditionError(std::string(what) + ": left leg is not an equivalence (" + an.failure + ")", an.witness);
}

// Isomorphisms out of each object.
std::vector<std::vector<Elem>> isos_from(const FiniteCategory& c) {
  std::vector<std::vector<Elem>> out(c.object_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (inverse(c, static_cast<Elem>(f)) != kNone) out[c.src(static_cast<Elem>(f))].push_back(static_cast<Elem>(f));
  return out;
}

// The morphism a -> b over w, kNone if there is none.
Elem lift(const CatCorrespondence& c, Elem a, Elem b, Elem w) {
  for (Elem v : c.C12->hom(a, b))
    if (c.F.morphisms[v] == w) return v;
  return kNone;
}

CatClass below_wadm(const CatCorrespondence& c) {
  return analyze_functor(c.F).surjective_on_objects ? CatClass::ana : CatClass::eq;
}

}  // namespace

ValidationReport validate_cat_correspondence(const CatCorrespondence& c) {
  ValidationReport rep;
  if (!same_category(c.F.source, c.C12) || !same_category(c.G.source, c.C12) || !same_category(c.F.target, c.C1) ||
      !same_category(c.G.target, c.C2)) {
    rep.add("shape", {}, "legs do not match the categories");
    return rep;
  }
  rep.merge(validate_category(*c.C1), "C1/");
  rep.merge(validate_category(*c.C2), "C2/");
  rep.merge(validate_category(*c.C12), "C12/");
  if (!rep.ok()) return rep;
  rep.merge(validate_functor(c.F), "F/");
  rep.merge(validate_functor(c.G), "G/");
  return rep;
}

const char* to_string(CatClass k) {
  switch (k) {
    case CatClass::plain: return "plain";
    case CatClass::eq: return "eq";
    case CatClass::ana: return "ana";
    case CatClass::wadm: return "wadm";
    case CatClass::adm: return "adm";
  }
  return "?";
}

Elem GraphCorr::find(const GraphObject& t) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), t, [](const GraphObject& a, const GraphObject& b) {
    return std::tie(a.c1, a.c2, a.psi) < std::tie(b.c1, b.c2, b.psi);
  });
  if (it == objects.end() || !(*it == t)) return kNone;
  return static_cast<Elem>(it - objects.begin());
}

Elem GraphCorr::find_morphism(Elem source, Elem target, Elem u1, Elem u2) const {
  const std::array<Elem, 4> key{source, target, u1, u2};
  auto it = std::lower_bound(morphisms.begin(), morphisms.end(), key);
  if (it == morphisms.end() || *it != key) return kNone;
  return static_cast<Elem>(it - morphisms.begin());
}

GraphCorr graph(const Functor& phi, const Budget& budget) {
  require_valid(validate_functor(phi), "graph");
  const FiniteCategory& c1 = *phi.source;
  const FiniteCategory& c2 = *phi.target;
  GraphCorr out;
  for (std::size_t a = 0; a < c1.object_count(); ++a)
    for (std::size_t b = 0; b < c2.object_count(); ++b)
      for (Elem psi : c2.hom(phi.objects[a], static_cast<Elem>(b)))
        if (inverse(c2, psi) != kNone) out.objects.push_back({static_cast<Elem>(a), static_cast<Elem>(b), psi});
  budget.check_carrier(out.objects.size(), "graph objects");

  // the middle may reach the square of the bound
  Budget wide = budget;
  wide.max_carrier = budget.max_carrier * budget.max_carrier;
  SearchCounter counter(budget);
  for (std::size_t s = 0; s < out.objects.size(); ++s)
    for (std::size_t t = 0; t < out.objects.size(); ++t) {
      const GraphObject& x = out.objects[s];
      const GraphObject& y = out.objects[t];
      for (Elem u1 : c1.hom(x.c1, y.c1))
        for (Elem u2 : c2.hom(x.c2, y.c2)) {
          counter.tick("graph morphisms");
          if (c2.then(x.psi, u2) == c2.then(phi.morphisms[u1], y.psi))
            out.morphisms.push_back({static_cast<Elem>(s), static_cast<Elem>(t), u1, u2});
        }
    }
  wide.check_carrier(out.morphisms.size(), "graph morphisms");

  std::vector<Arrow> arrows;
  for (const auto& m : out.morphisms) arrows.push_back({m[0], m[1]});
  std::vector<Elem> ident(out.objects.size());
  for (std::size_t s = 0; s < out.objects.size(); ++s) {
    const GraphObject& x = out.objects[s];
    ident[s] = out.find_morphism(static_cast<Elem>(s), static_cast<Elem>(s), c1.identity(x.c1), c2.identity(x.c2));
  }
  const auto& ms = out.morphisms;
  out.corr.C12 = make_category(out.objects.size(), std::move(arrows), std::move(ident), [&](Elem f, Elem g) {
    return out.find_morphism(ms[f][0], ms[g][1], c1.then(ms[f][2], ms[g][2]), c2.then(ms[f][3], ms[g][3]));
  });
  out.corr.C1 = phi.source;
  out.corr.C2 = phi.target;
  out.corr.F = {out.corr.C12, phi.source, {}, {}};
  out.corr.G = {out.corr.C12, phi.target, {}, {}};
  for (const auto& x : out.objects) {
    out.corr.F.objects.push_back(x.c1);
    out.corr.G.objects.push_back(x.c2);
  }
  for (const auto& m : out.morphisms) {
    out.corr.F.morphisms.push_back(m[2]);
    out.corr.G.morphisms.push_back(m[3]);
  }
  return out;
}

QuasiInverse choose_quasi_inverse(const CatCorrespondence& c, bool prefer_last) {
  require_equivalence(c, "choose_quasi_inverse");
  const FiniteCategory& c1 = *c.C1;
  const std::size_t n = c.C12->object_count();
  std::vector<Elem> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Elem>(prefer_last ? n - 1 - i : i);

  QuasiInverse q;
  for (std::size_t a = 0; a < c1.object_count(); ++a) {
    Elem pick = kNone, eps = kNone;
    for (Elem o : order)
      if (c.F.objects[o] == static_cast<Elem>(a)) {
        pick = o;
        eps = c1.identity(static_cast<Elem>(a));
        break;
      }
    for (std::size_t i = 0; pick == kNone && i < n; ++i)
      if (auto iso = find_iso(c1, c.F.objects[order[i]], static_cast<Elem>(a))) {
        pick = order[i];
        eps = *iso;
      }
    q.sigma.push_back(pick);
    q.epsilon.push_back(eps);
  }
  return q;
}

Functor collapse(const CatCorrespondence& c, const QuasiInverse& q) {
  const FiniteCategory& c1 = *c.C1;
  Functor out{c.C1, c.C2, {}, {}};
  for (std::size_t a = 0; a < c1.object_count(); ++a) out.objects.push_back(c.G.objects[q.sigma[a]]);
  for (std::size_t u = 0; u < c1.morphism_count(); ++u) {
    const Elem a = c1.src(static_cast<Elem>(u)), b = c1.tgt(static_cast<Elem>(u));
    const Elem w = c1.then(c1.then(q.epsilon[a], static_cast<Elem>(u)), inverse(c1, q.epsilon[b]));
    const Elem v = lift(c, q.sigma[a], q.sigma[b], w);
    if (v == kNone) throw PreconditionError("collapse: left leg is not full", {static_cast<Elem>(u)});
    out.morphisms.push_back(c.G.morphisms[v]);
  }
  return out;
}

Functor collapse(const CatCorrespondence& c, bool prefer_last) {
  return collapse(c, choose_quasi_inverse(c, prefer_last));
}

Functor unit_functor(const CatCorrespondence& c, const QuasiInverse& q, const GraphCorr& g) {
  const FiniteCategory& c12 = *c.C12;
  Functor out{c.C12, g.corr.C12, {}, {}};
  for (std::size_t o = 0; o < c12.object_count(); ++o) {
    const Elem a = c.F.objects[o];
    const Elem beta = lift(c, q.sigma[a], static_cast<Elem>(o), q.epsilon[a]);
    if (beta == kNone) throw PreconditionError("unit: left leg is not full", {static_cast<Elem>(o)});
    out.objects.push_back(g.find({a, c.G.objects[o], c.G.morphisms[beta]}));
  }
  for (std::size_t w = 0; w < c12.morphism_count(); ++w)
    out.morphisms.push_back(g.find_morphism(out.objects[c12.src(static_cast<Elem>(w))],
                                            out.objects[c12.tgt(static_cast<Elem>(w))], c.F.morphisms[w],
                                            c.G.morphisms[w]));
  return out;
}

CriterionResult criterion_b(const CatCorrespondence& c, const Budget& budget) {
  CriterionResult r;
  const FunctorAnalysis an = analyze_functor(c.F);
  if (!an.equivalence()) {
    r.witness = an.witness;
    return r;
  }
  const QuasiInverse q = choose_quasi_inverse(c);
  const GraphCorr g = graph(collapse(c, q), budget);
  const Functor u = unit_functor(c, q, g);

  std::vector<Elem> first(g.objects.size(), kNone);
  bool injective = true;
  for (std::size_t o = 0; o < u.objects.size(); ++o) {
    Elem& slot = first[u.objects[o]];
    if (slot != kNone && injective) {
      injective = false;
      r.witness = {slot, static_cast<Elem>(o)};
    }
    if (slot == kNone) slot = static_cast<Elem>(o);
  }
  auto missing = std::find(first.begin(), first.end(), kNone);
  if (missing != first.end()) {
    r.label = below_wadm(c);
    r.witness = {static_cast<Elem>(missing - first.begin())};
    return r;
  }
  r.label = injective ? CatClass::adm : CatClass::wadm;
  return r;
}

CriterionResult criterion_c(const CatCorrespondence& c) {
  CriterionResult r;
  const FunctorAnalysis an = analyze_functor(c.F);
  if (!an.equivalence()) {
    r.witness = an.witness;
    return r;
  }
  const auto iso12 = isos_from(*c.C12);
  const auto iso1 = isos_from(*c.C1);
  const auto iso2 = isos_from(*c.C2);
  bool unique = true;
  for (std::size_t o = 0; o < iso12.size(); ++o)
    for (Elem a1 : iso1[c.F.objects[o]])
      for (Elem a2 : iso2[c.G.objects[o]]) {
        std::size_t lifts = 0;
        for (Elem a : iso12[o])
          if (c.F.morphisms[a] == a1 && c.G.morphisms[a] == a2) ++lifts;
        if (lifts == 0) {
          r.label = below_wadm(c);
          r.witness = {static_cast<Elem>(o), a1, a2};
          return r;
        }
        if (lifts > 1 && unique) {
          unique = false;
          r.witness = {static_cast<Elem>(o), a1, a2};
        }
      }
  r.label = unique ? CatClass::adm : CatClass::wadm;
  return r;
}

CatClassification classify_cat(const CatCorrespondence& c, const Budget& budget) {
  require_valid(validate_cat_correspondence(c), "classify_cat");
  return {criterion_b(c, budget).label, criterion_c(c).label};
}

void enumerate_cat_corr_morphisms(const CatCorrespondence& a, const CatCorrespondence& b, const Budget& budget,
                                  const std::function<bool(const Functor&)>& visit) {
  FunctorConstraints k;
  k.object_allowed = [&](Elem o, Elem img) {
    return b.F.objects[img] == a.F.objects[o] && b.G.objects[img] == a.G.objects[o];
  };
  k.morphism_allowed = [&](Elem m, Elem img) {
    return b.F.morphisms[img] == a.F.morphisms[m] && b.G.morphisms[img] == a.G.morphisms[m];
  };
  enumerate_functors(a.C12, b.C12, k, budget, visit);
}

std::size_t count_cat_corr_morphisms(const CatCorrespondence& a, const CatCorrespondence& b, const Budget& budget) {
  std::size_t n = 0;
  enumerate_cat_corr_morphisms(a, b, budget, [&](const Functor&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<Functor> find_cat_corr_iso(const CatCorrespondence& a, const CatCorrespondence& b,
                                         const Budget& budget) {
  if (a.C12->object_count() != b.C12->object_count() || a.C12->morphism_count() != b.C12->morphism_count())
    return std::nullopt;
  std::optional<Functor> found;
  enumerate_cat_corr_morphisms(a, b, budget, [&](const Functor& h) {
    std::vector<Elem> om = h.objects, mm = h.morphisms;
    std::sort(om.begin(), om.end());
    std::sort(mm.begin(), mm.end());
    if (std::adjacent_find(om.begin(), om.end()) != om.end() || std::adjacent_find(mm.begin(), mm.end()) != mm.end())
      return true;
    found = h;
    return false;
  });
  return found;
}

CatCorrespondence quotient_saturation(const CatCorrespondence& c) {
  require_equivalence(c, "quotient_saturation");
  const FiniteCategory& c1 = *c.C1;
  const FiniteCategory& c12 = *c.C12;
  const std::size_t n = c12.object_count();

  std::vector<Elem> cls(n, kNone);
  std::vector<Elem> reps;
  for (std::size_t o = 0; o < n; ++o) {
    if (cls[o] != kNone) continue;
    cls[o] = static_cast<Elem>(reps.size());
    for (std::size_t p = o + 1; p < n; ++p) {
      if (cls[p] != kNone || c.F.objects[p] != c.F.objects[o] || c.G.objects[p] != c.G.objects[o]) continue;
      std::vector<Elem> over_id;
      for (Elem a : c12.hom(static_cast<Elem>(o), static_cast<Elem>(p)))
        if (c.F.morphisms[a] == c1.identity(c.F.objects[o]) && inverse(c12, a) != kNone) over_id.push_back(a);
      if (over_id.size() != 1)
        throw PreconditionError("quotient_saturation: iso over the identity is not unique",
                                {static_cast<Elem>(o), static_cast<Elem>(p)});
      if (c.G.morphisms[over_id[0]] == c.C2->identity(c.G.objects[o])) cls[p] = cls[o];
    }
    reps.push_back(static_cast<Elem>(o));
  }

  std::map<std::array<Elem, 3>, Elem> index;
  std::vector<std::array<Elem, 3>> mor;
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t l = 0; l < reps.size(); ++l)
      for (Elem u : c1.hom(c.F.objects[reps[k]], c.F.objects[reps[l]])) {
        index[{static_cast<Elem>(k), static_cast<Elem>(l), u}] = static_cast<Elem>(mor.size());
        mor.push_back({static_cast<Elem>(k), static_cast<Elem>(l), u});
      }
  std::vector<Arrow> arrows;
  for (const auto& m : mor) arrows.push_back({m[0], m[1]});
  std::vector<Elem> ident;
  for (std::size_t k = 0; k < reps.size(); ++k)
    ident.push_back(index.at({static_cast<Elem>(k), static_cast<Elem>(k), c1.identity(c.F.objects[reps[k]])}));

  CatCorrespondence out;
  out.C1 = c.C1;
  out.C2 = c.C2;
  out.C12 = make_category(reps.size(), std::move(arrows), std::move(ident),
                          [&](Elem f, Elem g) { return index.at({mor[f][0], mor[g][1], c1.then(mor[f][2], mor[g][2])}); });
  out.F = {out.C12, c.C1, {}, {}};
  out.G = {out.C12, c.C2, {}, {}};
  for (Elem r : reps) {
    out.F.objects.push_back(c.F.objects[r]);
    out.G.objects.push_back(c.G.objects[r]);
  }
  for (const auto& m : mor) {
    out.F.morphisms.push_back(m[2]);
    const Elem v = lift(c, reps[m[0]], reps[m[1]], m[2]);
    if (v == kNone) throw PreconditionError("quotient_saturation: left leg is not full", {m[2]});
    out.G.morphisms.push_back(c.G.morphisms[v]);
  }
  return out;
}

SaturateResult saturate(const CatCorrespondence& c, const Budget& budget) {
  require_valid(validate_cat_correspondence(c), "saturate");
  const QuasiInverse q = choose_quasi_inverse(c);
  GraphCorr g = graph(collapse(c, q), budget);
  SaturateResult out{g.corr, unit_functor(c, q, g), std::nullopt, false};
  if (criterion_b(c, budget).label >= CatClass::wadm) {
    out.quotient = quotient_saturation(c);
    out.quotient_isomorphic = find_cat_corr_iso(*out.quotient, out.saturated, budget).has_value();
  }
  return out;
}

CatCorrespondence compose_cat(const CatCorrespondence& a, const CatCorrespondence& b, const Budget& budget) {
  Budget wide = budget;
  wide.max_carrier = budget.max_carrier * budget.max_carrier;
  const CategoryFiberProduct fp = fiber_product(a.G, b.F, wide);
  return {a.C1, b.C2, fp.category, compose(fp.first, a.F), compose(fp.second, b.G)};
}

CatCorrespondence cone_image(const DGCorrespondence& c, const Budget& budget) {
  Budget wide = budget;
  wide.max_carrier = budget.max_carrier * budget.max_carrier;
  const CategoryRef g1 = underlying_groupoid(cone(*c.R1, wide));
  const CategoryRef g2 = underlying_groupoid(cone(*c.R2, wide));
  const CategoryRef g12 = underlying_groupoid(cone(*c.R12, wide));
  return {g1, g2, g12, cone_functor(c.f, g12, g1), cone_functor(c.g, g12, g2)};
}

BridgeReport bridge_two_notions(const DGCorrespondence& c, const Budget& budget) {
  Budget wide = budget;
  wide.max_carrier = budget.max_carrier * budget.max_carrier;
  BridgeReport r;
  r.dg = classify(c);
  const CatClassification k = classify_cat(cone_image(c, budget), wide);
  r.cat = k.label;
  r.cat_criteria_agree = k.agree();
  r.adm_agree = (r.dg == CorrClass::admissible) == (r.cat == CatClass::adm);
  r.wadm_agree = (r.dg >= CorrClass::weakly_admissible) == (r.cat >= CatClass::wadm);
  r.ana_agree = (r.dg >= CorrClass::anamorphism) == (r.cat >= CatClass::ana);
  r.eq_agree = (r.dg >= CorrClass::equivalence_leg) == (r.cat >= CatClass::eq);
  return r;
}

}  // namespace ringoid
