#include "ringoid/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "ringoid/cone.hpp"
#include "ringoid/search.hpp"

namespace ringoid {

namespace {

std::string list(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string first_violation(const ValidationReport& r) {
  return r.ok() ? std::string("ok") : r.violations.front().law + " " + list(r.violations.front().witness);
}

struct Run {
  SuiteResult& r;

  void fail(const std::string& instance, const std::string& what) { r.failures.push_back(instance + ": " + what); }
  void check(bool ok, const std::string& instance, const std::string& what) {
    ++r.checks;
    if (!ok) fail(instance, what);
  }
  // Runs one instance; precondition and shape errors are failures of that instance.
  template <class F>
  void instance(const std::string& name, F&& body) {
    ++r.instances;
    try {
      body();
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const RingoidError& e) {
      fail(name, std::string("error: ") + e.what());
    }
  }
  void note(const std::string& s) { r.notes.push_back(s); }
};

std::size_t carrier(const DGCorrespondence& c) { return c.R12->ring_size() * c.R12->module_size(); }

bool same_ends(const DGCorrespondence& a, const DGCorrespondence& b) { return *a.R1 == *b.R1 && *a.R2 == *b.R2; }

// criterion 1
void leibniz(Run& run, const Corpus& corpus) {
  std::size_t valid = 0, pinned = 0;
  for (const auto& c : corpus.candidates)
    run.instance(c.name, [&] {
      const ValidationReport a = validate_quasi_ideal(*c.value);
      const ValidationReport b = dg_leibniz_report(*c.value);
      valid += a.ok();
      run.check(a.ok() == b.ok(), c.name, "laws " + first_violation(a) + " vs Leibniz " + first_violation(b));
      if (c.name.rfind("Z/2; Z/2+Z/2; d=(x,y)->x", 0) == 0) {
        ++pinned;
        const Violation* v = a.find("quasi-ideal-law");
        run.check(v && v->witness == std::vector<Elem>{1, 2}, c.name, "expected quasi-ideal-law witness [1,2]");
      }
    });
  run.check(corpus.candidates.size() >= 200, "corpus", "fewer than 200 candidates");
  run.check(pinned == 1, "corpus", "missing the Z/2+Z/2 projection");
  run.note("valid " + std::to_string(valid) + ", invalid " + std::to_string(corpus.candidates.size() - valid));
}

// criterion 2
void roundtrip(Run& run, const Corpus& corpus, const Budget& budget) {
  for (const auto& q : corpus.quasi_ideals)
    run.instance(q.name, [&] {
      const Trunc1SimpRing t = q_to_simplicial(*q.value, budget);
      run.check(validate_simplicial(t).ok() && is_good(t), q.name, "nerve is not a good simplicial ring");
      run.check(*simplicial_to_q(t) == *q.value, q.name, "q -> t -> q is not the identity");
    });
  std::size_t good = 0;
  for (const auto& t : corpus.simplicial) {
    if (!is_good(t.value)) continue;
    ++good;
    run.instance(t.name, [&] {
      const Trunc1SimpRing back = q_to_simplicial(*simplicial_to_q(t.value), budget);
      run.check(find_simplicial_isomorphism(t.value, back, budget).has_value(), t.name, "t -> q -> t not isomorphic");
    });
  }
  run.note("good truncations " + std::to_string(good));
}

// criterion 3
void goodness(Run& run, const Corpus& corpus) {
  std::size_t bad = 0;
  bool cubic = false;
  for (const auto& t : corpus.simplicial)
    run.instance(t.name, [&] {
      const bool good = is_good(t.value);
      bad += !good;
      std::vector<Elem> witness;
      bool built = true;
      try {
        composition_from_truncation(t.value);
      } catch (const PreconditionError& e) {
        built = false;
        witness = e.witness();
      }
      run.check(built == good, t.name, built ? "composition built on a non-good instance" : "composition rejected on a good instance");
      if (t.name == "Z/2[x]/(x^3) over Z/2") {
        cubic = true;
        run.check(witness == std::vector<Elem>{2, 2}, t.name, "expected witness (x, x) = [2,2], got " + list(witness));
      }
    });
  run.check(cubic, "corpus", "missing Z/2[x]/(x^3)");
  run.note("non-good " + std::to_string(bad));
}

// criterion 4
void cone_laws(Run& run, const Corpus& corpus, const Budget& budget) {
  bool pinned = false;
  for (const auto& q : corpus.quasi_ideals)
    run.instance(q.name, [&] {
      const InternalRingGroupoid g = cone(*q.value, budget);
      const ValidationReport rep = validate_internal_groupoid(g, budget);
      run.check(rep.ok(), q.name, first_violation(rep));
      const CategoryRef cat = underlying_groupoid(g);
      const QuotientRing p0 = pi0(*q.value);
      const Pi1 p1 = pi1(*q.value);
      run.check(component_count(*cat) == p0.ring->size(), q.name, "component count differs from |pi0|");
      for (std::size_t a = 0; a < cat->object_count(); ++a)
        run.check(find_group_isomorphism(automorphism_group(*cat, static_cast<Elem>(a)), p1.automorphisms.group(), budget)
                      .has_value(),
                  q.name, "Aut(" + std::to_string(a) + ") not isomorphic to pi1");
      if (q.name == "Z/4; Z/4; d=[0,2,0,2]") {
        pinned = true;
        run.check(p0.ring->size() == 2 && p1.automorphisms.size() == 2 && cat->object_count() == 4 &&
                      cat->morphism_count() == 16,
                  q.name, "expected |pi0| = 2, |pi1| = 2, 4 objects, 16 morphisms");
      }
    });
  run.check(pinned, "corpus", "missing (Z/4, Z/4, 2)");
}

// criterion 5
void quasi_iso(Run& run, const Corpus& corpus) {
  std::size_t yes = 0;
  for (const auto& m : corpus.morphisms)
    run.instance(m.name, [&] {
      const bool qi = is_quasi_iso(m.value).ok();
      yes += qi;
      const FunctorAnalysis an = analyze_functor(cone_functor(m.value));
      run.check(qi == an.equivalence(), m.name, qi ? "quasi-iso but cone functor not an equivalence" : "cone functor an equivalence but not a quasi-iso");
    });
  run.check(corpus.morphisms.size() >= 50, "corpus", "fewer than 50 morphisms");
  run.note("quasi-isos " + std::to_string(yes) + " of " + std::to_string(corpus.morphisms.size()));
}

// criterion 6
void butterfly(Run& run, const Corpus& corpus) {
  for (const auto& c : corpus.correspondences) {
    if (classify(c.value) != CorrClass::admissible) continue;
    run.instance(c.name, [&] {
      const Butterfly b = to_butterfly(c.value);
      const ValidationReport rep = validate_butterfly(b);
      run.check(rep.ok(), c.name, first_violation(rep));
      const DGCorrespondence back = from_butterfly(b);
      run.check(*back.R12 == *c.value.R12 && back.f.same_maps(c.value.f) && back.g.same_maps(c.value.g), c.name,
                "from_butterfly(to_butterfly(c)) != c");
      run.check(to_butterfly(back) == b, c.name, "to_butterfly(from_butterfly(b)) != b");
    });
  }
}

// criterion 7
void adjunction(Run& run, const Corpus& corpus, const Budget& budget) {
  std::vector<const Named<DGCorrespondence>*> admissible;
  for (const auto& c : corpus.correspondences)
    if (classify(c.value) == CorrClass::admissible) admissible.push_back(&c);
  std::size_t pairs = 0, skipped = 0;
  for (const auto& c : corpus.correspondences) {
    if (classify(c.value) < CorrClass::anamorphism) continue;
    run.instance(c.name, [&] {
      const AdmResult adm = admissibilize(c.value, budget);
      for (const auto* a : admissible) {
        if (!same_ends(c.value, a->value)) continue;
        if (carrier(c.value) + carrier(a->value) > 256) {
          ++skipped;
          continue;
        }
        ++pairs;
        const AdjunctionCheck k = check_adjunction(adm, a->value, budget);
        run.check(k.bijective, c.name + " vs " + a->name,
                  std::to_string(k.from_original) + " morphisms from c, " + std::to_string(k.from_adm) + " from Adm(c)");
      }
    });
  }
  run.note("pairs " + std::to_string(pairs) + ", over the carrier limit " + std::to_string(skipped));
}

// criterion 8
void weak(Run& run, const Corpus& corpus, const Budget& budget) {
  for (const auto& c : corpus.correspondences) {
    if (classify(c.value) != CorrClass::weakly_admissible) continue;
    run.instance(c.name, [&] {
      const WeakAdmResult w = admissibilize_weak(c.value);
      run.check(w.f_surjective, c.name, "f not surjective");
      run.check(w.kernel_acyclic, c.name, "Ker f not acyclic");
      run.check(w.ideal_acyclic, c.name, "generated ideal not acyclic");
      run.check(classify(w.admissible) == CorrClass::admissible, c.name, "quotient not admissible");
      run.check(iso_search(w.admissible, admissibilize(c.value, budget).admissible, budget).found(), c.name,
                "quotient not isomorphic to the pushout");
    });
  }
}

// criterion 9: exactly one iso u with u ∘ unit compatible with the distinguished splitting
void adm_of_hom_suite(Run& run, const Corpus& corpus, const Budget& budget) {
  std::size_t literal = 0;
  for (const auto& m : corpus.morphisms)
    run.instance(m.name, [&] {
      const AdmOfHom e = adm_of_hom(m.value, budget);
      const AdmResult adm = admissibilize(graph_corr(m.value), budget);
      const IsoSearch all = iso_search(adm.admissible, e.corr, budget);
      run.check(all.found(), m.name, "no isomorphism");
      std::size_t compatible = 0;
      bool invertible = true;
      enumerate_corr_morphisms(adm.admissible, e.corr, budget, [&](const CorrMorphism& u) {
        if (compose(adm.unit.h, u.h).same_maps(e.distinguished.s)) {
          ++compatible;
          invertible = invertible && is_iso(u);
        }
        return true;
      });
      run.check(compatible == 1 && invertible, m.name,
                std::to_string(compatible) + " isomorphisms compatible with the unit");
      literal += all.isomorphisms == 1;
    });
  run.note("literally unique " + std::to_string(literal) + " of " + std::to_string(corpus.morphisms.size()));
}

// criterion 10
void splitting(Run& run, const Corpus& corpus, const Budget& budget) {
  std::size_t empty = 0;
  for (const auto& c : corpus.correspondences) {
    if (classify(c.value) != CorrClass::admissible) continue;
    run.instance(c.name, [&] {
      const SplittingReport s = splittings(c.value, budget);
      run.check(s.full.size() == s.degree0.size() && s.restriction_bijective, c.name,
                std::to_string(s.full.size()) + " splittings, " + std::to_string(s.degree0.size()) + " in degree 0");
      empty += s.full.empty();
    });
  }
  run.check(empty > 0, "corpus", "no instance without splittings");
  run.note("without splittings " + std::to_string(empty));
}

// criterion 11
void coherence(Run& run, const Corpus& corpus, const Budget& budget) {
  std::vector<std::pair<std::string, CorrTriple>> triples;
  std::vector<const Named<QMorphism>*> ms;
  for (const auto& m : corpus.morphisms)
    if (m.value.source->ring_size() * m.value.source->module_size() <= 8 &&
        m.value.target->ring_size() * m.value.target->module_size() <= 8)
      ms.push_back(&m);
  std::vector<std::array<const Named<QMorphism>*, 3>> chains;
  for (const auto* a : ms)
    for (const auto* b : ms) {
      if (!(*a->value.target == *b->value.source)) continue;
      for (const auto* c : ms)
        if (*b->value.target == *c->value.source) chains.push_back({a, b, c});
    }
  const std::size_t want = 24;
  const std::size_t stride = std::max<std::size_t>(1, chains.size() / want);
  for (std::size_t i = 0; i < chains.size() && triples.size() < want; i += stride) {
    const auto& [a, b, c] = chains[i];
    triples.push_back({a->name + " | " + b->name + " | " + c->name,
                       {adm_of_hom(a->value, budget).corr, adm_of_hom(b->value, budget).corr, graph_corr(c->value)}});
  }
  CoherenceOptions opt;
  opt.budget = budget;
  std::size_t literal = 0;
  for (const auto& [name, t] : triples)
    run.instance(name, [&] {
      const CoherenceReport rep = coherence_suite({t}, opt);
      run.r.checks += rep.checks;
      literal += rep.literal_unique;
      if (!rep.ok()) run.fail(name, first_violation(rep.report));
    });
  run.check(triples.size() >= 20, "corpus", "fewer than 20 composable triples");
  run.note("triples " + std::to_string(triples.size()) + ", literally unique isos " + std::to_string(literal));
}

// criterion 12
void anafun(Run& run, const Corpus& corpus, const Budget& budget) {
  std::size_t by_label[5] = {};
  for (const auto& c : corpus.cat_correspondences)
    run.instance(c.name, [&] {
      const CriterionResult b = criterion_b(c.value, budget);
      const CriterionResult k = criterion_c(c.value);
      ++by_label[static_cast<int>(b.label)];
      run.check(b.label == k.label, c.name,
                std::string("criterion (b) ") + to_string(b.label) + ", criterion (c) " + to_string(k.label));
    });
  run.check(corpus.cat_correspondences.size() >= 100, "corpus", "fewer than 100 correspondences");
  std::ostringstream os;
  for (int i = 0; i < 5; ++i) os << (i ? ", " : "") << to_string(static_cast<CatClass>(i)) << " " << by_label[i];
  run.note(os.str());

  auto functors = [&](const CategoryRef& a, const CategoryRef& b) {
    std::vector<Functor> out;
    enumerate_functors(a, b, {}, budget, [&](const Functor& f) {
      out.push_back(f);
      return true;
    });
    return out;
  };
  std::size_t ff = 0, adj = 0;
  for (const auto& a : corpus.categories)
    for (const auto& b : corpus.categories) {
      if (a.value->object_count() > 4 || b.value->object_count() > 4) continue;
      if (a.value->object_count() + b.value->object_count() > 6) continue;  // keeps the pair count small
      const auto fs = functors(a.value, b.value);
      const std::string name = a.name + " -> " + b.name;
      run.instance("graph " + name, [&] {
        for (std::size_t i = 0; i < fs.size(); ++i)
          for (std::size_t j = 0; j < fs.size(); ++j) {
            ++ff;
            const std::size_t nat = count_natural_transformations(fs[i], fs[j], true, budget);
            const std::size_t mor = count_cat_corr_morphisms(graph(fs[i], budget).corr, graph(fs[j], budget).corr, budget);
            run.check(nat == mor, name + " #" + std::to_string(i) + "," + std::to_string(j),
                      std::to_string(nat) + " natural isos, " + std::to_string(mor) + " correspondence morphisms");
          }
      });
    }
  for (const auto& c : corpus.cat_correspondences) {
    if (!analyze_functor(c.value.F).equivalence() || c.value.C12->object_count() > 4) continue;
    run.instance("adjunction " + c.name, [&] {
      const Functor col = collapse(c.value);
      for (const auto& psi : functors(c.value.C1, c.value.C2)) {
        ++adj;
        const std::size_t nat = count_natural_transformations(col, psi, true, budget);
        const std::size_t mor = count_cat_corr_morphisms(c.value, graph(psi, budget).corr, budget);
        run.check(nat == mor, c.name, std::to_string(nat) + " natural isos from the collapse, " + std::to_string(mor) +
                                          " correspondence morphisms to the graph");
      }
    });
  }
  run.note("full faithfulness pairs " + std::to_string(ff) + ", adjunction pairs " + std::to_string(adj));
}

// criterion 13
void bridge(Run& run, const Corpus& corpus, const Budget& budget) {
  std::map<std::string, std::size_t> seen;
  for (const auto& c : corpus.correspondences)
    run.instance(c.name, [&] {
      const BridgeReport b = bridge_two_notions(c.value, budget);
      ++seen[std::string(to_string(b.dg)) + "/" + to_string(b.cat)];
      run.check(b.ok(), c.name, std::string("DG ") + to_string(b.dg) + ", categorical " + to_string(b.cat) +
                                    (b.cat_criteria_agree ? "" : ", criteria disagree"));
    });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : seen) {
    os << (first ? "" : ", ") << k << " " << n;
    first = false;
  }
  run.note(os.str());
}

struct SuiteDef {
  std::string name;
  int criterion;
  std::function<void(Run&, const Corpus&, const Budget&)> body;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"leibniz", 1, [](Run& r, const Corpus& c, const Budget&) { leibniz(r, c); }},
      {"roundtrip", 2, roundtrip},
      {"goodness", 3, [](Run& r, const Corpus& c, const Budget&) { goodness(r, c); }},
      {"cone", 4, cone_laws},
      {"quasi-iso", 5, [](Run& r, const Corpus& c, const Budget&) { quasi_iso(r, c); }},
      {"butterfly", 6, [](Run& r, const Corpus& c, const Budget&) { butterfly(r, c); }},
      {"adjunction", 7, adjunction},
      {"weak", 8, weak},
      {"adm-of-hom", 9, adm_of_hom_suite},
      {"splitting", 10, splitting},
      {"coherence", 11, coherence},
      {"anafun", 12, anafun},
      {"bridge", 13, bridge},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const Corpus& corpus, const Budget& budget) {
  for (const auto& s : suites())
    if (s.name == name) {
      SuiteResult r;
      r.name = s.name;
      r.criterion = s.criterion;
      Run run{r};
      s.body(run, corpus, budget);
      return r;
    }
  throw MalformedInput("unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const std::string& selection, const Corpus& corpus, const Budget& budget) {
  std::vector<SuiteResult> out;
  if (selection == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, corpus, budget));
    return out;
  }
  std::stringstream ss(selection);
  std::string n;
  while (std::getline(ss, n, ','))
    if (!n.empty()) out.push_back(run_suite(n, corpus, budget));
  return out;
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass();
    os << (r.pass() ? "PASS " : "FAIL ") << r.name << " (criterion " << r.criterion << "): " << r.instances
       << " instances, " << r.checks << " checks\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) os << "  fail: " << r.failures[i] << "\n";
    if (r.failures.size() > shown) os << "  fail: ... " << r.failures.size() - shown << " more\n";
  }
  os << "summary: " << passed << "/" << results.size() << " suites pass\n";
  return os.str();
}

}  // namespace ringoid
