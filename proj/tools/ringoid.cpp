// Batch front end: validate, convert, classify and law-check JSON inputs.
// Exit codes: 0 pass, 1 law failure, 2 parse error, 3 budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringoid/json_io.hpp"
#include "ringoid/laws.hpp"

using namespace ringoid;

namespace {

enum Exit { kPass = 0, kLawFailure = 1, kParseError = 2, kBudget = 3 };

struct Options {
  std::uint64_t seed = 0;
  std::string budget;
  std::string suite = "all";
  std::string out;
  std::vector<std::string> inputs;
};

std::string list(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// status line plus one line per violation
int report(std::ostream& os, const ValidationReport& rep) {
  os << "status: " << (rep.ok() ? "pass" : "fail") << "\n";
  for (const auto& v : rep.violations) os << "violation: " << v.law << " witness " << list(v.witness) << "\n";
  return rep.ok() ? kPass : kLawFailure;
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) throw MalformedInput("top level must be an object");
  if (j.contains("R12")) return "correspondence";
  if (j.contains("K")) return "butterfly";
  if (j.contains("A0")) return "simplicial";
  if (j.contains("source") && j.contains("target")) return "morphism";
  if (j.contains("C") && j.contains("I")) return "quasi-ideal";
  if (j.contains("objects") && j.contains("morphisms")) return "category";
  if (j.contains("mul")) return "ring";
  throw MalformedInput("unrecognized document");
}

const Json& single_input(const Options& o, std::vector<Json>& docs, std::size_t n = 1) {
  if (o.inputs.size() != n) throw MalformedInput("expected " + std::to_string(n) + " input file(s)");
  for (const auto& p : o.inputs) docs.push_back(read_json_file(p));
  return docs.front();
}

int cmd_validate(const Options& o, std::ostream& os) {
  std::vector<Json> docs;
  const Json& j = single_input(o, docs);
  const std::string kind = kind_of(j);
  os << "kind: " << kind << "\n";
  if (kind == "ring") return report(os, validate_ring(*ring_from_json(j)));
  if (kind == "quasi-ideal") {
    auto q = quasi_ideal_from_json(j);
    ValidationReport rep = validate_ring(*q->ring);
    rep.merge(validate_module(q->module), "module/");
    if (rep.ok()) rep = validate_quasi_ideal(*q);
    return report(os, rep);
  }
  if (kind == "simplicial") {
    auto t = simplicial_from_json(j);
    ValidationReport rep = validate_simplicial(t);
    if (rep.ok()) rep.merge(goodness_report(t), "");
    return report(os, rep);
  }
  if (kind == "morphism") return report(os, validate_qmorphism(qmorphism_from_json(j)));
  if (kind == "correspondence") return report(os, validate_correspondence(correspondence_from_json(j)));
  if (kind == "butterfly") return report(os, validate_butterfly(butterfly_from_json(j)));
  return report(os, validate_category(*category_from_json(j)));
}

int cmd_convert(const Options& o, std::ostream& os) {
  std::vector<Json> docs;
  const Json& j = single_input(o, docs);
  const std::string kind = kind_of(j);
  const Budget budget = o.budget.empty() ? Budget::from_environment() : Budget::parse(o.budget);
  if (kind == "quasi-ideal") {
    auto q = quasi_ideal_from_json(j);
    require_valid(validate_quasi_ideal(*q), "convert");
    os << to_json(q_to_simplicial(*q, budget)).dump() << "\n";
    return kPass;
  }
  if (kind == "simplicial") {
    auto t = simplicial_from_json(j);
    require_valid(validate_simplicial(t), "convert");
    os << to_json(*simplicial_to_q(t)).dump() << "\n";
    return kPass;
  }
  throw MalformedInput("convert takes a quasi-ideal or a simplicial ring");
}

int cmd_cone(const Options& o, std::ostream& os, const Budget& budget) {
  std::vector<Json> docs;
  auto q = quasi_ideal_from_json(single_input(o, docs));
  require_valid(validate_quasi_ideal(*q), "cone");
  const InternalRingGroupoid g = cone(*q, budget);
  os << to_json(g).dump() << "\n";
  const CategoryRef cat = underlying_groupoid(g);
  os << "objects: " << cat->object_count() << "\nmorphisms: " << cat->morphism_count()
     << "\ncomponents: " << component_count(*cat) << "\n";
  return report(os, validate_internal_groupoid(g, budget));
}

int cmd_classify(const Options& o, std::ostream& os, const Budget& budget) {
  std::vector<Json> docs;
  const Json& j = single_input(o, docs);
  auto c = correspondence_from_json(j);
  require_valid(validate_correspondence(c), "classify");
  const BridgeReport b = bridge_two_notions(c, budget);
  os << "class: " << to_string(b.dg) << "\ncategorical: " << to_string(b.cat) << "\n";
  os << "criteria agree: " << (b.cat_criteria_agree ? "yes" : "no") << "\n";
  os << "notions agree: " << (b.ok() ? "yes" : "no") << "\n";
  return b.ok() ? kPass : kLawFailure;
}

int cmd_butterfly(const Options& o, std::ostream& os) {
  std::vector<Json> docs;
  auto c = correspondence_from_json(single_input(o, docs));
  require_valid(validate_correspondence(c), "butterfly");
  const Butterfly b = to_butterfly(c);
  os << to_json(b).dump() << "\n";
  const ValidationReport rep = validate_butterfly(b);
  const DGCorrespondence back = from_butterfly(b);
  os << "roundtrip: " << (*back.R12 == *c.R12 && back.f.same_maps(c.f) && back.g.same_maps(c.g) ? "yes" : "no") << "\n";
  return report(os, rep);
}

int cmd_compose(const Options& o, std::ostream& os, const Budget& budget) {
  std::vector<Json> docs;
  single_input(o, docs, 2);
  auto a = correspondence_from_json(docs[0]);
  auto b = correspondence_from_json(docs[1]);
  require_valid(validate_correspondence(a), "compose (first)");
  require_valid(validate_correspondence(b), "compose (second)");
  if (!(*a.R2 == *b.R1)) throw PreconditionError("compose: ends do not match");
  const DGCorrespondence c = compose(a, b, budget);
  os << to_json(c).dump() << "\n";
  os << "class: " << to_string(classify(c)) << "\n";
  return report(os, validate_correspondence(c));
}

int cmd_adm(const Options& o, std::ostream& os, const Budget& budget) {
  std::vector<Json> docs;
  auto c = correspondence_from_json(single_input(o, docs));
  require_valid(validate_correspondence(c), "adm");
  const AdmResult adm = admissibilize(c, budget);
  os << to_json(adm.admissible).dump() << "\n";
  os << "input class: " << to_string(classify(c)) << "\n";
  os << "output class: " << to_string(classify(adm.admissible)) << "\n";
  ValidationReport rep = validate_correspondence(adm.admissible);
  rep.merge(validate_corr_morphism(adm.unit), "unit/");
  if (classify(adm.admissible) != CorrClass::admissible) rep.add("admissible", {});
  if (classify(c) == CorrClass::weakly_admissible) {
    const WeakAdmResult w = admissibilize_weak(c);
    const bool iso = iso_search(w.admissible, adm.admissible, budget).found();
    os << "weak shortcut isomorphic: " << (iso ? "yes" : "no") << "\n";
    if (!iso) rep.add("weak-shortcut", {});
  }
  return report(os, rep);
}

int cmd_pi(const Options& o, std::ostream& os) {
  std::vector<Json> docs;
  auto q = quasi_ideal_from_json(single_input(o, docs));
  require_valid(validate_quasi_ideal(*q), "pi");
  const QuotientRing p0 = pi0(*q);
  const Pi1 p1 = pi1(*q);
  os << "pi0 size: " << p0.ring->size() << "\n";
  os << "pi0 representatives: " << list(p0.representative) << "\n";
  os << "pi1 size: " << p1.automorphisms.size() << "\n";
  os << "pi1 elements: " << list(p1.inclusion) << "\n";
  os << "pi0: " << to_json(*p0.ring).dump() << "\n";
  os << "pi1: " << to_json(p1.automorphisms).dump() << "\n";
  return kPass;
}

int cmd_laws(const Options& o, std::ostream& os, const Budget& budget) {
  if (!o.inputs.empty()) throw MalformedInput("laws takes no input files");
  const Corpus corpus = generate_instances(o.seed, {}, budget);
  const auto results = run_suites(o.suite, corpus, budget);
  os << "seed: " << o.seed << "\n";
  os << "corpus: " << corpus.quasi_ideals.size() << " quasi-ideals, " << corpus.candidates.size() << " candidates, "
     << corpus.simplicial.size() << " truncations, " << corpus.morphisms.size() << " morphisms, "
     << corpus.correspondences.size() << " correspondences, " << corpus.cat_correspondences.size()
     << " categorical correspondences\n";
  os << format_report(results);
  for (const auto& r : results)
    if (!r.pass()) return kLawFailure;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringoid: ring groupoids over finite commutative rings"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for generated instances")->capture_default_str();
  app.add_option("--budget", o.budget, "carrier=N,search=M or a bare search limit (overrides RINGOID_BUDGET)");
  app.add_option("--suite", o.suite, "law suite(s), comma separated, or all")->capture_default_str();
  app.add_option("--out", o.out, "write the report here instead of stdout");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check the laws of any supported JSON document"},
      {"convert", "quasi-ideal <-> truncated simplicial ring"},
      {"cone", "the groupoid internal to rings of a quasi-ideal"},
      {"classify", "class of a correspondence, with the categorical cross-check"},
      {"butterfly", "butterfly of an admissible correspondence"},
      {"compose", "fiber-product composite of two correspondences"},
      {"adm", "admissibilization of an anamorphism"},
      {"pi", "pi0 and pi1 of a quasi-ideal"},
      {"laws", "run the law suites on the generated corpus"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", o.inputs, "input JSON files");
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream body;
  int code = kPass;
  try {
    const Budget budget = o.budget.empty() ? Budget::from_environment() : Budget::parse(o.budget);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") code = cmd_validate(o, body);
    else if (cmd == "convert") code = cmd_convert(o, body);
    else if (cmd == "cone") code = cmd_cone(o, body, budget);
    else if (cmd == "classify") code = cmd_classify(o, body, budget);
    else if (cmd == "butterfly") code = cmd_butterfly(o, body);
    else if (cmd == "compose") code = cmd_compose(o, body, budget);
    else if (cmd == "adm") code = cmd_adm(o, body, budget);
    else if (cmd == "pi") code = cmd_pi(o, body);
    else code = cmd_laws(o, body, budget);
  } catch (const MalformedInput& e) {
    body << "status: parse error\nerror: " << e.what() << "\n";
    code = kParseError;
  } catch (const BudgetExceeded& e) {
    body << "status: budget exceeded\nerror: " << e.what() << "\n";
    code = kBudget;
  } catch (const PreconditionError& e) {
    body << "status: fail\nerror: " << e.what() << "\n";
    if (!e.witness().empty()) body << "witness: " << list(e.witness()) << "\n";
    code = kLawFailure;
  } catch (const RingoidError& e) {
    body << "status: fail\nerror: " << e.what() << "\n";
    code = kLawFailure;
  }

  if (o.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kParseError;
    }
    f << body.str();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed: " << secs << "s\n";
  return code;
}
