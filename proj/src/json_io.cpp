#include "ringoid/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ringoid {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw MalformedInput(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Elem> vec(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw MalformedInput(std::string(what) + " must hold integers");
    out.push_back(e.get<Elem>());
  }
  return out;
}

std::vector<Elem> vec_field(const Json& j, const char* key) { return vec(field(j, key), key); }

// rows × cols matrix, flattened row-major
std::vector<Elem> table(const Json& j, const char* key, std::size_t rows, std::size_t cols) {
  const Json& t = field(j, key);
  if (!t.is_array() || t.size() != rows) throw MalformedInput(std::string("table \"") + key + "\" has the wrong row count");
  std::vector<Elem> out;
  out.reserve(rows * cols);
  for (const auto& row : t) {
    auto r = vec(row, key);
    if (r.size() != cols) throw MalformedInput(std::string("table \"") + key + "\" has a row of the wrong length");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Json rows(const std::vector<Elem>& flat, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += cols)
    out.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                    flat.begin() + static_cast<std::ptrdiff_t>(i + cols)));
  return out;
}

void check_range(const std::vector<Elem>& v, std::size_t len, std::size_t bound, const char* what) {
  if (v.size() != len) throw MalformedInput(std::string(what) + " has the wrong length");
  for (Elem e : v)
    if (e < 0 || static_cast<std::size_t>(e) >= bound) throw MalformedInput(std::string(what) + " entry out of range");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("json: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const AbelianGroup& g) { return {{"size", g.size()}, {"add", rows(g.add_table(), g.size())}}; }

AbelianGroup group_from_json(const Json& j) {
  const std::size_t n = size_field(j, "size");
  return AbelianGroup(n, table(j, "add", n, n));
}

Json to_json(const FiniteRing& r) {
  return {{"size", r.size()}, {"add", rows(r.additive().add_table(), r.size())},
          {"mul", rows(r.mul_table(), r.size())}, {"one", r.one()}};
}

RingRef ring_from_json(const Json& j) {
  const std::size_t n = size_field(j, "size");
  AbelianGroup add(n, table(j, "add", n, n));
  const Json& one = field(j, "one");
  if (!one.is_number_integer()) throw MalformedInput("field \"one\" must be an integer");
  return make_ring(std::move(add), table(j, "mul", n, n), one.get<Elem>());
}

Json to_json(const FiniteModule& m) {
  return {{"group", to_json(m.group())}, {"action", rows(m.action_table(), m.size())}};
}

FiniteModule module_from_json(const Json& j, const RingRef& base) {
  AbelianGroup g = group_from_json(field(j, "group"));
  const std::size_t n = g.size();
  return FiniteModule(base, std::move(g), table(j, "action", base->size(), n));
}

Json to_json(const QuasiIdeal& q) { return {{"C", to_json(*q.ring)}, {"I", to_json(q.module)}, {"d", q.d}}; }

QuasiIdealRef quasi_ideal_from_json(const Json& j) {
  RingRef c = ring_from_json(field(j, "C"));
  FiniteModule i = module_from_json(field(j, "I"), c);
  return make_quasi_ideal(c, std::move(i), vec_field(j, "d"));
}

Json to_json(const Trunc1SimpRing& t) {
  return {{"A0", to_json(*t.A0)}, {"A1", to_json(*t.A1)}, {"d0", t.d0}, {"d1", t.d1}, {"s", t.s}};
}

Trunc1SimpRing simplicial_from_json(const Json& j) {
  Trunc1SimpRing t{ring_from_json(field(j, "A0")), ring_from_json(field(j, "A1")), vec_field(j, "d0"),
                   vec_field(j, "d1"), vec_field(j, "s")};
  check_range(t.d0, t.A1->size(), t.A0->size(), "d0");
  check_range(t.d1, t.A1->size(), t.A0->size(), "d1");
  check_range(t.s, t.A0->size(), t.A1->size(), "s");
  return t;
}

Json maps_to_json(const QMorphism& m) { return {{"ring", m.ring_part}, {"module", m.module_part}}; }

QMorphism qmorphism_from_json(const Json& j, const QuasiIdealRef& source, const QuasiIdealRef& target) {
  QMorphism m{source, target, vec_field(j, "ring"), vec_field(j, "module")};
  check_range(m.ring_part, source->ring_size(), target->ring_size(), "ring");
  check_range(m.module_part, source->module_size(), target->module_size(), "module");
  return m;
}

Json to_json(const QMorphism& m) {
  Json j = maps_to_json(m);
  j["source"] = to_json(*m.source);
  j["target"] = to_json(*m.target);
  return j;
}

QMorphism qmorphism_from_json(const Json& j) {
  return qmorphism_from_json(j, quasi_ideal_from_json(field(j, "source")), quasi_ideal_from_json(field(j, "target")));
}

Json to_json(const DGCorrespondence& c) {
  return {{"R1", to_json(*c.R1)}, {"R2", to_json(*c.R2)}, {"R12", to_json(*c.R12)},
          {"f", maps_to_json(c.f)}, {"g", maps_to_json(c.g)}};
}

DGCorrespondence correspondence_from_json(const Json& j) {
  auto r1 = quasi_ideal_from_json(field(j, "R1"));
  auto r2 = quasi_ideal_from_json(field(j, "R2"));
  auto r12 = quasi_ideal_from_json(field(j, "R12"));
  return {r1, r2, r12, qmorphism_from_json(field(j, "f"), r12, r1), qmorphism_from_json(field(j, "g"), r12, r2)};
}

Json to_json(const Butterfly& b) {
  return {{"R1", to_json(*b.R1)}, {"R2", to_json(*b.R2)}, {"K", to_json(*b.K)}, {"f0", b.f0},
          {"g0", b.g0},           {"h1", b.h1},           {"h2", b.h2}};
}

Butterfly butterfly_from_json(const Json& j) {
  Butterfly b{quasi_ideal_from_json(field(j, "R1")), quasi_ideal_from_json(field(j, "R2")), ring_from_json(field(j, "K")),
              vec_field(j, "f0"), vec_field(j, "g0"), vec_field(j, "h1"), vec_field(j, "h2")};
  check_range(b.f0, b.K->size(), b.R1->ring_size(), "f0");
  check_range(b.g0, b.K->size(), b.R2->ring_size(), "g0");
  check_range(b.h1, b.R1->module_size(), b.K->size(), "h1");
  check_range(b.h2, b.R2->module_size(), b.K->size(), "h2");
  return b;
}

Json to_json(const FiniteCategory& c) {
  Json arrows = Json::array();
  for (const auto& a : c.arrows()) arrows.push_back({{"src", a.src}, {"tgt", a.tgt}});
  return {{"objects", c.object_count()}, {"morphisms", arrows},
          {"compose", rows(c.compose_table(), c.morphism_count())}, {"identity", c.identities()}};
}

CategoryRef category_from_json(const Json& j) {
  const std::size_t n = size_field(j, "objects");
  const Json& ms = field(j, "morphisms");
  if (!ms.is_array()) throw MalformedInput("morphisms must be an array");
  std::vector<Arrow> arrows;
  for (const auto& m : ms) {
    const Json& s = field(m, "src");
    const Json& t = field(m, "tgt");
    if (!s.is_number_integer() || !t.is_number_integer()) throw MalformedInput("src/tgt must be integers");
    arrows.push_back({s.get<Elem>(), t.get<Elem>()});
  }
  const std::size_t m = arrows.size();
  return make_category(n, std::move(arrows), vec_field(j, "identity"), table(j, "compose", m, m));
}

Json to_json(const InternalRingGroupoid& g) {
  return {{"objects", to_json(*g.obj)}, {"morphisms", to_json(*g.mor)}, {"src", g.src}, {"tgt", g.tgt},
          {"identity", g.ident}, {"compose", rows(g.comp, g.mor->size())}};
}

}  // namespace ringoid
