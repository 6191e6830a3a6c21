#pragma once

#include <string>

#include "json.hpp"
#include "ringoid/anafun.hpp"
#include "ringoid/cone.hpp"
#include "ringoid/corr.hpp"

namespace ringoid {

using Json = nlohmann::json;

/// Parses text; syntax errors become MalformedInput.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// Decoders check shapes and ranges (MalformedInput), not laws.

Json to_json(const AbelianGroup& g);  // {"size", "add": [[...]]}
AbelianGroup group_from_json(const Json& j);

Json to_json(const FiniteRing& r);  // {"size", "add", "mul", "one"}
RingRef ring_from_json(const Json& j);

Json to_json(const FiniteModule& m);  // {"group", "action": [[...]]} rows by ring element
FiniteModule module_from_json(const Json& j, const RingRef& base);

Json to_json(const QuasiIdeal& q);  // {"C", "I", "d"}
QuasiIdealRef quasi_ideal_from_json(const Json& j);

Json to_json(const Trunc1SimpRing& t);  // {"A0", "A1", "d0", "d1", "s"}
Trunc1SimpRing simplicial_from_json(const Json& j);

/// Maps only: {"ring": [...], "module": [...]}.
Json maps_to_json(const QMorphism& m);
QMorphism qmorphism_from_json(const Json& j, const QuasiIdealRef& source, const QuasiIdealRef& target);
/// With endpoints: {"source", "target", "ring", "module"}.
Json to_json(const QMorphism& m);
QMorphism qmorphism_from_json(const Json& j);

Json to_json(const DGCorrespondence& c);  // {"R1", "R2", "R12", "f", "g"}
DGCorrespondence correspondence_from_json(const Json& j);

Json to_json(const Butterfly& b);  // {"R1", "R2", "K", "f0", "g0", "h1", "h2"}
Butterfly butterfly_from_json(const Json& j);

/// {"objects", "morphisms": [{"src", "tgt"}], "compose": [[...]] (-1 off
/// the composable pairs), "identity"}.
Json to_json(const FiniteCategory& c);
CategoryRef category_from_json(const Json& j);

Json to_json(const InternalRingGroupoid& g);  // {"objects", "morphisms", "src", "tgt", "identity", "compose"}

}  // namespace ringoid
