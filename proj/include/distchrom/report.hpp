#pragma once

#include <string>

#include <json.hpp>

#include "distchrom/distance_set.hpp"
#include "distchrom/integer_coloring.hpp"
#include "distchrom/lattice_graph.hpp"
#include "distchrom/slab.hpp"

namespace distchrom {

// ordered_json keeps insertion order, which pins the report key order; exact
// numbers are grammar strings, decimal approximations live only in fields
// suffixed "_approx".
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersionTag = "0.1.0";

void put_exact(Json& obj, const std::string& key, const QuadExt& v);

Json to_json(const LatticeVector& p);
Json to_json(const Window& w);
Json to_json(const DistanceSet& ds);
Json to_json(const PeriodicColoring& pc);
Json to_json(const IntegerClique& c);
Json to_json(const PartialColoring& c);
Json to_json(const ForcedStep& s);
Json to_json(const DensityResult& d);
Json to_json(const NoSlabCertificate& cert);
Json to_json(const SlabColoring& sc);
Json to_json(const SlabViolation& v);
Json to_json(const ChiMBounds& b);

// Inverses for the replay paths (reports embed certificates; tests replay
// them without touching the original search).
Window window_from_json(const Json& j);
PartialColoring partial_coloring_from_json(const Json& j, int t);
NoSlabCertificate certificate_from_json(const Json& j, int radicand);
SlabColoring slab_from_json(const Json& j, int radicand);

} // namespace distchrom
