#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "globdyn/bianchi.hpp"
#include "globdyn/kasner.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/shooting.hpp"
#include "globdyn/temperley_lieb.hpp"

namespace globdyn {

using Json = nlohmann::json;

// JSON encoders and their inverses. Parsers throw Parse on shape errors and
// let the domain constructors validate content.

Json to_json(const ClosedMeander& m);
ClosedMeander closed_meander_from_json(const Json& j);

Json to_json(const Billiard& b);
Billiard billiard_from_json(const Json& j);

/// Pairs listed by endpoint label ("t1", "b3"), each pair once, sorted by its
/// first endpoint.
Json to_json(const TLDiagram& d);
TLDiagram tl_diagram_from_json(const Json& j);

/// Angles in radians ("lo", "length"), with degree copies for reading.
Json to_json(const ArcSet& s);
ArcSet arc_set_from_json(const Json& j);

Json to_json(const IntegrationConfig& cfg);
/// Missing keys keep their defaults.
IntegrationConfig integration_config_from_json(const Json& j);

std::string endpoint_label(int endpoint, int strands);

// CSV writers. Doubles are printed with 17 significant digits so that the
// text round-trips.

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_itinerary_csv(std::ostream& os, const Itinerary& it);
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve);
void write_integrals_csv(std::ostream& os, const std::vector<IntegralSample>& integrals);

// Graphviz views: vertices along the road, arches as colored edges.
void write_meander_dot(std::ostream& os, const ClosedMeander& m);
void write_tl_dot(std::ostream& os, const TLDiagram& d);

}  // namespace globdyn
