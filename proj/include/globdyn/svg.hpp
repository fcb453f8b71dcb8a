#pragma once

#include <optional>
#include <string>
#include <vector>

#include "globdyn/kasner.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/shooting.hpp"

namespace globdyn {

// All emitters use a fixed viewBox, three-decimal coordinates and sorted
// element order, so equal inputs give byte-identical documents.

/// Semicircular arches: upper above the axis, lower below.
std::string meander_svg(const ClosedMeander& m);
/// Open meander; the entry and exit rays are drawn as half-lines.
std::string meander_svg(const OpenMeander& m);

std::string billiard_svg(const Billiard& b);

/// Shooting curve in the (v, v') plane, with escaped samples as breaks.
std::string curve_svg(const std::vector<CurvePoint>& curve);

/// Kasner circle with emanation points, expanding arcs, an optional arc set
/// and an optional orbit drawn as chords.
std::string kasner_svg(const EmanationConfig& cfg, const Itinerary* orbit = nullptr,
                       const ArcSet* highlight = nullptr);

}  // namespace globdyn
