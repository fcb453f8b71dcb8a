#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "globdyn/angles.hpp"

namespace globdyn {

/// Three emanation points at angles 0, 120 and 240 degrees, at distance d
/// from the center of the unit Kasner circle. d = 2 is general relativity:
/// the circle is inscribed in the triangle of emanation points. d < 2 opens
/// stable gaps between the expanding arcs, d > 2 makes them overlap.
class EmanationConfig {
public:
    explicit EmanationConfig(double d = 2.0);

    double distance() const noexcept { return d_; }
    /// Half-width arccos(1/d) of each expanding arc.
    double half_width() const noexcept { return half_width_; }
    static double corner_angle(int corner) { return kTwoPi * corner / 3.0; }
    std::array<double, 2> corner_point(int corner) const;

private:
    double d_;
    double half_width_;
};

/// Counterclockwise arc [lo, lo + length) on the unit circle; lo in
/// [0, 2 pi), length in [0, 2 pi]. A zero-length arc is a single point.
struct Arc {
    double lo = 0.0;
    double length = 0.0;

    double hi() const noexcept { return lo + length; }
    bool contains(double theta) const noexcept;
};

/// Sorted union of disjoint arcs. Arcs closer than `kMergeTolerance` are
/// merged, so floating-point slivers do not survive normalization.
class ArcSet {
public:
    static constexpr double kMergeTolerance = 1e-12;

    ArcSet() = default;
    explicit ArcSet(std::vector<Arc> arcs);

    static ArcSet full() { return ArcSet({Arc{0.0, kTwoPi}}); }

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    bool empty() const noexcept { return arcs_.empty(); }
    bool is_full() const noexcept;
    double measure() const noexcept;
    bool contains(double theta) const noexcept;

    ArcSet unite(const ArcSet& other) const;
    ArcSet intersect(const Arc& arc) const;
    /// Complement in measure: isolated points are ignored.
    ArcSet complement() const;
    /// Every arc of *this lies inside `other`, up to `tol` at the ends.
    bool subset_of(const ArcSet& other, double tol = 1e-9) const;
    ArcSet rotated(double angle) const;

private:
    std::vector<Arc> arcs_;
};

/// Taub points at 60, 180 and 300 degrees: the cube roots of -1.
std::array<double, 3> taub_points();

/// Expanding arc of each emanation point: (phi - w, phi + w), w = arccos(1/d).
std::array<Arc, 3> near_arcs(const EmanationConfig& cfg);

/// Complement of the union of the expanding arcs; empty iff d >= 2.
ArcSet stable_arcs(const EmanationConfig& cfg);

/// Second intersection of the line through emanation point `corner` and
/// e^{i theta} with the unit circle. Defined for every theta; at a tangency
/// point it returns theta itself.
double chord_image(double theta, int corner, const EmanationConfig& cfg);

struct KasnerImage {
    double theta = 0.0;
    int corner = 0;
};

/// Images of theta under every emanation point whose expanding arc contains
/// it, ordered by corner. Throws TangencyPoint within 1e-12 of an arc end.
std::vector<KasnerImage> kasner_images(double theta, const EmanationConfig& cfg);

enum class MultiImagePolicy { Error, Lexicographic, SeededRandom };

MultiImagePolicy parse_policy(std::string_view text);
std::string_view to_string(MultiImagePolicy policy) noexcept;

enum class Termination { LandedInStableArc, MaxIterations, TaubHit };

std::string_view to_string(Termination t) noexcept;

struct ItineraryStep {
    double theta = 0.0;
    int corner = -1;  // emanation point that produced theta; -1 for the start
};

struct Itinerary {
    std::vector<ItineraryStep> steps;
    Termination termination = Termination::MaxIterations;
};

/// Up to n map steps from theta0. Overlaps resolve per `policy`; Error throws
/// MultiValued. A step with no image ends the run in a stable arc.
Itinerary iterate(double theta0, int n, const EmanationConfig& cfg,
                  MultiImagePolicy policy = MultiImagePolicy::Error, std::uint64_t seed = 0);

struct Era {
    std::size_t start = 0;  // index into Itinerary::steps
    std::size_t length = 0;
    std::pair<int, int> corners{-1, -1};
};

/// Maximal non-overlapping runs of steps whose corners alternate between two
/// values.
std::vector<Era> eras(const Itinerary& it);

/// Image of an arc set under one emanation point, restricted to that
/// point's expanding arc. Empty if they do not meet.
ArcSet corner_image(const ArcSet& set, int corner, const EmanationConfig& cfg);

/// One step of the set-valued map: union of all corner images.
ArcSet ifs_step(const ArcSet& set, const EmanationConfig& cfg);
ArcSet ifs_iterate(const ArcSet& set, int n, const EmanationConfig& cfg);

/// Steps of ifs_step until the set covers the circle, or nullopt after
/// `max_steps`.
std::optional<int> ifs_steps_to_cover(const ArcSet& set, const EmanationConfig& cfg,
                                      int max_steps = 1000);

/// Hausdorff distance between the closures of two nonempty arc sets, in the
/// arc-length metric. Throws EmptyInput.
double hausdorff_distance(const ArcSet& a, const ArcSet& b);

struct TerminationStats {
    std::size_t samples = 0;
    std::size_t terminated = 0;
    std::size_t tangency_hits = 0;
    double fraction = 0.0;
    std::optional<std::string> warning;
};

/// Monte Carlo over uniform theta0 (one mt19937_64 stream seeded with `seed`);
/// fraction of orbits that land in a stable arc within max_iter steps.
/// Independent of `jobs`.
TerminationStats termination_stats(std::size_t sample_count, int max_iter,
                                   const EmanationConfig& cfg, std::uint64_t seed, int jobs = 1);

}  // namespace globdyn
