#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "globdyn/meander.hpp"

namespace globdyn {

/// Block sizes of the proper upper (alpha) and lower (beta) rainbows,
/// left to right.
struct SeaweedComposition {
    std::vector<int> alpha;
    std::vector<int> beta;

    std::string to_string() const;
    friend bool operator==(const SeaweedComposition&, const SeaweedComposition&) = default;
};

/// Parses "2,2|1,3". A text without '|' is read as alpha alone with a single
/// lower rainbow of the same total (a bi-rainbow).
SeaweedComposition parse_seaweed(std::string_view text);

/// Throws SumMismatch unless sum(alpha) == sum(beta); also rejects
/// nonpositive block sizes.
void validate(const SeaweedComposition& sc);

ClosedMeander seaweed_meander(const SeaweedComposition& sc);

/// Component count of the bi-rainbow M(alpha | sum alpha) by the gcd
/// formulas; more than three blocks are Unsupported.
int birainbow_formula(std::span<const int> alpha);

/// Unit grid cell: row r, column c, both 1-based. Occupies
/// [c-1, c] x [r-1, r] in the plane.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Edge midpoint in doubled coordinates: (x, y) = (2 * x_real, 2 * y_real).
/// Exactly one coordinate is odd.
struct HalfPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
    friend auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

/// A closed 45-degree flight path, listed as the edge midpoints it visits
/// from its lexicographically smallest boundary point.
struct BilliardPath {
    std::vector<HalfPoint> points;
    std::vector<HalfPoint> bounces;  // boundary midpoints where the path reflects
};

struct Billiard {
    std::vector<Cell> cells;  // sorted, unique
    std::vector<BilliardPath> paths;
};

/// Cells (r, c) of the n/2 x n/2 board with beta_start(c) < r <= alpha_end(c),
/// where alpha_end(c) is the smallest partial sum of alpha >= c and
/// beta_start(c) is the largest partial sum of beta < c. The paths are traced.
Billiard billiard_from_seaweed(const SeaweedComposition& sc);

/// Traces every path of a cell domain from its boundary midpoints.
/// Throws MalformedDomain on empty or out-of-range domains.
std::vector<BilliardPath> trace_billiard(std::span<const Cell> cells);

int billiard_components(const Billiard& b);

}  // namespace globdyn
