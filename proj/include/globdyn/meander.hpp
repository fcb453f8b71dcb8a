#pragma once

#include <span>
#include <vector>

#include "globdyn/permutation.hpp"

namespace globdyn {

/// Arch joining road positions a < b.
struct Arch {
    int a = 0;
    int b = 0;

    friend bool operator==(const Arch&, const Arch&) = default;
    friend auto operator<=>(const Arch&, const Arch&) = default;
};

/// Normalizes endpoint order and sorts.
std::vector<Arch> canonical_arches(std::vector<Arch> arches);

// Two noncrossing checkers over one arch family. The quadratic one compares
// every pair; the stack one sweeps positions 0..n+1 and needs each position to
// carry at most one arch end. They must agree wherever both apply.
bool noncrossing_pairwise(std::span<const Arch> arches);
bool noncrossing_stack(std::span<const Arch> arches, int n);

struct OpenMeander {
    Permutation perm;
    std::vector<Arch> upper;
    std::vector<Arch> lower;
};

/// Closed meander: two noncrossing perfect matchings on {1..n}, n even.
class ClosedMeander {
public:
    /// Throws InvalidMatching / ArchCrossing / ParityViolation on bad input.
    ClosedMeander(int n, std::vector<Arch> upper, std::vector<Arch> lower);

    int size() const noexcept { return n_; }
    const std::vector<Arch>& upper() const noexcept { return upper_; }
    const std::vector<Arch>& lower() const noexcept { return lower_; }

    friend bool operator==(const ClosedMeander&, const ClosedMeander&) = default;

private:
    int n_;
    std::vector<Arch> upper_;
    std::vector<Arch> lower_;
};

/// Builds the arch systems of sigma: labels j, j+1 are joined at road
/// positions sigma^-1(j), sigma^-1(j+1), above the road for odd j and below for
/// even j. The river enters from below-left and leaves above-right, so the
/// entry and exit rays take part in the crossing check as a lower arch
/// (0, sigma^-1(1)) and an upper arch (sigma^-1(n), n+1).
OpenMeander open_meander_arches(const Permutation& sigma);

bool is_meander(const Permutation& sigma) noexcept;
bool is_dissipative(const Permutation& sigma) noexcept;

/// i_k = sum_{j<k} (-1)^{j+1} sign(sigma^-1(j+1) - sigma^-1(j)), k = 1..n.
std::vector<int> morse_vector(const Permutation& sigma);

bool is_morse(const Permutation& sigma);
bool is_sturm(const Permutation& sigma) noexcept;

/// Number of closed curves traced by alternating upper and lower arches.
int count_components(const ClosedMeander& m);

/// Closes a dissipative open meander: vertex 1 and its upper arch are
/// dropped, a new upper arch joins n with sigma^-1(2), and positions 2..n are
/// relabeled 1..n-1.
ClosedMeander close_open_meander(const OpenMeander& om);

/// Doubles a closed meander on n vertices into a lower rainbow meander on 2n
/// vertices: upper arches are kept, lower arches (i,j) move to upper arches
/// (2n+1-i, 2n+1-j), and the lower matching becomes the full rainbow.
ClosedMeander open_to_rainbow(const ClosedMeander& m);

/// Nested arches (o+k, o+2*size+1-k), k = 1..size.
std::vector<Arch> rainbow_block(int offset, int size);

}  // namespace globdyn
