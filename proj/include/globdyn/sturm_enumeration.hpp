#pragma once

#include <vector>

#include "globdyn/permutation.hpp"

namespace globdyn {

struct EnumerationOptions {
    int brute_force_bound = 13;
    int jobs = 1;
};

/// All Sturm permutations of S_n in lexicographic order, by scanning every
/// permutation that fixes 1 and n. Throws BoundExceeded above the configured
/// bound and ParityViolation for even n.
std::vector<Permutation> enumerate_sturm(int n, const EnumerationOptions& opts = {});

/// Same set, produced by growing the river one arch at a time and pruning
/// crossings and negative Morse sums as soon as they appear.
std::vector<Permutation> enumerate_sturm_arches(int n);

/// Orbit under inversion and conjugation by the reversal j -> n+1-j,
/// sorted and deduplicated. Its first element is the canonical form.
std::vector<Permutation> symmetry_orbit(const Permutation& sigma);

Permutation canonical_form(const Permutation& sigma);

}  // namespace globdyn
