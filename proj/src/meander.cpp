#include "globdyn/meander.hpp"

#include <algorithm>
#include <string>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

std::string arch_str(const Arch& a) {
    return "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
}

// partner[p] for p in 0..n+1, -1 where no arch ends.
std::vector<int> partner_table(std::span<const Arch> arches, int n) {
    std::vector<int> partner(static_cast<std::size_t>(n + 2), -1);
    for (const Arch& arc : arches) {
        for (int p : {arc.a, arc.b}) {
            if (p < 0 || p > n + 1)
                throw Error(Errc::InvalidMatching, "arch end out of range in " + arch_str(arc));
            if (partner[static_cast<std::size_t>(p)] != -1)
                throw Error(Errc::InvalidMatching,
                            "position " + std::to_string(p) + " carries two arch ends");
        }
        partner[static_cast<std::size_t>(arc.a)] = arc.b;
        partner[static_cast<std::size_t>(arc.b)] = arc.a;
    }
    return partner;
}

void check_perfect_matching(const std::vector<Arch>& arches, int n, const char* family) {
    std::vector<int> hits(static_cast<std::size_t>(n + 1), 0);
    for (const Arch& arc : arches) {
        if (arc.a < 1 || arc.b > n || arc.a >= arc.b)
            throw Error(Errc::InvalidMatching,
                        std::string(family) + " arch " + arch_str(arc) + " is out of range");
        ++hits[static_cast<std::size_t>(arc.a)];
        ++hits[static_cast<std::size_t>(arc.b)];
    }
    for (int v = 1; v <= n; ++v)
        if (hits[static_cast<std::size_t>(v)] != 1)
            throw Error(Errc::InvalidMatching, std::string(family) + " matching covers vertex " +
                                                   std::to_string(v) + " " +
                                                   std::to_string(hits[static_cast<std::size_t>(v)]) +
                                                   " times");
}

}  // namespace

std::vector<Arch> canonical_arches(std::vector<Arch> arches) {
    for (Arch& arc : arches)
        if (arc.a > arc.b) std::swap(arc.a, arc.b);
    std::sort(arches.begin(), arches.end());
    return arches;
}

bool noncrossing_pairwise(std::span<const Arch> arches) {
    for (const Arch& x : arches)
        for (const Arch& y : arches)
            if (x.a < y.a && y.a < x.b && x.b < y.b) return false;
    return true;
}

bool noncrossing_stack(std::span<const Arch> arches, int n) {
    const auto partner = partner_table(arches, n);
    std::vector<int> open;
    for (int p = 0; p <= n + 1; ++p) {
        const int q = partner[static_cast<std::size_t>(p)];
        if (q < 0) continue;
        if (q > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != q) return false;
            open.pop_back();
        }
    }
    return true;
}

ClosedMeander::ClosedMeander(int n, std::vector<Arch> upper, std::vector<Arch> lower)
    : n_(n), upper_(canonical_arches(std::move(upper))), lower_(canonical_arches(std::move(lower))) {
    if (n_ < 2 || n_ % 2 != 0)
        throw Error(Errc::ParityViolation,
                    "closed meander needs an even positive vertex count, got " + std::to_string(n_));
    check_perfect_matching(upper_, n_, "upper");
    check_perfect_matching(lower_, n_, "lower");
    if (!noncrossing_stack(upper_, n_)) throw Error(Errc::ArchCrossing, "upper arches cross");
    if (!noncrossing_stack(lower_, n_)) throw Error(Errc::ArchCrossing, "lower arches cross");
}

OpenMeander open_meander_arches(const Permutation& sigma) {
    const int n = sigma.size();
    if (n % 2 == 0)
        throw Error(Errc::ParityViolation,
                    "an open meander from south-west to north-east crosses the road an odd "
                    "number of times, got n=" + std::to_string(n));
    const Permutation pos = sigma.inverse();
    std::vector<Arch> upper;
    std::vector<Arch> lower;
    for (int j = 1; j < n; ++j) {
        const Arch arc{std::min(pos(j), pos(j + 1)), std::max(pos(j), pos(j + 1))};
        (j % 2 == 1 ? upper : lower).push_back(arc);
    }
    auto upper_with_ray = upper;
    auto lower_with_ray = lower;
    upper_with_ray.push_back({pos(n), n + 1});
    lower_with_ray.push_back({0, pos(1)});
    if (!noncrossing_stack(upper_with_ray, n))
        throw Error(Errc::ArchCrossing, "upper arches of " + sigma.to_string() + " cross");
    if (!noncrossing_stack(lower_with_ray, n))
        throw Error(Errc::ArchCrossing, "lower arches of " + sigma.to_string() + " cross");
    return OpenMeander{sigma, canonical_arches(std::move(upper)), canonical_arches(std::move(lower))};
}

bool is_meander(const Permutation& sigma) noexcept {
    try {
        (void)open_meander_arches(sigma);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_dissipative(const Permutation& sigma) noexcept {
    return sigma(1) == 1 && sigma(sigma.size()) == sigma.size();
}

std::vector<int> morse_vector(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation pos = sigma.inverse();
    std::vector<int> indices(static_cast<std::size_t>(n), 0);
    int sum = 0;
    for (int j = 1; j < n; ++j) {
        const int step = pos(j + 1) > pos(j) ? 1 : -1;
        sum += (j % 2 == 1 ? step : -step);
        indices[static_cast<std::size_t>(j)] = sum;
    }
    return indices;
}

bool is_morse(const Permutation& sigma) {
    const auto indices = morse_vector(sigma);
    return std::all_of(indices.begin(), indices.end(), [](int i) { return i >= 0; });
}

bool is_sturm(const Permutation& sigma) noexcept {
    return is_dissipative(sigma) && is_meander(sigma) && is_morse(sigma);
}

int count_components(const ClosedMeander& m) {
    const int n = m.size();
    const auto up = partner_table(m.upper(), n);
    const auto low = partner_table(m.lower(), n);
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    int components = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            const int y = up[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(y)] = true;
            x = low[static_cast<std::size_t>(y)];
        } while (x != start);
    }
    return components;
}

ClosedMeander close_open_meander(const OpenMeander& om) {
    const Permutation& sigma = om.perm;
    if (!is_dissipative(sigma))
        throw Error(Errc::NotDissipative, sigma.to_string() + " does not fix 1 and n");
    const int n = sigma.size();
    const int second = sigma.inverse()(2);
    std::vector<Arch> upper;
    for (const Arch& arc : om.upper)
        if (arc.a != 1) upper.push_back({arc.a - 1, arc.b - 1});
    upper.push_back({second - 1, n - 1});
    std::vector<Arch> lower;
    for (const Arch& arc : om.lower) lower.push_back({arc.a - 1, arc.b - 1});
    return ClosedMeander(n - 1, std::move(upper), std::move(lower));
}

ClosedMeander open_to_rainbow(const ClosedMeander& m) {
    const int n = m.size();
    const int mirror = 2 * n + 1;
    std::vector<Arch> upper = m.upper();
    for (const Arch& arc : m.lower()) upper.push_back({mirror - arc.b, mirror - arc.a});
    return ClosedMeander(2 * n, std::move(upper), rainbow_block(0, n));
}

std::vector<Arch> rainbow_block(int offset, int size) {
    std::vector<Arch> arches;
    arches.reserve(static_cast<std::size_t>(size));
    for (int k = 1; k <= size; ++k) arches.push_back({offset + k, offset + 2 * size + 1 - k});
    return arches;
}

}  // namespace globdyn
