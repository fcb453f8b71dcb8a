#include "globdyn/sturm_enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "globdyn/error.hpp"
#include "globdyn/meander.hpp"

namespace globdyn {

namespace {

void check_size(int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
    if (n % 2 == 0)
        throw Error(Errc::ParityViolation, "Sturm permutations need odd n, got " + std::to_string(n));
}

// Sturm permutations whose second entry is `head`, in lexicographic order.
std::vector<Permutation> scan_prefix(int n, int head) {
    std::vector<int> rest;
    for (int v = 2; v < n; ++v)
        if (v != head) rest.push_back(v);
    std::vector<Permutation> found;
    std::vector<int> image(static_cast<std::size_t>(n));
    image.front() = 1;
    image[1] = head;
    image.back() = n;
    do {
        std::copy(rest.begin(), rest.end(), image.begin() + 2);
        Permutation sigma(image);
        if (is_sturm(sigma)) found.push_back(std::move(sigma));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return found;
}

bool crosses_any(const std::vector<Arch>& family, Arch arc) {
    for (const Arch& other : family)
        if ((other.a < arc.a && arc.a < other.b && other.b < arc.b) ||
            (arc.a < other.a && other.a < arc.b && arc.b < other.b))
            return true;
    return false;
}

struct RiverBuilder {
    int n;
    std::vector<int> pos;  // pos[label], 1-based
    std::vector<bool> used;
    std::vector<Arch> upper, lower;
    std::vector<Permutation> out;

    void extend(int label, int morse_sum) {
        if (label == n) {
            std::vector<int> image(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) image[static_cast<std::size_t>(pos[j] - 1)] = j;
            out.emplace_back(std::move(image));
            return;
        }
        const int next = label + 1;
        auto& family = (label % 2 == 1) ? upper : lower;
        for (int p = 2; p <= n; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            if ((p == n) != (next == n)) continue;  // dissipative: label n sits at position n
            const int here = pos[static_cast<std::size_t>(label)];
            const int step = p > here ? 1 : -1;
            const int sum = morse_sum + (label % 2 == 1 ? step : -step);
            if (sum < 0) continue;
            const Arch arc{std::min(here, p), std::max(here, p)};
            if (crosses_any(family, arc)) continue;
            family.push_back(arc);
            used[static_cast<std::size_t>(p)] = true;
            pos[static_cast<std::size_t>(next)] = p;
            extend(next, sum);
            used[static_cast<std::size_t>(p)] = false;
            family.pop_back();
        }
    }
};

}  // namespace

std::vector<Permutation> enumerate_sturm(int n, const EnumerationOptions& opts) {
    check_size(n);
    if (n > opts.brute_force_bound)
        throw Error(Errc::BoundExceeded, "brute force limited to n <= " +
                                             std::to_string(opts.brute_force_bound));
    if (n == 1) return {Permutation::identity(1)};

    const int heads = n - 2;
    std::vector<std::vector<Permutation>> parts(static_cast<std::size_t>(heads));
    const int jobs = std::clamp(opts.jobs, 1, heads);
    auto work = [&](int worker) {
        for (int h = worker; h < heads; h += jobs)
            parts[static_cast<std::size_t>(h)] = scan_prefix(n, h + 2);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }

    std::vector<Permutation> all;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
    return all;
}

std::vector<Permutation> enumerate_sturm_arches(int n) {
    check_size(n);
    RiverBuilder builder{n, std::vector<int>(static_cast<std::size_t>(n + 1), 0),
                         std::vector<bool>(static_cast<std::size_t>(n + 2), false), {}, {}, {}};
    builder.pos[1] = 1;
    builder.used[1] = true;
    builder.extend(1, 0);
    std::sort(builder.out.begin(), builder.out.end());
    return std::move(builder.out);
}

std::vector<Permutation> symmetry_orbit(const Permutation& sigma) {
    const Permutation inv = sigma.inverse();
    std::vector<Permutation> orbit{sigma, inv, sigma.reversed(), inv.reversed()};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

Permutation canonical_form(const Permutation& sigma) {
    return symmetry_orbit(sigma).front();
}

}  // namespace globdyn
