// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "globdyn/bianchi.hpp"
#include "globdyn/error.hpp"
#include "globdyn/kasner.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/shooting.hpp"
#include "globdyn/sturm_enumeration.hpp"
#include "globdyn/temperley_lieb.hpp"
#include "../support/oracles.hpp"

using namespace globdyn;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// All compositions of n with parts in [1, max_part].
void compositions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p <= std::min(n, max_part); ++p) {
        cur.push_back(p);
        compositions(n - p, max_part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions(n, max_part, cur, out);
    return out;
}

std::vector<int> random_composition(int n, std::mt19937_64& rng) {
    std::vector<int> out;
    while (n > 0) {
        out.push_back(std::uniform_int_distribution<int>(1, n)(rng));
        n -= out.back();
    }
    return out;
}

void sturm_characterization(Verdict& v) {
    v.require(enumerate_sturm(3).size() == 1, "n=3 count");
    const auto five = enumerate_sturm(5);
    v.require(five.size() == 2, "n=5 count");
    if (five.size() == 2) {
        v.require(five[0] == Permutation::identity(5), "n=5 identity");
        v.require(five[1].to_string() == "1,4,3,2,5", "n=5 second");
    }
    for (int n : {3, 5, 7, 9}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto brute = enumerate_sturm(n);
        const auto arches = enumerate_sturm_arches(n);
        const double dt = seconds_since(t0);
        v.require(brute == arches, "enumerators agree at n=" + std::to_string(n));
        v.detail << " n=" << n << ":" << brute.size();
        if (n == 9) {
            v.require(dt < 10.0, "n=9 under 10 s");
            v.detail << " (n=9 both methods " << dt << " s)";
        }
    }
}

void morse_formula(Verdict& v) {
    v.require(morse_vector(parse_permutation("1,4,3,2,5")) == std::vector{0, 1, 2, 1, 0}, "(1,4,3,2,5)");
    for (int n = 1; n <= 12; ++n) {
        const auto m = morse_vector(Permutation::identity(n));
        bool alt = true;
        for (int k = 0; k < n; ++k) alt = alt && m[static_cast<std::size_t>(k)] == k % 2;
        v.require(alt, "identity alternates at n=" + std::to_string(n));
    }
    std::size_t checked = 0;
    for (int n : {1, 3, 5, 7, 9, 11}) {
        for (const auto& s : enumerate_sturm_arches(n)) {
            const auto m = morse_vector(s);
            v.require(m.front() == 0 && m.back() == 0, "i_1 = i_N = 0 for " + s.to_string());
            ++checked;
        }
    }
    v.detail << " boundary indices checked on " << checked << " Sturm permutations";
}

void gcd_identities(Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t cases = 0, mismatches = 0;
    std::vector<int> alpha;
    std::function<void()> rec = [&] {
        if (!alpha.empty()) {
            const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
            const SeaweedComposition sc{alpha, {total}};
            const int formula = birainbow_formula(alpha);
            const int traced = billiard_components(billiard_from_seaweed(sc));
            const int oracle_count = oracle::components(seaweed_meander(sc));
            ++cases;
            if (formula != traced || formula != oracle_count) ++mismatches;
        }
        if (alpha.size() == 3) return;
        for (int a = 1; a <= 8; ++a) {
            alpha.push_back(a);
            rec();
            alpha.pop_back();
        }
    };
    rec();
    const double dt = seconds_since(t0);
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.require(dt < 5.0, "under 5 s");
    v.detail << " " << cases << " bi-rainbows, " << mismatches << " mismatches, " << dt << " s";
}

void doubling(Verdict& v) {
    const auto m = seaweed_meander(parse_seaweed("2,2|1,3"));
    const auto doubled = open_to_rainbow(m);
    v.require(doubled == seaweed_meander(parse_seaweed("2,2,3,1|8")), "block structure 2,2,3,1|8");
    v.require(doubled.size() == 16, "16 vertices");
    v.require(count_components(doubled) == count_components(m), "components preserved");
    std::mt19937_64 rng(4);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 12)(rng);
        const auto c = oracle::random_closed_meander(n, rng);
        const auto d = open_to_rainbow(c);
        if (d.size() != 2 * c.size() || oracle::components(d) != oracle::components(c)) ++bad;
    }
    v.require(bad == 0, std::to_string(bad) + " random failures");
    v.detail << " 1000 random meanders, " << bad << " failures";
}

void billiard_equivalence(Verdict& v) {
    // Exhaustive: every pair of compositions of n <= 10 with parts <= 6.
    std::size_t cases = 0, mismatches = 0;
    for (int n = 1; n <= 10; ++n) {
        const auto comps = compositions(n, 6);
        for (const auto& a : comps)
            for (const auto& b : comps) {
                const SeaweedComposition sc{a, b};
                ++cases;
                if (billiard_components(billiard_from_seaweed(sc)) != count_components(seaweed_meander(sc)))
                    ++mismatches;
            }
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(11, 40)(rng);
        const SeaweedComposition sc{random_composition(n, rng), random_composition(n, rng)};
        ++cases;
        if (billiard_components(billiard_from_seaweed(sc)) != oracle::components(seaweed_meander(sc))) ++mismatches;
    }
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.detail << " " << cases << " compositions, " << mismatches << " mismatches";
}

void temperley_lieb(Verdict& v) {
    int relation_failures = 0;
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i) {
            const auto ei = generator_diagram(i, n);
            const auto sq = compose(ei, ei);
            if (!sq.same_pairing(ei) || sq.loop_exponent() != 1) ++relation_failures;
            for (int j = 1; j < n; ++j) {
                const auto ej = generator_diagram(j, n);
                if (std::abs(i - j) == 1 && !(compose(compose(ei, ej), ei) == ei)) ++relation_failures;
                if (std::abs(i - j) >= 2 && !(compose(ei, ej) == compose(ej, ei))) ++relation_failures;
            }
        }
    v.require(relation_failures == 0, "defining relations");
    v.require(markov_trace_exponent(parse_tl_word("N=4: 2 1 3")) == 1, "trace of e2 e1 e3");
    std::mt19937_64 rng(6);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto w = oracle::random_word(rng);
        const auto wm = word_to_meander(w);
        const int closure = markov_trace_exponent(w);
        if (closure != wm.interior_loops + count_components(wm.meander) || closure != oracle::trace_exponent(w)) ++bad;
    }
    v.require(bad == 0, std::to_string(bad) + " trace mismatches");
    v.detail << " relations N<=8, 1000 random words, " << bad << " mismatches";
}

void shooting(Verdict& v) {
    const auto f = Nonlinearity::cubic(15.0);
    const auto eq = find_equilibria(f);
    v.require(eq.equilibria.size() == 5, "five equilibria");
    const auto sigma = sturm_permutation_numeric(eq);
    v.require(sigma.to_string() == "1,4,3,2,5", "permutation " + sigma.to_string());
    v.require(is_sturm(sigma), "Sturm");
    v.require(morse_vector(sigma) == std::vector{0, 1, 2, 1, 0}, "Morse vector");
    EquilibriaOptions half;
    half.shoot.tol *= 0.5;
    v.require(sturm_permutation_numeric(f, half) == sigma, "stable under tolerance halving");
    v.detail << " sigma=" << sigma.to_string() << " from " << eq.equilibria.size() << " equilibria";
}

bool signs_preserved(const BianchiState& s0, const Trajectory& traj) {
    auto sgn = [](double x) { return (x > 0) - (x < 0); };
    for (const auto& s : traj.samples) {
        if (sgn(s.state.N1) != sgn(s0.N1) || sgn(s.state.N2) != sgn(s0.N2) || sgn(s.state.N3) != sgn(s0.N3))
            return false;
    }
    return true;
}

void bianchi_invariants(Verdict& v) {
    double worst = 0;
    for (int k = 0; k < 360; ++k) {
        const double th = kTwoPi * k / 360;
        worst = std::max(worst, max_norm(rhs({0, 0, 0, std::cos(th), std::sin(th)})));
    }
    for (int k = 0; k < 100; ++k) {
        const double n = -2.0 + 4.0 * k / 99;
        worst = std::max(worst, max_norm(rhs({0, n, n, -1, 0})));
    }
    v.require(worst <= 1e-12, "rhs vanishes on equilibria");

    // Regression ensemble: vacuum runs toward the singularity.
    IntegrationConfig tight;
    tight.rel_tol = tight.abs_tol = 1e-10;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> logn(-4, -1), angle(0, kTwoPi);
    double drift = 0;
    int violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        // Half the ensemble is type IX, half type VIII.
        const double s3 = trial % 2 == 0 ? 1.0 : -1.0;
        const auto s0 = vacuum_state(std::pow(10, logn(rng)), std::pow(10, logn(rng)),
                                     s3 * std::pow(10, logn(rng)), angle(rng));
        const auto traj = integrate(s0, FluidParameter{}, Direction::Backward, 50.0, tight);
        for (const auto& s : traj.samples) drift = std::max(drift, std::abs(s.derived.Omega));
        if (!signs_preserved(s0, traj)) ++violations;
    }
    v.require(drift <= 1e-6, "vacuum drift");
    v.require(violations == 0, "sign invariance");
    v.detail << " max|rhs|=" << worst << " max|Omega|=" << drift << " sign violations=" << violations
             << " over 20 trajectories";
}

void kasner_map(Verdict& v) {
    const EmanationConfig gr(2.0);
    double total = 0;
    for (int c = 0; c < 3; ++c) total += corner_image(ArcSet::full(), c, gr).measure();
    v.require(std::abs(total / kDeg - 720.0) <= 1e-6, "double cover");
    const auto im = kasner_images(0.0, gr);
    v.require(im.size() == 1 && im[0].theta == std::numbers::pi, "0 maps to 180");

    // Shadowing: a vacuum type IX run started 1e-5 off the Kasner circle,
    // followed toward the singularity. Epochs are local minima of |N|.
    const auto t0 = std::chrono::steady_clock::now();
    const double theta0 = 20 * kDeg;
    IntegrationConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    cfg.max_step = 0.05;
    const auto traj = integrate(vacuum_state(1e-5, 1e-5, 1e-5, theta0), FluidParameter(1.0), Direction::Backward,
                                2000.0, cfg);
    auto norm = [&](std::size_t k) {
        const auto& s = traj.samples[k].state;
        return std::sqrt(s.N1 * s.N1 + s.N2 * s.N2 + s.N3 * s.N3);
    };
    std::vector<double> epochs{theta0};
    for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
        if (norm(k) < 1e-2 && norm(k) <= norm(k - 1) && norm(k) < norm(k + 1)) {
            const double th = kasner_angle(traj.samples[k].state).theta;
            if (circle_distance(th, epochs.back()) > 1e-6) epochs.push_back(th);
        }
    }
    int matched = 0;
    double worst = 0;
    for (std::size_t k = 0; k + 1 < epochs.size(); ++k) {
        const auto next = kasner_images(epochs[k], gr);
        if (next.size() != 1) break;
        const double err = circle_distance(next[0].theta, epochs[k + 1]);
        if (err > 5 * kDeg) break;
        worst = std::max(worst, err);
        ++matched;
    }
    const double dt = seconds_since(t0);
    v.require(matched >= 3, "shadowing iterates");
    v.require(dt < 60.0, "under 1 min");
    v.detail << " image sum=" << total / kDeg << " deg, shadowed " << matched << " iterates (max error "
             << worst / kDeg << " deg, " << dt << " s)";
}

void hl_regimes(Verdict& v) {
    double tiled = 0;
    for (const Arc& a : near_arcs(EmanationConfig(2.0))) tiled += a.length;
    v.require(std::abs(tiled / kDeg - 360.0) <= 1e-9, "near arcs tile");

    const auto stats = termination_stats(10000, 50, EmanationConfig(1.8), 20240601);
    v.require(stats.fraction >= 0.99, "termination fraction");

    // Every 1 degree arc starting at an integer degree.
    const EmanationConfig hl(2.4);
    int worst_steps = 0;
    bool covered = true;
    for (int k = 0; k < 360; ++k) {
        const auto steps = ifs_steps_to_cover(ArcSet({Arc{k * kDeg, 1 * kDeg}}), hl);
        if (!steps) {
            covered = false;
            break;
        }
        worst_steps = std::max(worst_steps, *steps);
    }
    const auto from10 = ifs_steps_to_cover(ArcSet({Arc{10 * kDeg, 1 * kDeg}}), hl);
    v.require(covered, "IFS coverage");

    const auto traj = integrate(vacuum_state(0.1, 0.1, 0.1, 20 * kDeg), FluidParameter{}, Direction::Backward, 200.0);
    const auto sums = mixmaster_integrals(traj);
    bool nondecreasing = true;
    for (std::size_t k = 1; k < sums.size(); ++k) nondecreasing = nondecreasing && sums[k].J >= sums[k - 1].J;
    const std::size_t n = sums.size(), start = n - n / 10;
    constexpr int kWindows = 10;
    bool shrinking = true;
    double prev = INFINITY;
    for (int w = 0; w < kWindows; ++w) {
        const std::size_t a = start + (n - 1 - start) * static_cast<std::size_t>(w) / kWindows;
        const std::size_t b = start + (n - 1 - start) * static_cast<std::size_t>(w + 1) / kWindows;
        const double inc = sums[b].J - sums[a].J;
        shrinking = shrinking && inc <= prev;
        prev = inc;
    }
    const double tail = sums.back().J - sums[start].J;
    v.require(nondecreasing, "J nondecreasing");
    v.require(shrinking && tail <= 1e-3 * sums.back().J, "J increments decrease");
    v.detail << " near arcs=" << tiled / kDeg << " deg, d=1.8 fraction=" << stats.fraction << ", d=2.4 cover in "
             << (from10 ? std::to_string(*from10) : "never") << " steps from [10,11) deg (worst " << worst_steps
             << " over 360 arcs), J=" << sums.back().J << " last-decade increment=" << tail;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, void (*)(Verdict&)>> criteria{
        {"sturm-characterization", sturm_characterization},
        {"morse-formula", morse_formula},
        {"gcd-identities", gcd_identities},
        {"doubling", doubling},
        {"billiard-equivalence", billiard_equivalence},
        {"temperley-lieb", temperley_lieb},
        {"shooting", shooting},
        {"bianchi-invariants", bianchi_invariants},
        {"kasner-map", kasner_map},
        {"hl-regimes", hl_regimes},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            check(v);
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        if (!v.pass) ++failures;
        std::printf("%s %d %s:%s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures;
}
