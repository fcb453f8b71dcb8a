#include "globdyn/kasner.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

constexpr double kTangencyTolerance = 1e-12;

}  // namespace

EmanationConfig::EmanationConfig(double d) : d_(d), half_width_(0.0) {
    if (!(d > 1.0) || !std::isfinite(d))
        throw Error(Errc::InvalidArgument, "emanation distance must exceed 1");
    half_width_ = std::acos(1.0 / d);
}

std::array<double, 2> EmanationConfig::corner_point(int corner) const {
    const double phi = corner_angle(corner);
    return {d_ * std::cos(phi), d_ * std::sin(phi)};
}

bool Arc::contains(double theta) const noexcept {
    if (length == 0.0) return circle_distance(theta, lo) <= ArcSet::kMergeTolerance;
    return normalize_angle(theta - lo) < length;
}

ArcSet::ArcSet(std::vector<Arc> arcs) {
    constexpr double tol = kMergeTolerance;
    std::vector<Arc> pieces;
    for (const Arc& a : arcs) {
        if (!std::isfinite(a.lo) || !std::isfinite(a.length) || a.length < 0.0)
            throw Error(Errc::InvalidArgument, "arc needs finite start and nonnegative length");
        if (a.length >= kTwoPi - tol) {
            arcs_ = {Arc{0.0, kTwoPi}};
            return;
        }
        const double lo = normalize_angle(a.lo);
        const double hi = lo + a.length;
        if (hi > kTwoPi) {
            pieces.push_back({lo, kTwoPi - lo});
            pieces.push_back({0.0, hi - kTwoPi});
        } else {
            pieces.push_back({lo, a.length});
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Arc& x, const Arc& y) {
        return x.lo != y.lo ? x.lo < y.lo : x.length > y.length;
    });

    std::vector<Arc> merged;
    for (const Arc& p : pieces) {
        if (!merged.empty() && p.lo <= merged.back().hi() + tol) {
            Arc& last = merged.back();
            last.length = std::max(last.hi(), p.hi()) - last.lo;
        } else {
            merged.push_back(p);
        }
    }
    if (merged.size() >= 2 && merged.front().lo <= tol && merged.back().hi() >= kTwoPi - tol) {
        const Arc wrap{merged.back().lo, (kTwoPi - merged.back().lo) + merged.front().hi()};
        merged.pop_back();
        merged.erase(merged.begin());
        if (wrap.length >= kTwoPi - tol) {
            arcs_ = {Arc{0.0, kTwoPi}};
            return;
        }
        merged.push_back(wrap);
    } else if (merged.size() == 1 && merged.front().lo <= tol &&
               merged.front().hi() >= kTwoPi - tol) {
        merged = {Arc{0.0, kTwoPi}};
    }
    arcs_ = std::move(merged);
}

bool ArcSet::is_full() const noexcept {
    return arcs_.size() == 1 && arcs_.front().length >= kTwoPi - kMergeTolerance;
}

double ArcSet::measure() const noexcept {
    double total = 0.0;
    for (const Arc& a : arcs_) total += a.length;
    return total;
}

bool ArcSet::contains(double theta) const noexcept {
    return std::any_of(arcs_.begin(), arcs_.end(), [theta](const Arc& a) { return a.contains(theta); });
}

ArcSet ArcSet::unite(const ArcSet& other) const {
    std::vector<Arc> all = arcs_;
    all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
    return ArcSet(std::move(all));
}

ArcSet ArcSet::intersect(const Arc& arc) const {
    const double b_lo = normalize_angle(arc.lo);
    const double b_hi = b_lo + arc.length;
    std::vector<Arc> pieces;
    for (const Arc& a : arcs_) {
        for (int k = -1; k <= 1; ++k) {
            const double a_lo = a.lo + k * kTwoPi;
            const double lo = std::max(a_lo, b_lo);
            const double hi = std::min(a_lo + a.length, b_hi);
            if (hi > lo) pieces.push_back({lo, hi - lo});
            else if ((a.length == 0.0 || arc.length == 0.0) && hi >= lo) pieces.push_back({lo, 0.0});
        }
    }
    return ArcSet(std::move(pieces));
}

ArcSet ArcSet::complement() const {
    std::vector<Arc> solid;
    std::copy_if(arcs_.begin(), arcs_.end(), std::back_inserter(solid),
                 [](const Arc& a) { return a.length > 0.0; });
    if (solid.empty()) return full();
    if (is_full()) return {};
    std::vector<Arc> gaps;
    for (std::size_t i = 0; i < solid.size(); ++i) {
        const Arc& cur = solid[i];
        const bool last = i + 1 == solid.size();
        const Arc& next = last ? solid.front() : solid[i + 1];
        const double gap = next.lo + (last ? kTwoPi : 0.0) - cur.hi();
        if (gap > kMergeTolerance) gaps.push_back({cur.hi(), gap});
    }
    return ArcSet(std::move(gaps));
}

bool ArcSet::subset_of(const ArcSet& other, double tol) const {
    return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) {
        return std::any_of(other.arcs_.begin(), other.arcs_.end(), [&](const Arc& b) {
            if (b.length >= kTwoPi - kMergeTolerance) return true;
            double offset = normalize_angle(a.lo - b.lo);
            if (offset > kTwoPi - tol) offset -= kTwoPi;
            return offset >= -tol && offset + a.length <= b.length + tol;
        });
    });
}

ArcSet ArcSet::rotated(double angle) const {
    std::vector<Arc> out = arcs_;
    for (Arc& a : out) a.lo += angle;
    return ArcSet(std::move(out));
}

std::array<double, 3> taub_points() {
    return {std::numbers::pi / 3.0, std::numbers::pi, 5.0 * std::numbers::pi / 3.0};
}

std::array<Arc, 3> near_arcs(const EmanationConfig& cfg) {
    const double w = cfg.half_width();
    std::array<Arc, 3> arcs;
    for (int c = 0; c < 3; ++c)
        arcs[static_cast<std::size_t>(c)] = {normalize_angle(EmanationConfig::corner_angle(c) - w), 2.0 * w};
    return arcs;
}

ArcSet stable_arcs(const EmanationConfig& cfg) {
    const auto arcs = near_arcs(cfg);
    return ArcSet(std::vector<Arc>(arcs.begin(), arcs.end())).complement();
}

double chord_image(double theta, int corner, const EmanationConfig& cfg) {
    const auto q = cfg.corner_point(corner);
    const double dx = std::cos(theta) - q[0];
    const double dy = std::sin(theta) - q[1];
    // Roots of |q + t (p - q)|^2 = 1 multiply to (d^2 - 1) / |p - q|^2; t = 1 is p.
    const double d = cfg.distance();
    const double t = (d * d - 1.0) / (dx * dx + dy * dy);
    return normalize_angle(std::atan2(q[1] + t * dy, q[0] + t * dx));
}

std::vector<KasnerImage> kasner_images(double theta, const EmanationConfig& cfg) {
    theta = normalize_angle(theta);
    const auto arcs = near_arcs(cfg);
    for (int c = 0; c < 3; ++c) {
        const Arc& arc = arcs[static_cast<std::size_t>(c)];
        if (circle_distance(theta, arc.lo) < kTangencyTolerance ||
            circle_distance(theta, arc.hi()) < kTangencyTolerance) {
            std::ostringstream os;
            os << "theta=" << degrees(theta) << " deg is a tangency point of emanation point " << c;
            throw Error(Errc::TangencyPoint, os.str());
        }
    }
    std::vector<KasnerImage> images;
    for (int c = 0; c < 3; ++c)
        if (arcs[static_cast<std::size_t>(c)].contains(theta))
            images.push_back({chord_image(theta, c, cfg), c});
    return images;
}

MultiImagePolicy parse_policy(std::string_view text) {
    if (text == "error") return MultiImagePolicy::Error;
    if (text == "lexicographic") return MultiImagePolicy::Lexicographic;
    if (text == "seeded-random") return MultiImagePolicy::SeededRandom;
    throw Error(Errc::Parse, "unknown policy '" + std::string(text) + "'");
}

std::string_view to_string(MultiImagePolicy policy) noexcept {
    switch (policy) {
    case MultiImagePolicy::Error: return "error";
    case MultiImagePolicy::Lexicographic: return "lexicographic";
    case MultiImagePolicy::SeededRandom: return "seeded-random";
    }
    return "?";
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
    case Termination::LandedInStableArc: return "landed-in-stable-arc";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::TaubHit: return "taub-hit";
    }
    return "?";
}

Itinerary iterate(double theta0, int n, const EmanationConfig& cfg, MultiImagePolicy policy,
                  std::uint64_t seed) {
    if (n < 0) throw Error(Errc::InvalidArgument, "iteration count must be nonnegative");
    std::mt19937_64 rng(seed);
    Itinerary it;
    it.steps.push_back({normalize_angle(theta0), -1});
    for (int k = 0; k < n; ++k) {
        const auto images = kasner_images(it.steps.back().theta, cfg);
        if (images.empty()) {
            it.termination = Termination::LandedInStableArc;
            return it;
        }
        std::size_t pick = 0;
        if (images.size() > 1) {
            if (policy == MultiImagePolicy::Error) {
                std::ostringstream os;
                os << "step " << k + 1 << " from theta=" << degrees(it.steps.back().theta)
                   << " deg has " << images.size() << " images";
                throw Error(Errc::MultiValued, os.str());
            }
            if (policy == MultiImagePolicy::SeededRandom)
                pick = std::uniform_int_distribution<std::size_t>(0, images.size() - 1)(rng);
        }
        it.steps.push_back({images[pick].theta, images[pick].corner});
    }
    it.termination = Termination::MaxIterations;
    return it;
}

std::vector<Era> eras(const Itinerary& it) {
    std::vector<Era> out;
    const auto& s = it.steps;
    std::size_t i = 1;
    while (i < s.size()) {
        const int a = s[i].corner;
        int b = a;
        std::size_t j = i + 1;
        if (j < s.size() && s[j].corner != a) {
            b = s[j].corner;
            ++j;
            while (j < s.size() && s[j].corner == s[j - 2].corner) ++j;
        }
        out.push_back({i, j - i, {std::min(a, b), std::max(a, b)}});
        i = j;
    }
    return out;
}

ArcSet corner_image(const ArcSet& set, int corner, const EmanationConfig& cfg) {
    const Arc domain = near_arcs(cfg)[static_cast<std::size_t>(corner)];
    const double max_length = kTwoPi - domain.length;
    std::vector<Arc> images;
    const ArcSet inside = set.intersect(domain);
    for (const Arc& piece : inside.arcs()) {
        // The chord map reverses orientation: [x, y) goes to [f(y), f(x)).
        const double fx = chord_image(piece.lo, corner, cfg);
        const double fy = chord_image(piece.hi(), corner, cfg);
        double length = piece.length == 0.0 ? 0.0 : normalize_angle(fx - fy);
        if (length > max_length) length = length > max_length + 1e-9 ? 0.0 : max_length;
        images.push_back({fy, length});
    }
    return ArcSet(std::move(images));
}

ArcSet ifs_step(const ArcSet& set, const EmanationConfig& cfg) {
    ArcSet out;
    for (int c = 0; c < 3; ++c) out = out.unite(corner_image(set, c, cfg));
    return out;
}

ArcSet ifs_iterate(const ArcSet& set, int n, const EmanationConfig& cfg) {
    if (n < 0) throw Error(Errc::InvalidArgument, "iteration count must be nonnegative");
    ArcSet cur = set;
    for (int k = 0; k < n; ++k) cur = ifs_step(cur, cfg);
    return cur;
}

std::optional<int> ifs_steps_to_cover(const ArcSet& set, const EmanationConfig& cfg, int max_steps) {
    ArcSet cur = set;
    for (int k = 0; k <= max_steps; ++k) {
        if (cur.is_full()) return k;
        cur = ifs_step(cur, cfg);
    }
    return std::nullopt;
}

namespace {

double distance_to(double x, const ArcSet& set) {
    if (set.is_full()) return 0.0;
    double best = std::numbers::pi;
    for (const Arc& a : set.arcs()) {
        if (normalize_angle(x - a.lo) <= a.length) return 0.0;
        best = std::min({best, circle_distance(x, a.lo), circle_distance(x, a.hi())});
    }
    return best;
}

double directed_hausdorff(const ArcSet& from, const ArcSet& to) {
    std::vector<double> candidates;
    for (const Arc& a : from.arcs()) {
        candidates.push_back(a.lo);
        candidates.push_back(a.hi());
    }
    const auto& arcs = to.arcs();
    for (std::size_t i = 0; i < arcs.size() && !to.is_full(); ++i) {
        const bool last = i + 1 == arcs.size();
        const double next_lo = last ? arcs.front().lo + kTwoPi : arcs[i + 1].lo;
        const double gap = next_lo - arcs[i].hi();
        if (gap <= 0.0) continue;
        const double mid = arcs[i].hi() + 0.5 * gap;
        if (distance_to(mid, from) == 0.0) candidates.push_back(mid);
    }
    double worst = 0.0;
    for (double x : candidates) worst = std::max(worst, distance_to(x, to));
    return worst;
}

}  // namespace

double hausdorff_distance(const ArcSet& a, const ArcSet& b) {
    if (a.empty() || b.empty()) throw Error(Errc::EmptyInput, "Hausdorff distance needs nonempty sets");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

TerminationStats termination_stats(std::size_t sample_count, int max_iter,
                                   const EmanationConfig& cfg, std::uint64_t seed, int jobs) {
    TerminationStats stats;
    stats.samples = sample_count;
    if (sample_count == 0) {
        stats.warning = "no samples requested; fraction reported as 0";
        return stats;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
    std::vector<double> starts(sample_count);
    for (double& theta : starts) theta = uniform(rng);

    const std::size_t workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
    std::vector<std::size_t> landed(workers, 0);
    std::vector<std::size_t> tangent(workers, 0);
    auto work = [&](std::size_t w) {
        const std::size_t begin = sample_count * w / workers;
        const std::size_t end = sample_count * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const auto it = iterate(starts[i], max_iter, cfg, MultiImagePolicy::SeededRandom,
                                        seed + i);
                if (it.termination == Termination::LandedInStableArc) ++landed[w];
            } catch (const Error& e) {
                if (e.code() != Errc::TangencyPoint) throw;
                ++tangent[w];
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::size_t w = 0; w < workers; ++w) {
        stats.terminated += landed[w];
        stats.tangency_hits += tangent[w];
    }
    stats.fraction = static_cast<double>(stats.terminated) / static_cast<double>(sample_count);
    return stats;
}

}  // namespace globdyn
