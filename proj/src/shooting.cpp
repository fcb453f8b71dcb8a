#include "globdyn/shooting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "globdyn/error.hpp"

namespace globdyn {

namespace odeint = boost::numeric::odeint;

namespace {

using PhaseState = std::array<double, 2>;

struct EscapeSignal {};

std::string describe_polynomial(const std::vector<double>& coeffs) {
    std::ostringstream os;
    os << "poly(";
    for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? "," : "") << coeffs[k];
    os << ")";
    return os.str();
}

// Shoots and reports escape as an empty optional instead of throwing, which
// keeps the grid scan free of exception traffic.
std::optional<ShootOutcome> try_shoot(const Nonlinearity& f, double a, const ShootConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
    PhaseState state{a, 0.0};
    auto system = [&f](const PhaseState& s, PhaseState& ds, double) {
        ds[0] = s[1];
        ds[1] = -f(s[0]);
    };
    auto watch = [&cfg](const PhaseState& s, double) {
        const double size = std::abs(s[0]) + std::abs(s[1]);
        if (!std::isfinite(size) || size > cfg.escape_bound) throw EscapeSignal{};
    };
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<PhaseState>>(cfg.tol, cfg.tol);
    try {
        odeint::integrate_adaptive(stepper, system, state, 0.0, 1.0, 1e-3, watch);
    } catch (const EscapeSignal&) {
        return std::nullopt;
    } catch (const odeint::odeint_error&) {
        return std::nullopt;
    }
    if (!std::isfinite(state[0]) || !std::isfinite(state[1])) return std::nullopt;
    return ShootOutcome{a, state[0], state[1]};
}

}  // namespace

Nonlinearity Nonlinearity::polynomial(std::vector<double> coeffs) {
    std::string description = describe_polynomial(coeffs);
    return {[c = std::move(coeffs)](double v) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
                return acc;
            },
            std::move(description)};
}

Nonlinearity Nonlinearity::cubic(double lambda) {
    std::ostringstream os;
    os << "cubic(" << lambda << ")";
    return {[lambda](double v) { return lambda * (v - v * v * v); }, os.str()};
}

Nonlinearity Nonlinearity::linear(double slope, double offset) {
    std::ostringstream os;
    os << "linear(" << slope << "," << offset << ")";
    return {[slope, offset](double v) { return slope * v + offset; }, os.str()};
}

ShootOutcome shoot(const Nonlinearity& f, double a, const ShootConfig& cfg) {
    auto out = try_shoot(f, a, cfg);
    if (!out) {
        std::ostringstream os;
        os << "shot from a=" << a << " left |v|+|v'| <= " << cfg.escape_bound;
        throw Error(Errc::Escaped, os.str());
    }
    return *out;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2) throw Error(Errc::InvalidArgument, "grid needs at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        grid[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (count - 1);
    grid.back() = hi;
    return grid;
}

EquilibriaResult find_equilibria(const Nonlinearity& f, const EquilibriaOptions& opts) {
    if (!(opts.a_lo < opts.a_hi)) throw Error(Errc::InvalidArgument, "empty shooting window");
    const auto grid = uniform_grid(opts.a_lo, opts.a_hi, opts.grid);

    EquilibriaResult result;
    std::vector<std::optional<ShootOutcome>> shots;
    shots.reserve(grid.size());
    for (double a : grid) {
        shots.push_back(try_shoot(f, a, opts.shoot));
        if (!shots.back()) result.escaped.push_back(a);
    }

    std::vector<double> roots;
    for (std::size_t k = 0; k < shots.size(); ++k) {
        if (shots[k] && shots[k]->w1 == 0.0) roots.push_back(shots[k]->a);
        if (k + 1 == shots.size() || !shots[k] || !shots[k + 1]) continue;
        double lo = shots[k]->a;
        double hi = shots[k + 1]->a;
        double w_lo = shots[k]->w1;
        const double w_hi = shots[k + 1]->w1;
        if (w_lo == 0.0 || w_hi == 0.0 || (w_lo > 0.0) == (w_hi > 0.0)) continue;
        double mid = 0.5 * (lo + hi);
        for (int h = 0; h < opts.max_halvings; ++h) {
            mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const auto s = try_shoot(f, mid, opts.shoot);
            if (!s) break;
            if (std::abs(s->w1) <= opts.shoot.tol) break;
            if ((s->w1 > 0.0) == (w_lo > 0.0)) {
                lo = mid;
                w_lo = s->w1;
            } else {
                hi = mid;
            }
        }
        roots.push_back(mid);
    }

    for (double a : roots) {
        const auto at_root = shoot(f, a, opts.shoot);
        const double h = 1e-6 * std::max(1.0, std::abs(a));
        const auto right = try_shoot(f, a + h, opts.shoot);
        const auto left = try_shoot(f, a - h, opts.shoot);
        double slope = 0.0;
        if (right && left) slope = (right->w1 - left->w1) / (2 * h);
        else if (right) slope = (right->w1 - at_root.w1) / h;
        else if (left) slope = (at_root.w1 - left->w1) / h;
        if (std::abs(slope) < opts.hyperbolicity_threshold) {
            std::ostringstream os;
            os << "equilibrium at a=" << a << " has |dw1/da|=" << std::abs(slope);
            throw Error(Errc::NonHyperbolicSuspected, os.str());
        }
        result.equilibria.push_back({a, at_root.v1, slope});
    }
    std::sort(result.equilibria.begin(), result.equilibria.end(),
              [](const Equilibrium& x, const Equilibrium& y) { return x.a < y.a; });
    return result;
}

Permutation sturm_permutation_numeric(const EquilibriaResult& eq, double resolution) {
    const auto& e = eq.equilibria;
    if (e.empty()) throw Error(Errc::Empty, "no equilibria found");
    std::vector<int> order(e.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&e](int x, int y) { return e[static_cast<std::size_t>(x)].v1 < e[static_cast<std::size_t>(y)].v1; });
    for (std::size_t j = 1; j < order.size(); ++j) {
        const double gap = e[static_cast<std::size_t>(order[j])].v1 - e[static_cast<std::size_t>(order[j - 1])].v1;
        if (gap < resolution) {
            std::ostringstream os;
            os << "equilibria " << order[j - 1] + 1 << " and " << order[j] + 1
               << " agree at x=1 to " << gap;
            throw Error(Errc::TieAtBoundary, os.str());
        }
    }
    for (int& label : order) ++label;
    return Permutation(std::move(order));
}

Permutation sturm_permutation_numeric(const Nonlinearity& f, const EquilibriaOptions& opts) {
    return sturm_permutation_numeric(find_equilibria(f, opts));
}

std::vector<CurvePoint> shooting_curve(const Nonlinearity& f, const std::vector<double>& a_grid,
                                       const ShootConfig& cfg) {
    std::vector<CurvePoint> curve;
    curve.reserve(a_grid.size());
    for (double a : a_grid) {
        if (const auto s = try_shoot(f, a, cfg)) curve.push_back({a, s->v1, s->w1, false});
        else curve.push_back({a, 0.0, 0.0, true});
    }
    return curve;
}

}  // namespace globdyn
