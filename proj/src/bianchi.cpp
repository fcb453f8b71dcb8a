#include "globdyn/bianchi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "globdyn/angles.hpp"
#include "globdyn/error.hpp"

namespace globdyn {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

using Vec5 = std::array<double, 5>;

}  // namespace

FluidParameter::FluidParameter(double gamma) : gamma_(gamma) {
    if (!(gamma >= 0.0 && gamma < 2.0))
        throw Error(Errc::InvalidArgument, "fluid parameter gamma must lie in [0, 2)");
}

DerivedQuantities derived(const BianchiState& s, FluidParameter gamma) {
    const double n1 = s.N1, n2 = s.N2, n3 = s.N3;
    DerivedQuantities d;
    d.S_plus = 0.5 * ((n2 - n3) * (n2 - n3) - n1 * (2.0 * n1 - n2 - n3));
    d.S_minus = 0.5 * kSqrt3 * (n3 - n2) * (n1 - n2 - n3);
    d.K = 0.75 * (n1 * n1 + n2 * n2 + n3 * n3 - 2.0 * (n1 * n2 + n2 * n3 + n3 * n1));
    const double shear2 = s.Sp * s.Sp + s.Sm * s.Sm;
    d.Omega = 1.0 - shear2 - d.K;
    d.q = 2.0 * shear2 + 0.5 * (3.0 * gamma.value() - 2.0) * d.Omega;
    return d;
}

BianchiState rhs(const BianchiState& s, FluidParameter gamma) {
    const DerivedQuantities d = derived(s, gamma);
    return {
        (d.q - 4.0 * s.Sp) * s.N1,
        (d.q + 2.0 * s.Sp + 2.0 * kSqrt3 * s.Sm) * s.N2,
        (d.q + 2.0 * s.Sp - 2.0 * kSqrt3 * s.Sm) * s.N3,
        (d.q - 2.0) * s.Sp - 3.0 * d.S_plus,
        (d.q - 2.0) * s.Sm - 3.0 * d.S_minus,
    };
}

BianchiState vacuum_state(double N1, double N2, double N3, double theta) {
    const double K = derived({N1, N2, N3, 0.0, 0.0}).K;
    if (K > 1.0) throw Error(Errc::InvalidArgument, "curvature K > 1 admits no vacuum shear");
    const double r = std::sqrt(1.0 - K);
    return {N1, N2, N3, r * std::cos(theta), r * std::sin(theta)};
}

Trajectory integrate(const BianchiState& s0, FluidParameter gamma, Direction direction,
                     double t_span, const IntegrationConfig& cfg) {
    if (!(t_span > 0.0)) throw Error(Errc::InvalidArgument, "t_span must be positive");
    if (!(cfg.rel_tol > 0.0 && cfg.abs_tol > 0.0 && cfg.max_step > 0.0 && cfg.initial_step > 0.0))
        throw Error(Errc::InvalidArgument, "integration tolerances and steps must be positive");

    Trajectory traj;
    traj.direction = direction;
    traj.gamma = gamma.value();

    // Backward runs integrate the reversed field in s = -t. odeint's step
    // limiter clamps dt to +max_dt, so negative steps cannot be used directly.
    const double sign = direction == Direction::Forward ? 1.0 : -1.0;
    auto system = [gamma, sign](const Vec5& y, Vec5& dy, double) {
        dy = rhs(BianchiState::from_array(y), gamma).as_array();
        for (double& v : dy) v *= sign;
    };
    auto record = [&traj, gamma, sign](const Vec5& y, double s_time) {
        const double t = sign * s_time;
        if (!std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); })) {
            std::ostringstream os;
            os << "state became nonfinite at t=" << t;
            throw Error(Errc::Nonfinite, os.str());
        }
        const BianchiState s = BianchiState::from_array(y);
        traj.samples.push_back({t, s, derived(s, gamma)});
    };

    auto stepper = odeint::make_controlled(cfg.abs_tol, cfg.rel_tol, cfg.max_step,
                                           odeint::runge_kutta_dopri5<Vec5>());
    Vec5 y = s0.as_array();
    try {
        odeint::integrate_adaptive(stepper, system, y, 0.0, t_span,
                                   std::min(cfg.initial_step, cfg.max_step), record);
    } catch (const odeint::odeint_error& e) {
        throw Error(Errc::StepSizeUnderflow, e.what());
    }
    return traj;
}

std::string_view to_string(BianchiType type) noexcept {
    switch (type) {
    case BianchiType::I: return "I";
    case BianchiType::II: return "II";
    case BianchiType::VI0: return "VI0";
    case BianchiType::VII0: return "VII0";
    case BianchiType::VIII: return "VIII";
    case BianchiType::IX: return "IX";
    }
    return "?";
}

BianchiType classify_type(const BianchiState& s) noexcept {
    int positive = 0;
    int negative = 0;
    for (double n : {s.N1, s.N2, s.N3}) {
        if (n > 0.0) ++positive;
        else if (n < 0.0) ++negative;
    }
    switch (positive + negative) {
    case 0: return BianchiType::I;
    case 1: return BianchiType::II;
    case 2: return (positive == 2 || negative == 2) ? BianchiType::VII0 : BianchiType::VI0;
    default: return (positive == 3 || negative == 3) ? BianchiType::IX : BianchiType::VIII;
    }
}

std::vector<IntegralSample> mixmaster_integrals(const Trajectory& traj) {
    auto integrands = [](const BianchiState& s) {
        const double p12 = std::abs(s.N1 * s.N2);
        const double p23 = std::abs(s.N2 * s.N3);
        const double p31 = std::abs(s.N3 * s.N1);
        return std::pair{std::sqrt(p12) + std::sqrt(p23) + std::sqrt(p31), p12 + p23 + p31};
    };
    std::vector<IntegralSample> out;
    out.reserve(traj.samples.size());
    double I = 0.0;
    double J = 0.0;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const auto& cur = traj.samples[k];
        if (k > 0) {
            const auto& prev = traj.samples[k - 1];
            const double dt = std::abs(cur.t - prev.t);
            const auto [fi0, fj0] = integrands(prev.state);
            const auto [fi1, fj1] = integrands(cur.state);
            I += 0.5 * (fi0 + fi1) * dt;
            J += 0.5 * (fj0 + fj1) * dt;
        }
        out.push_back({cur.t, I, J});
    }
    return out;
}

KasnerAngle kasner_angle(const BianchiState& s) {
    const double theta = normalize_angle(std::atan2(s.Sm, s.Sp));
    const double radius = std::hypot(s.Sp, s.Sm);
    const double curvature = std::sqrt(s.N1 * s.N1 + s.N2 * s.N2 + s.N3 * s.N3);
    return {theta, std::abs(radius - 1.0) + curvature};
}

double max_norm(const BianchiState& v) noexcept {
    const auto a = v.as_array();
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace globdyn
