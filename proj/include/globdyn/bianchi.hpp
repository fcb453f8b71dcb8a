#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace globdyn {

/// Expansion-normalized class A Bianchi state: curvature variables N1..N3
/// and shear variables Sigma_+, Sigma_-.
struct BianchiState {
    double N1 = 0.0;
    double N2 = 0.0;
    double N3 = 0.0;
    double Sp = 0.0;
    double Sm = 0.0;

    std::array<double, 5> as_array() const { return {N1, N2, N3, Sp, Sm}; }
    static BianchiState from_array(const std::array<double, 5>& y) {
        return {y[0], y[1], y[2], y[3], y[4]};
    }
    friend bool operator==(const BianchiState&, const BianchiState&) = default;
};

struct DerivedQuantities {
    double S_plus = 0.0;
    double S_minus = 0.0;
    double q = 0.0;
    double K = 0.0;
    double Omega = 0.0;
};

/// Perfect-fluid equation of state parameter, 0 <= gamma < 2.
class FluidParameter {
public:
    explicit FluidParameter(double gamma = 4.0 / 3.0);
    double value() const noexcept { return gamma_; }

private:
    double gamma_;
};

DerivedQuantities derived(const BianchiState& s, FluidParameter gamma = FluidParameter{});

/// Right-hand side of the Wainwright-Hsu system, returned as a state-shaped
/// derivative.
BianchiState rhs(const BianchiState& s, FluidParameter gamma = FluidParameter{});

/// Vacuum state (Omega = 0) with the given curvature variables and shear
/// direction theta; the shear radius is sqrt(1 - K). Throws InvalidArgument
/// when K > 1.
BianchiState vacuum_state(double N1, double N2, double N3, double theta);

enum class Direction { Forward, Backward };

struct IntegrationConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.1;
    double initial_step = 1e-3;
};

struct TrajectorySample {
    double t = 0.0;
    BianchiState state;
    DerivedQuantities derived;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // one per accepted step
    Direction direction = Direction::Forward;
    double gamma = 4.0 / 3.0;
};

/// Adaptive Dormand-Prince 5(4) run over |t| <= t_span, starting at t = 0.
/// Throws StepSizeUnderflow when the controller stalls and Nonfinite on
/// overflow.
Trajectory integrate(const BianchiState& s0, FluidParameter gamma, Direction direction,
                     double t_span, const IntegrationConfig& cfg = {});

enum class BianchiType { I, II, VI0, VII0, VIII, IX };

std::string_view to_string(BianchiType type) noexcept;

/// Lie-algebra type from the sign pattern of (N1, N2, N3).
BianchiType classify_type(const BianchiState& s) noexcept;

struct IntegralSample {
    double t = 0.0;
    double I = 0.0;  // running sum of sqrt|N_i N_j|
    double J = 0.0;  // running sum of |N_i N_j|
};

/// Trapezoid partial sums over the trajectory's samples, accumulated in |dt|.
std::vector<IntegralSample> mixmaster_integrals(const Trajectory& traj);

struct KasnerAngle {
    double theta = 0.0;     // atan2(Sigma_-, Sigma_+) in [0, 2 pi)
    double distance = 0.0;  // | |Sigma| - 1 | + |N|
};

KasnerAngle kasner_angle(const BianchiState& s);

/// Max-norm of a state-shaped vector.
double max_norm(const BianchiState& v) noexcept;

}  // namespace globdyn
