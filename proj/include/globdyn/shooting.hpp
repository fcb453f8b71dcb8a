#pragma once

#include <functional>
#include <string>
#include <vector>

#include "globdyn/permutation.hpp"

namespace globdyn {

/// Autonomous nonlinearity f(v) for the Neumann equilibrium problem
/// v'' + f(v) = 0 on [0, 1].
struct Nonlinearity {
    std::function<double(double)> f;
    std::string description;

    double operator()(double v) const { return f(v); }

    /// f(v) = sum_k coeffs[k] v^k.
    static Nonlinearity polynomial(std::vector<double> coeffs);
    /// Chafee-Infante family f(v) = lambda (v - v^3).
    static Nonlinearity cubic(double lambda);
    /// f(v) = slope * v + offset.
    static Nonlinearity linear(double slope, double offset = 0.0);
};

struct ShootConfig {
    double tol = 1e-10;              // absolute and relative integration tolerance
    double escape_bound = 1e6;       // |v| + |v'| beyond this aborts the shot
};

/// State at x = 1 of the solution with v(0) = a, v'(0) = 0.
struct ShootOutcome {
    double a = 0.0;
    double v1 = 0.0;
    double w1 = 0.0;
};

/// Throws Escaped when the solution leaves the escape bound before x = 1.
ShootOutcome shoot(const Nonlinearity& f, double a, const ShootConfig& cfg = {});

struct EquilibriaOptions {
    double a_lo = -2.0;
    double a_hi = 2.0;
    int grid = 2048;
    ShootConfig shoot{};
    int max_halvings = 60;
    double hyperbolicity_threshold = 1e-8;  // on |d w1 / d a| at a root
};

struct Equilibrium {
    double a = 0.0;      // v(0)
    double v1 = 0.0;     // v(1)
    double slope = 0.0;  // d v'(1) / d a
};

struct EquilibriaResult {
    std::vector<Equilibrium> equilibria;  // sorted by a
    std::vector<double> escaped;          // grid values whose shot escaped
};

/// Roots of a -> v'(1; a) on a uniform grid, refined by bisection.
/// Throws NonHyperbolicSuspected when a root is too flat to trust.
EquilibriaResult find_equilibria(const Nonlinearity& f, const EquilibriaOptions& opts = {});

/// sigma(j) = x=0 rank of the equilibrium with the j-th smallest v(1).
/// Throws TieAtBoundary when two v(1) values are not resolved.
Permutation sturm_permutation_numeric(const EquilibriaResult& eq, double resolution = 1e-7);
Permutation sturm_permutation_numeric(const Nonlinearity& f, const EquilibriaOptions& opts = {});

struct CurvePoint {
    double a = 0.0;
    double v1 = 0.0;
    double w1 = 0.0;
    bool escaped = false;
};

/// Image of the Neumann axis {v' = 0} at x = 1, sampled on `a_grid`;
/// escaped shots are kept as gap markers.
std::vector<CurvePoint> shooting_curve(const Nonlinearity& f, const std::vector<double>& a_grid,
                                       const ShootConfig& cfg = {});

std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace globdyn
