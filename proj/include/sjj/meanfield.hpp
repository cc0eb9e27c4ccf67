#pragma once

// Classical (z, theta) dynamics of two tunnel-coupled bright solitons.
// Time is the dimensionless tau = kappa*N*t; energies are in units of kappa*N.

#include <string_view>
#include <vector>

namespace sjj::meanfield {

struct State {
    double z = 0.0;      // population imbalance (N2 - N1)/N, in [-1, 1]
    double theta = 0.0;  // phase difference, unwrapped
};

struct Derivative {
    double dz = 0.0;
    double dtheta = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<double> energies;
};

Derivative rhs(const State& s, double coupling);

// h = -(Lambda/2) z^2 - (1 - z^2)(1 - 0.21 z^2) cos(theta); its canonical
// equations are exactly rhs().
double energy_h(const State& s, double coupling);

inline constexpr double kDefaultStep = 1e-3;

// Fixed-step classical Runge-Kutta. The last step is shortened to land on
// tau_max. Throws NumericalError if |z| leaves [-1, 1] by more than 1e-9.
// Every record_every-th step is stored, plus the final one.
Trajectory integrate(const State& s0, double coupling, double tau_max, double dtau = kDefaultStep,
                     int record_every = 1);

enum class SteadyBranch { Symmetric, Imbalanced, Edge };
std::string_view to_string(SteadyBranch branch);

struct SteadyState {
    double z;
    double theta;
    SteadyBranch branch;
};

// Symmetric (0, 0) always; imbalanced z = +-sqrt((1.21 - Lambda/2)/0.42),
// theta = 0 for 1.58 < Lambda <= 2.42; edge z = +-1, cos(theta) = Lambda/1.58
// for 0 < Lambda <= 1.58.
std::vector<SteadyState> steady_states(double coupling);

// I(z) = int_0^inf dx / (cosh^2 x + sinh^2 (z x)), adaptive Simpson.
double overlap_integral(double z, double abs_tol = 1e-12);

// Quadratic fit 1 - 0.21 z^2 used throughout the soliton model.
inline double overlap_fit(double z) { return 1.0 - 0.21 * z * z; }

double kappa_eff(double z, double kappa);
// Lambda / ((1 - 0.21 z^2) sqrt(1 - z^2)); +inf at |z| = 1.
double lambda_eff(double z, double coupling);

// Reduce an unwrapped phase to (-pi, pi].
double wrap_phase(double theta);

}  // namespace sjj::meanfield
