#include "sjj/meanfield.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sjj/errors.hpp"

namespace sjj::meanfield {

namespace {

void require_imbalance(double z, const char* where) {
    if (!(std::abs(z) <= 1.0)) throw DomainError(std::string(where) + ": |z| must be <= 1");
}

}  // namespace

Derivative rhs(const State& s, double coupling) {
    const double z2 = s.z * s.z;
    return {(1.0 - z2) * (1.0 - 0.21 * z2) * std::sin(s.theta),
            coupling * s.z - 2.0 * s.z * (1.21 - 0.42 * z2) * std::cos(s.theta)};
}

double energy_h(const State& s, double coupling) {
    const double z2 = s.z * s.z;
    return -0.5 * coupling * z2 - (1.0 - z2) * (1.0 - 0.21 * z2) * std::cos(s.theta);
}

Trajectory integrate(const State& s0, double coupling, double tau_max, double dtau, int record_every) {
    if (!(dtau > 0.0) || !std::isfinite(dtau)) throw DomainError("integrate: dtau must be > 0");
    if (!(tau_max >= 0.0) || !std::isfinite(tau_max)) throw DomainError("integrate: tau_max must be >= 0");
    if (record_every < 1) throw DomainError("integrate: record_every must be >= 1");
    require_imbalance(s0.z, "integrate");

    const double ratio = tau_max / dtau;
    if (ratio > 1e9) throw DomainError("integrate: too many steps (tau_max / dtau > 1e9)");
    auto steps = static_cast<long long>(std::ceil(ratio - 1e-9));
    if (steps < 0) steps = 0;

    Trajectory traj;
    const auto reserve = static_cast<std::size_t>(steps / record_every + 2);
    traj.times.reserve(reserve);
    traj.states.reserve(reserve);
    traj.energies.reserve(reserve);
    auto record = [&](double t, const State& s) {
        traj.times.push_back(t);
        traj.states.push_back(s);
        traj.energies.push_back(energy_h(s, coupling));
    };

    State s = s0;
    record(0.0, s);
    for (long long k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dtau;
        const double h = (k + 1 == steps) ? tau_max - t : dtau;
        const Derivative k1 = rhs(s, coupling);
        const Derivative k2 = rhs({s.z + 0.5 * h * k1.dz, s.theta + 0.5 * h * k1.dtheta}, coupling);
        const Derivative k3 = rhs({s.z + 0.5 * h * k2.dz, s.theta + 0.5 * h * k2.dtheta}, coupling);
        const Derivative k4 = rhs({s.z + h * k3.dz, s.theta + h * k3.dtheta}, coupling);
        s.z += h / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz);
        s.theta += h / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta);
        if (!std::isfinite(s.z) || !std::isfinite(s.theta))
            throw NumericalError("integrate: non-finite state at tau = " + std::to_string(t + h));
        if (std::abs(s.z) > 1.0 + 1e-9)
            throw NumericalError("integrate: |z| left [-1, 1] at tau = " + std::to_string(t + h));
        if ((k + 1) % record_every == 0 || k + 1 == steps) record(t + h, s);
    }
    return traj;
}

std::string_view to_string(SteadyBranch branch) {
    switch (branch) {
        case SteadyBranch::Symmetric: return "symmetric";
        case SteadyBranch::Imbalanced: return "imbalanced";
        case SteadyBranch::Edge: return "edge";
    }
    return "unknown";
}

std::vector<SteadyState> steady_states(double coupling) {
    if (!(coupling >= 0.0)) throw DomainError("steady_states: coupling must be >= 0");
    std::vector<SteadyState> out{{0.0, 0.0, SteadyBranch::Symmetric}};
    if (coupling > 1.58 && coupling <= 2.42) {
        const double z = std::sqrt(std::max(0.0, (1.21 - 0.5 * coupling) / 0.42));
        out.push_back({z, 0.0, SteadyBranch::Imbalanced});
        out.push_back({-z, 0.0, SteadyBranch::Imbalanced});
    }
    if (coupling > 0.0 && coupling <= 1.58) {
        const double theta = std::acos(std::min(1.0, coupling / 1.58));
        out.push_back({1.0, theta, SteadyBranch::Edge});
        out.push_back({-1.0, theta, SteadyBranch::Edge});
    }
    return out;
}

namespace {

struct Simpson {
    double z;
    double integrand(double x) const {
        const double c = std::cosh(x);
        const double s = std::sinh(z * x);
        return 1.0 / (c * c + s * s);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) const {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = integrand(lm);
        const double frm = integrand(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

double overlap_integral(double z, double abs_tol) {
    require_imbalance(z, "overlap_integral");
    // Past cosh^2 x > 1e16 the integrand is below 1e-16 and the remaining
    // tail is bounded by 2 exp(-2 x_max) < 1e-16.
    const double x_max = std::acosh(1e8);
    const Simpson rule{z};
    // Split into unit panels so the smooth peak near x = 0 is resolved before
    // the adaptive recursion starts.
    const int panels = static_cast<int>(std::ceil(x_max));
    const double width = x_max / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = p * width;
        const double b = a + width;
        const double fa = rule.integrand(a);
        const double fb = rule.integrand(b);
        const double fm = rule.integrand(0.5 * (a + b));
        const double whole = width / 6.0 * (fa + 4.0 * fm + fb);
        total += rule.recurse(a, b, fa, fm, fb, whole, abs_tol / panels, 40);
    }
    return total;
}

double kappa_eff(double z, double kappa) {
    require_imbalance(z, "kappa_eff");
    if (!(kappa > 0.0)) throw DomainError("kappa_eff: kappa must be > 0");
    return kappa * overlap_fit(z) * std::sqrt(1.0 - z * z);
}

double lambda_eff(double z, double coupling) {
    require_imbalance(z, "lambda_eff");
    const double denom = overlap_fit(z) * std::sqrt(1.0 - z * z);
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return coupling / denom;
}

double wrap_phase(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    if (r > std::numbers::pi) r -= two_pi;
    return r;
}

}  // namespace sjj::meanfield
