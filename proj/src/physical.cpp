#include "sjj/physical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sjj/errors.hpp"

namespace sjj::physical {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

void require_tunnel(const TrapParams& tp) { require_positive(tp.tunnel_rate, "tunnel_rate"); }

}  // namespace

double species_mass(std::string_view species) {
    if (species == "li7") return kMassLi7;
    if (species == "rb87") return kMassRb87;
    throw DomainError("unknown species '" + std::string(species) + "' (expected li7 or rb87)");
}

double a_perp(const TrapParams& tp) {
    if (tp.a_perp_override) {
        require_positive(*tp.a_perp_override, "a_perp");
        return *tp.a_perp_override;
    }
    require_positive(tp.omega_perp, "omega_perp");
    require_positive(tp.mass, "mass");
    return std::sqrt(kHbar / (tp.mass * tp.omega_perp));
}

double nu(const TrapParams& tp) {
    require_positive(tp.omega_perp, "omega_perp");
    if (!(tp.omega_x >= 0.0)) throw DomainError("omega_x must be >= 0");
    return tp.omega_x / tp.omega_perp;
}

double nonlinearity_u(const TrapParams& tp) { return 2.0 * std::numbers::pi * std::abs(tp.a_sc) / a_perp(tp); }

double coupling_lambda(const TrapParams& tp) {
    require_tunnel(tp);
    const double un = nonlinearity_u(tp) * tp.n_atoms;
    return std::sqrt(nu(tp)) * un * tp.omega_perp / (2.0 * std::sqrt(2.0 * std::numbers::pi) * tp.tunnel_rate);
}

double coupling_Lambda(const TrapParams& tp) {
    require_tunnel(tp);
    require_positive(tp.omega_perp, "omega_perp");
    const double un = nonlinearity_u(tp) * tp.n_atoms;
    return un * un * tp.omega_perp / (16.0 * tp.tunnel_rate);
}

double kappa_dimensionless(const TrapParams& tp) {
    require_tunnel(tp);
    require_positive(tp.omega_perp, "omega_perp");
    return tp.tunnel_rate / tp.omega_perp;
}

double wp_factor(const TrapParams& tp) {
    const double v = nu(tp);
    require_positive(v, "nu");
    return std::numbers::pi * kappa_dimensionless(tp) / (2.0 * v);
}

double critical_atom_number(const TrapParams& tp) {
    if (tp.a_sc == 0.0) throw DomainError("critical_atom_number: scattering length is zero");
    return 0.67 * a_perp(tp) / std::abs(tp.a_sc);
}

double gap_soliton_number(double a_perp, double mass_ratio, double x0, double a_sc) {
    require_positive(a_perp, "a_perp");
    require_positive(mass_ratio, "mass_ratio");
    require_positive(x0, "x0");
    require_positive(std::abs(a_sc), "|a_sc|");
    return a_perp * a_perp * mass_ratio / (1.5 * x0 * std::abs(a_sc));
}

}  // namespace sjj::physical
