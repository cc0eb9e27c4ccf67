#pragma once

// Laboratory parameters to dimensionless couplings. SI units throughout;
// angular frequencies in rad/s.

#include <optional>
#include <string_view>

namespace sjj::physical {

inline constexpr double kHbar = 1.054571817e-34;             // J s
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kMassLi7 = 7.0160034366 * kAtomicMassUnit;
inline constexpr double kMassRb87 = 86.909180520 * kAtomicMassUnit;

// "li7" or "rb87"; throws DomainError otherwise.
double species_mass(std::string_view species);

struct TrapParams {
    double a_sc = 0.0;        // scattering length, m (sign kept, magnitude used)
    double omega_x = 0.0;     // rad/s
    double omega_perp = 0.0;  // rad/s
    double tunnel_rate = 0.0; // |K| as an angular frequency, rad/s
    double n_atoms = 0.0;
    double mass = kMassLi7;   // kg
    std::optional<double> a_perp_override;  // m; replaces sqrt(hbar/(m omega_perp))
};

double a_perp(const TrapParams& tp);
double nu(const TrapParams& tp);
// u = 2 pi |a_sc| / a_perp
double nonlinearity_u(const TrapParams& tp);
// lambda = sqrt(nu) u N omega_perp / (2 sqrt(2 pi) |K|)
double coupling_lambda(const TrapParams& tp);
// Lambda = u^2 N^2 omega_perp / (16 |K|)
double coupling_Lambda(const TrapParams& tp);
// kappa = |K| / omega_perp
double kappa_dimensionless(const TrapParams& tp);
// wp = pi kappa / (2 nu), so that Lambda = wp lambda^2
double wp_factor(const TrapParams& tp);
// N_c = 0.67 a_perp / |a_sc|
double critical_atom_number(const TrapParams& tp);
// N = a_perp^2 (m/|m_eff|) / (1.5 x0 |a_sc|)
double gap_soliton_number(double a_perp, double mass_ratio, double x0, double a_sc);

}  // namespace sjj::physical
