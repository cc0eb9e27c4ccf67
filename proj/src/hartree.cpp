#include "sjj/hartree.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sjj/combinatorics.hpp"
#include "sjj/errors.hpp"

namespace sjj::hartree {

namespace {

void require_branch_domain(double coupling, const char* where) {
    if (!(coupling >= kBranchLower && coupling <= kBranchUpper))
        throw DomainError(std::string(where) + ": coupling must lie in [1.58, 2.42], got " +
                          std::to_string(coupling));
}

// X^2 with the 0.84 written as the window width so both ends are exact.
double branch_x2(double coupling) { return (coupling - kBranchLower) / (kBranchUpper - kBranchLower); }

}  // namespace

std::string_view to_string(Branch branch) {
    switch (branch) {
        case Branch::S0: return "S0";
        case Branch::SPlus: return "S+";
        case Branch::SMinus: return "S-";
        case Branch::NoonPlus: return "N00N+";
        case Branch::NoonMinus: return "N00N-";
    }
    return "unknown";
}

double branch_x(double coupling) {
    require_branch_domain(coupling, "branch_x");
    return std::sqrt(branch_x2(coupling));
}

double ansatz_energy(double s, double coupling) {
    const double s2 = s * s;
    return -0.5 * coupling * s2 - (1.0 - 0.21 * s2) * (1.0 - s2);
}

double exact_branch_energy(double coupling) {
    require_branch_domain(coupling, "exact_branch_energy");
    const double s2 = 1.0 - branch_x2(coupling);
    return ansatz_energy(std::sqrt(s2), coupling);
}

double fitted_branch_energy(double coupling) { return 0.30 * coupling * coupling - 1.44 * coupling + 0.74; }

std::vector<Solution> stationary_solutions(double coupling) {
    if (!(coupling >= 0.0) || !std::isfinite(coupling))
        throw DomainError("stationary_solutions: coupling must be finite and >= 0");
    const double half = std::numbers::sqrt2 / 2.0;
    std::vector<Solution> out{{0.0, half, half, 0.0, -1.0, ansatz_energy(0.0, coupling), Branch::S0}};

    if (coupling >= kBranchLower && coupling < kBranchUpper) {
        const double s = std::sqrt(1.0 - branch_x2(coupling));
        const double big = std::sqrt(0.5 * (1.0 + s));
        const double small = std::sqrt(0.5 * (1.0 - s));
        const double fit = fitted_branch_energy(coupling);
        const double exact = ansatz_energy(s, coupling);
        out.push_back({s, small, big, 0.0, fit, exact, Branch::SPlus});
        out.push_back({-s, big, small, 0.0, fit, exact, Branch::SMinus});
    }
    if (coupling > 0.0 && coupling <= kBranchLower) {
        const double theta = std::acos(std::min(1.0, coupling / kBranchLower));
        const double e = -0.5 * coupling;
        out.push_back({1.0, 0.0, 1.0, theta, e, e, Branch::NoonPlus});
        out.push_back({-1.0, 1.0, 0.0, theta, e, e, Branch::NoonMinus});
    }
    return out;
}

double cat_overlap(double coupling, int n_total) {
    require_branch_domain(coupling, "cat_overlap");
    if (n_total < 1) throw DomainError("cat_overlap: n_total must be >= 1");
    const double x2 = branch_x2(coupling);
    if (x2 == 0.0) return 0.0;
    return std::exp(0.5 * static_cast<double>(n_total) * std::log(x2));
}

FockState coherent_fock_amplitudes(double alpha, double beta, int n_total) {
    if (n_total < 0) throw DomainError("coherent_fock_amplitudes: n_total must be >= 0");
    if (!(std::abs(alpha * alpha + beta * beta - 1.0) <= 1e-9))
        throw DomainError("coherent_fock_amplitudes: alpha^2 + beta^2 must equal 1");
    const long n_tot = n_total;
    Amplitudes amps(static_cast<std::size_t>(n_tot) + 1);
    for (long n = 0; n <= n_tot; ++n) {
        const long na = n_tot - n;
        if ((alpha == 0.0 && na > 0) || (beta == 0.0 && n > 0)) continue;
        const double log_mag = 0.5 * log_binomial(n_tot, n) + xlogy(static_cast<double>(na), std::abs(alpha)) +
                               xlogy(static_cast<double>(n), std::abs(beta));
        double sign = 1.0;
        if (alpha < 0.0 && (na % 2 == 1)) sign = -sign;
        if (beta < 0.0 && (n % 2 == 1)) sign = -sign;
        amps[static_cast<std::size_t>(n)] = sign * std::exp(log_mag);
    }
    return FockState::normalized(std::move(amps));
}

FockState cat_state(double coupling, int n_total, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("cat_state: sign must be +1 or -1");
    const double s = std::sqrt(1.0 - branch_x2(coupling));
    const double big = std::sqrt(0.5 * (1.0 + s));
    const double small = std::sqrt(0.5 * (1.0 - s));
    const FockState plus = coherent_fock_amplitudes(small, big, n_total);
    const FockState minus = coherent_fock_amplitudes(big, small, n_total);
    const double eps = cat_overlap(coupling, n_total);
    const double norm2 = 2.0 * (1.0 + sign * eps);
    if (!(norm2 > 1e-300)) throw DomainError("cat_state: superposition vanishes (epsilon = 1)");
    const double inv = 1.0 / std::sqrt(norm2);
    Amplitudes amps(plus.amps().size());
    for (std::size_t n = 0; n < amps.size(); ++n) amps[n] = inv * (plus[n] + static_cast<double>(sign) * minus[n]);
    return FockState::normalized(std::move(amps));
}

}  // namespace sjj::hartree
