#pragma once

// Atomic-coherent-state (Hartree) analysis of the soliton junction:
// stationary branches, their energies, and the superposition states built
// from them. Energies in units of kappa*N.

#include <string_view>
#include <vector>

#include "sjj/model.hpp"

namespace sjj::hartree {

inline constexpr double kBranchLower = 1.58;  // S+- appear, N00N branch ends
inline constexpr double kBranchUpper = 2.42;  // S+- merge with S0

enum class Branch { S0, SPlus, SMinus, NoonPlus, NoonMinus };
std::string_view to_string(Branch branch);

struct Solution {
    double s;             // beta^2 - alpha^2
    double alpha;
    double beta;
    double theta;         // 0 on the S branches, arccos(Lambda/1.58) on the N00N branches
    double energy;        // as tabulated: -1, the quadratic fit, or -Lambda/2
    double energy_exact;  // mean energy of the ansatz evaluated on the branch
    Branch branch;
};

// X = sqrt((Lambda - 1.58)/0.84), shared by the S+- amplitudes and the cat
// overlap. Domain [1.58, 2.42].
double branch_x(double coupling);

std::vector<Solution> stationary_solutions(double coupling);

// Mean energy -(Lambda/2) S^2 - (1 - 0.21 S^2)(1 - S^2) of the theta = 0 ansatz.
double ansatz_energy(double s, double coupling);

// Mean energy on the S+- branch; domain [1.58, 2.42].
double exact_branch_energy(double coupling);

// 0.30 Lambda^2 - 1.44 Lambda + 0.74
double fitted_branch_energy(double coupling);

// epsilon = X^N, evaluated in log space.
double cat_overlap(double coupling, int n_total);

// A_n = sqrt(C(N,n)) alpha^(N-n) beta^n for real alpha, beta with
// alpha^2 + beta^2 = 1 (tolerance 1e-9).
FockState coherent_fock_amplitudes(double alpha, double beta, int n_total);

// (|psi_+> + sign |psi_->) / sqrt(2 (1 + sign*epsilon)) from the S+- halves.
// sign must be +1 or -1; throws when the combination vanishes.
FockState cat_state(double coupling, int n_total, int sign);

}  // namespace sjj::hartree
