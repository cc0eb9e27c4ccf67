#pragma once

// Full spectra, ground states and spectral time propagation for the
// tridiagonal two-mode Hamiltonians.

#include <vector>

#include "sjj/linalg.hpp"
#include "sjj/model.hpp"

namespace sjj {

enum class Parity : int { Odd = -1, Unknown = 0, Even = 1 };

struct Spectrum {
    std::vector<double> energies;  // ascending, units kappa*N
    linalg::Matrix vectors;        // column k is the eigenvector of energies[k]
    std::vector<Parity> parity;    // under n -> N-n; Unknown for non-mirror-symmetric input
};

// Mirror-symmetric Hamiltonians (everything build_hamiltonian produces) are
// split into even and odd blocks first, so every returned eigenvector has an
// exact parity even when the two lowest levels agree to machine precision.
// Pairs equal to within a few ulps list the even level first. Each eigenvector's first
// component above 1e-12 in magnitude is positive.
Spectrum eigen_decompose(const TridiagonalHamiltonian& h);

// Eigenvalues only, ascending.
std::vector<double> eigenvalues(const TridiagonalHamiltonian& h);

struct GroundState {
    double energy;
    FockState state;
};

// Lowest eigenpair. For connected chains the amplitudes are real and
// positive, with tiny components resolved to full relative accuracy.
GroundState ground_state(const TridiagonalHamiltonian& h);

// A(tau) = sum_k (v_k . A(0)) exp(-i E_k tau) v_k
FockState propagate(const TridiagonalHamiltonian& h, const FockState& s0, double tau);
FockState propagate(const Spectrum& spectrum, const FockState& s0, double tau);

// energies[1] - energies[0], clamped at 0. Zero for a 1x1 problem.
double energy_gap(const TridiagonalHamiltonian& h);

}  // namespace sjj
