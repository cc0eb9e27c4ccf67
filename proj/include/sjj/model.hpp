#pragma once

// Two-mode Hamiltonians of the soliton (SJJ) and bosonic (BJJ) Josephson
// junctions in the Fock basis |N-n>_a |n>_b. Energies are in units of kappa*N.

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sjj {

enum class ModelKind { SJJ, BJJ };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

// Coupling is Lambda for SJJ and lambda for BJJ.
struct TwoModeParams {
    ModelKind kind = ModelKind::SJJ;
    int n_total = 1;
    double coupling = 0.0;
};

// Throws DomainError unless n_total >= 1 and coupling is finite and >= 0.
void validate(const TwoModeParams& params);

// Bright solitons need a nonzero nonlinearity; SJJ with coupling 0 is
// computable but not physical.
bool is_nonphysical_soliton_limit(const TwoModeParams& params);

using Amplitudes = std::vector<std::complex<double>>;

// Symmetric tridiagonal matrix: diag has N+1 entries, offdiag has N.
class TridiagonalHamiltonian {
public:
    TridiagonalHamiltonian(std::vector<double> diag, std::vector<double> offdiag,
                           TwoModeParams params);

    std::span<const double> diag() const { return diag_; }
    std::span<const double> offdiag() const { return offdiag_; }
    const TwoModeParams& params() const { return params_; }
    int n_total() const { return params_.n_total; }
    std::size_t dim() const { return diag_.size(); }

    // Exact (bitwise) invariance under n -> N - n.
    bool is_mirror_symmetric() const;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
    TwoModeParams params_;
};

// amps[n] multiplies |N-n>_a |n>_b; sum |amps|^2 = 1 within 1e-12.
class FockState {
public:
    explicit FockState(Amplitudes amps);

    static FockState normalized(Amplitudes amps);
    static FockState from_real(std::span<const double> amps);
    static FockState number_state(int n_total, int n);
    // (|N,0> + e^{i phase} |0,N>) / sqrt(2)
    static FockState noon(int n_total, double phase = 0.0);

    const Amplitudes& amps() const { return amps_; }
    int n_total() const { return static_cast<int>(amps_.size()) - 1; }
    std::complex<double> operator[](std::size_t n) const { return amps_[n]; }
    std::vector<double> probabilities() const;

private:
    Amplitudes amps_;
};

inline constexpr double kNormTolerance = 1e-12;

TridiagonalHamiltonian build_hamiltonian(const TwoModeParams& params);

Amplitudes apply_hamiltonian(const TridiagonalHamiltonian& h,
                             std::span<const std::complex<double>> amps);
Amplitudes apply_hamiltonian(const TridiagonalHamiltonian& h, const FockState& s);

// <s|H|s> in units of kappa*N.
double mean_energy(const TridiagonalHamiltonian& h, const FockState& s);

}  // namespace sjj
