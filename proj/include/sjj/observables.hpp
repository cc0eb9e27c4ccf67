#pragma once

// Spin moments, Hillery-Zubairy witnesses, planar squeezing and coupling
// scans over two-mode ground states.

#include <string_view>
#include <vector>

#include "sjj/model.hpp"

namespace sjj {

// Jx = (a^+ b + b^+ a)/2, Jy = (a^+ b - b^+ a)/(2i), Jz = (Na - Nb)/2.
// With amps[n] on |N-n>_a|n>_b the Jz eigenvalue is (N - 2n)/2.
struct SpinExpectations {
    double jx = 0.0, jy = 0.0, jz = 0.0;
    double var_jx = 0.0, var_jy = 0.0, var_jz = 0.0;
    double jx2 = 0.0, jy2 = 0.0, jz2 = 0.0;  // second moments
    double j_total = 0.0;                    // N/2
};

SpinExpectations spin_expectations(const FockState& s);

// <z> in the mean-field convention z = (N_b - N_a)/N = -2<Jz>/N.
double population_imbalance(const FockState& s);

// m-th order Hillery-Zubairy criterion
//   1 + (<a+^m a^m b+^m b^m> - |<a^m b+^m>|^2) / <a+^m a^m (b^m b+^m - b+^m b^m)>
// evaluated with log-space falling factorials. Throws DomainError when m is
// outside [1, N] or the denominator vanishes.
double hz_criterion(const FockState& s, int m);

// (var Jx + var Jy) / (N/2). Equals hz_criterion(s, 1) whenever <Na> = N/2,
// which holds for every parity-symmetric state.
double hz1_from_spins(const FockState& s);

struct PlanarSqueezing {
    double delta_parallel;  // var Jx + var Jy
    double j_parallel;      // sqrt(<Jx>^2 + <Jy>^2)
    bool squeezed;
};
PlanarSqueezing planar_squeezing(const FockState& s);

// E_HZ^(1) of the ground state at one coupling.
double ground_hz1(ModelKind kind, int n_total, double coupling);

struct HzSweepPoint {
    double coupling;
    double hz1;
    double hzn;  // m = N
    double delta_parallel;
    double j_parallel;
};

// Ground-state witnesses on a sorted grid plus refinement points: the
// bracket around the current hz1 minimum is resampled at 21 points until the
// local step is <= min_step (min_step <= 0 disables refinement). Returned
// sorted by coupling. threads = 0 uses all cores.
std::vector<HzSweepPoint> hz_sweep(ModelKind kind, int n_total, const std::vector<double>& grid,
                                   unsigned threads = 0, double min_step = 1e-5);

struct CjResult {
    double c_j;
    double argmin;
};

// Minimum of hz1 over hz_sweep(kind, n_total, grid, threads, min_step).
CjResult cj_scan(ModelKind kind, int n_total, const std::vector<double>& grid, unsigned threads = 0,
                 double min_step = 1e-5);

enum class CrossoverCriterion {
    Bimodality,     // the most probable n is no longer the centre n = floor(N/2)
    EdgeDominance,  // |A_0|^2 > |A_floor(N/2)|^2
    HzJump,         // E_HZ^(1) rises back above 0.5 after its minimum
};
std::string_view to_string(CrossoverCriterion c);
CrossoverCriterion parse_crossover_criterion(std::string_view text);

bool crossover_predicate(ModelKind kind, int n_total, double coupling, CrossoverCriterion criterion);

// Smallest coupling in [lo, hi] where the predicate holds, by bisection to
// tol. For HzJump the lower end is first moved to the minimum of E_HZ^(1) on
// a 101-point scan. Requires N >= 4; throws DomainError if the predicate
// already holds at lo or never holds at hi.
double crossover_coupling(ModelKind kind, int n_total,
                          CrossoverCriterion criterion = CrossoverCriterion::Bimodality, double lo = 0.0,
                          double hi = 10.0, double tol = 1e-7);

}  // namespace sjj
