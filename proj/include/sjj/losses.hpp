#pragma once

// Particle losses: mean-field decay laws and the beam-splitter loss channel
// with its conditional (post-selected) and traced output states.

#include <vector>

#include "sjj/model.hpp"

namespace sjj {

struct LossChannel {
    double eta_a = 1.0;  // transmissivities, 0 < eta <= 1
    double eta_b = 1.0;
};
void validate(const LossChannel& ch);

struct ConditionalState {
    int l_a;
    int l_b;
    double probability;
    FockState state;  // N' = N - l_a - l_b particles, amps indexed by n - l_b
};

// C(N-n, l_a) eta_a^(N-n-l_a) (1-eta_a)^l_a * C(n, l_b) eta_b^(n-l_b) (1-eta_b)^l_b
double bs_coefficient(int n, int l_a, int l_b, int n_total, const LossChannel& ch);

// Throws DomainError for l_a + l_b > N or a branch that no input amplitude
// reaches. The state is built in scaled log space and stays normalized even
// when the probability itself underflows to 0.
ConditionalState conditional_state(const FockState& s, int l_a, int l_b, const LossChannel& ch);

struct BranchProbability {
    int l_a;
    int l_b;
    double probability;
};

// Every (l_a, l_b) with l_a + l_b <= N, in lexicographic (l_a, l_b) order.
std::vector<BranchProbability> loss_branch_probabilities(const FockState& s, const LossChannel& ch,
                                                         unsigned threads = 0);

// Branches with probability >= p_min and > 0, sorted by probability
// descending (ties in (l_a, l_b) order).
std::vector<ConditionalState> loss_mixture(const FockState& s, const LossChannel& ch, double p_min,
                                           unsigned threads = 0);

// gamma_3 = 2 L3 rho^2 (L3 in cm^6/s, rho in cm^-3, result in 1/s)
double gamma3(double l3, double rho);
// N(0) / sqrt(1 + 2 L3 rho^2 t)
double three_body_decay(double n0, double l3, double rho, double t);
// N(0) exp(-gamma1 t)
double one_body_decay(double n0, double gamma1, double t);

}  // namespace sjj
