#include "sjj/losses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sjj/combinatorics.hpp"
#include "sjj/errors.hpp"
#include "sjj/parallel.hpp"

namespace sjj {

namespace {

struct LogEta {
    double keep_a, lose_a, keep_b, lose_b;
};

LogEta log_eta(const LossChannel& ch) {
    return {std::log(ch.eta_a), std::log1p(-ch.eta_a), std::log(ch.eta_b), std::log1p(-ch.eta_b)};
}

double term(double count, double log_x) { return count == 0.0 ? 0.0 : count * log_x; }

template <class LogBinom>
double log_bs(long n, long l_a, long l_b, long n_total, const LogEta& le, const LogBinom& lb) {
    const long na = n_total - n;
    return lb(na, l_a) + term(static_cast<double>(na - l_a), le.keep_a) + term(static_cast<double>(l_a), le.lose_a) +
           lb(n, l_b) + term(static_cast<double>(n - l_b), le.keep_b) + term(static_cast<double>(l_b), le.lose_b);
}

void require_nonnegative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and >= 0");
}

}  // namespace

void validate(const LossChannel& ch) {
    if (!(ch.eta_a > 0.0 && ch.eta_a <= 1.0)) throw DomainError("eta_a must lie in (0, 1]");
    if (!(ch.eta_b > 0.0 && ch.eta_b <= 1.0)) throw DomainError("eta_b must lie in (0, 1]");
}

double bs_coefficient(int n, int l_a, int l_b, int n_total, const LossChannel& ch) {
    validate(ch);
    if (n < 0 || n > n_total || l_a < 0 || l_b < 0 || l_a > n_total - n || l_b > n)
        throw DomainError("bs_coefficient: need 0 <= l_a <= N-n and 0 <= l_b <= n (n=" + std::to_string(n) +
                          ", l_a=" + std::to_string(l_a) + ", l_b=" + std::to_string(l_b) + ")");
    const auto lb = [](long a, long b) { return log_binomial(a, b); };
    return std::exp(log_bs(n, l_a, l_b, n_total, log_eta(ch), lb));
}

ConditionalState conditional_state(const FockState& s, int l_a, int l_b, const LossChannel& ch) {
    validate(ch);
    const int n_tot = s.n_total();
    if (l_a < 0 || l_b < 0 || l_a + l_b > n_tot)
        throw DomainError("conditional_state: need l_a, l_b >= 0 and l_a + l_b <= N");
    const LogEta le = log_eta(ch);
    const auto lb = [](long a, long b) { return log_binomial(a, b); };
    const int n_out = n_tot - l_a - l_b;
    // log|A_n sqrt(B)| with the largest term scaled to 1, so that branches
    // far below the double range still give a normalized state.
    std::vector<double> log_mag(static_cast<std::size_t>(n_out) + 1, -std::numeric_limits<double>::infinity());
    double shift = -std::numeric_limits<double>::infinity();
    for (int n = l_b; n <= n_tot - l_a; ++n) {
        const auto a = s[static_cast<std::size_t>(n)];
        if (a == 0.0) continue;
        const double l = std::log(std::abs(a)) + 0.5 * log_bs(n, l_a, l_b, n_tot, le, lb);
        log_mag[static_cast<std::size_t>(n - l_b)] = l;
        shift = std::max(shift, l);
    }
    if (shift == -std::numeric_limits<double>::infinity())
        throw DomainError("conditional_state: branch (l_a=" + std::to_string(l_a) + ", l_b=" + std::to_string(l_b) +
                          ") has zero probability for this input");
    Amplitudes amps(static_cast<std::size_t>(n_out) + 1);
    double scaled = 0.0;
    for (int k = 0; k <= n_out; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        if (log_mag[kk] == -std::numeric_limits<double>::infinity()) continue;
        const auto a = s[kk + static_cast<std::size_t>(l_b)];
        const double m = std::exp(log_mag[kk] - shift);
        amps[kk] = a / std::abs(a) * m;
        scaled += m * m;
    }
    // may underflow to 0 for branches far below the double range
    const double prob = std::exp(2.0 * shift) * scaled;
    return {l_a, l_b, prob, FockState::normalized(std::move(amps))};
}

std::vector<BranchProbability> loss_branch_probabilities(const FockState& s, const LossChannel& ch,
                                                         unsigned threads) {
    validate(ch);
    const int n_tot = s.n_total();
    const LogBinomialTable table(n_tot);
    const LogEta le = log_eta(ch);
    const std::vector<double> p = s.probabilities();
    const auto rows = parallel_map<std::vector<BranchProbability>>(
        static_cast<std::size_t>(n_tot) + 1, threads, [&](std::size_t row) {
            const int l_a = static_cast<int>(row);
            std::vector<BranchProbability> out;
            for (int l_b = 0; l_a + l_b <= n_tot; ++l_b) {
                double acc = 0.0;
                for (int n = l_b; n <= n_tot - l_a; ++n) {
                    const double pn = p[static_cast<std::size_t>(n)];
                    if (pn == 0.0) continue;
                    acc += pn * std::exp(log_bs(n, l_a, l_b, n_tot, le, table));
                }
                out.push_back({l_a, l_b, acc});
            }
            return out;
        });
    std::vector<BranchProbability> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

std::vector<ConditionalState> loss_mixture(const FockState& s, const LossChannel& ch, double p_min,
                                           unsigned threads) {
    if (!(p_min >= 0.0)) throw DomainError("loss_mixture: p_min must be >= 0");
    std::vector<BranchProbability> keep;
    for (const auto& b : loss_branch_probabilities(s, ch, threads))
        if (b.probability > 0.0 && b.probability >= p_min) keep.push_back(b);
    std::stable_sort(keep.begin(), keep.end(),
                     [](const BranchProbability& x, const BranchProbability& y) { return x.probability > y.probability; });
    return parallel_map<ConditionalState>(keep.size(), threads, [&](std::size_t i) {
        ConditionalState c = conditional_state(s, keep[i].l_a, keep[i].l_b, ch);
        c.probability = keep[i].probability;  // same value as the sort key
        return c;
    });
}

double gamma3(double l3, double rho) {
    require_nonnegative(l3, "L3");
    require_nonnegative(rho, "density");
    return 2.0 * l3 * rho * rho;
}

double three_body_decay(double n0, double l3, double rho, double t) {
    require_nonnegative(n0, "N(0)");
    require_nonnegative(t, "time");
    return n0 / std::sqrt(1.0 + gamma3(l3, rho) * t);
}

double one_body_decay(double n0, double gamma1, double t) {
    require_nonnegative(n0, "N(0)");
    require_nonnegative(gamma1, "gamma1");
    require_nonnegative(t, "time");
    return n0 * std::exp(-gamma1 * t);
}

}  // namespace sjj
