#include "sjj/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sjj/combinatorics.hpp"
#include "sjj/eigensolve.hpp"
#include "sjj/errors.hpp"
#include "sjj/parallel.hpp"

namespace sjj {

namespace {

using cplx = std::complex<double>;

// a^+ b on amps: |N-n, n> -> sqrt((N-n+1) n) |N-n+1, n-1>
Amplitudes apply_ad_b(const Amplitudes& v) {
    const std::size_t dim = v.size();
    const double n_tot = static_cast<double>(dim - 1);
    Amplitudes out(dim);
    for (std::size_t n = 1; n < dim; ++n) {
        const double nn = static_cast<double>(n);
        out[n - 1] = std::sqrt((n_tot - nn + 1.0) * nn) * v[n];
    }
    return out;
}

// b^+ a on amps: |N-n, n> -> sqrt((N-n)(n+1)) |N-n-1, n+1>
Amplitudes apply_bd_a(const Amplitudes& v) {
    const std::size_t dim = v.size();
    const double n_tot = static_cast<double>(dim - 1);
    Amplitudes out(dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) {
        const double nn = static_cast<double>(n);
        out[n + 1] = std::sqrt((n_tot - nn) * (nn + 1.0)) * v[n];
    }
    return out;
}

cplx inner(const Amplitudes& u, const Amplitudes& v) {
    cplx acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm2(const Amplitudes& v) {
    double acc = 0.0;
    for (const auto& c : v) acc += std::norm(c);
    return acc;
}

double clamp_variance(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

SpinExpectations spin_expectations(const FockState& s) {
    const Amplitudes& a = s.amps();
    const double n_tot = static_cast<double>(s.n_total());
    const Amplitudes up = apply_ad_b(a);
    const Amplitudes down = apply_bd_a(a);

    Amplitudes jx_v(a.size()), jy_v(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        jx_v[n] = 0.5 * (up[n] + down[n]);
        jy_v[n] = cplx(0.0, -0.5) * (up[n] - down[n]);
    }

    SpinExpectations e;
    e.j_total = 0.5 * n_tot;
    e.jx = inner(a, jx_v).real();
    e.jy = inner(a, jy_v).real();
    e.jx2 = norm2(jx_v);
    e.jy2 = norm2(jy_v);
    for (std::size_t n = 0; n < a.size(); ++n) {
        const double jz = 0.5 * (n_tot - 2.0 * static_cast<double>(n));
        const double p = std::norm(a[n]);
        e.jz += p * jz;
        e.jz2 += p * jz * jz;
    }
    e.var_jx = clamp_variance(e.jx2 - e.jx * e.jx);
    e.var_jy = clamp_variance(e.jy2 - e.jy * e.jy);
    e.var_jz = clamp_variance(e.jz2 - e.jz * e.jz);
    return e;
}

double population_imbalance(const FockState& s) {
    const int n_tot = s.n_total();
    if (n_tot == 0) return 0.0;
    return -2.0 * spin_expectations(s).jz / static_cast<double>(n_tot);
}

double hz_criterion(const FockState& s, int m) {
    const long n_tot = s.n_total();
    if (m < 1 || m > n_tot)
        throw DomainError("hz_criterion: order m must lie in [1, N], got m = " + std::to_string(m));
    const Amplitudes& a = s.amps();
    const auto lff = [m](long k) { return log_falling_factorial(k, m); };
    const double neg_inf = -std::numeric_limits<double>::infinity();

    // <a+^m a^m b+^m b^m> and the denominator, both diagonal in n.
    std::vector<double> log_num, log_den;
    for (long n = 0; n <= n_tot; ++n) {
        const double p = std::norm(a[static_cast<std::size_t>(n)]);
        if (p == 0.0) {
            log_num.push_back(neg_inf);
            log_den.push_back(neg_inf);
            continue;
        }
        const double lp = std::log(p);
        const double la = lff(n_tot - n);
        log_num.push_back(lp + la + lff(n));
        // b^m b+^m - b+^m b^m = (n+m)!/n! - n!/(n-m)!
        const double hi = lff(n + m);
        const double lo = lff(n);
        const double diff = lo == neg_inf ? hi : hi + std::log1p(-std::exp(lo - hi));
        log_den.push_back(lp + la + diff);
    }

    // <a^m b+^m> = sum_n A*_{n+m} A_n sqrt((N-n)!/(N-n-m)!) sqrt((n+m)!/n!)
    std::vector<double> log_c;
    std::vector<cplx> phase_c;
    for (long n = 0; n + m <= n_tot; ++n) {
        const cplx prod = std::conj(a[static_cast<std::size_t>(n + m)]) * a[static_cast<std::size_t>(n)];
        const double mag = std::abs(prod);
        if (mag == 0.0) continue;
        log_c.push_back(std::log(mag) + 0.5 * (lff(n_tot - n) + lff(n + m)));
        phase_c.push_back(prod / mag);
    }

    double shift_den = neg_inf;
    for (double l : log_den) shift_den = std::max(shift_den, l);
    if (shift_den == neg_inf)
        throw DomainError("hz_criterion: denominator vanishes for m = " + std::to_string(m) +
                          " (criterion undefined for this state)");
    double den = 0.0;
    for (double l : log_den) den += std::exp(l - shift_den);

    double shift_num = neg_inf;
    for (double l : log_num) shift_num = std::max(shift_num, l);
    for (double l : log_c) shift_num = std::max(shift_num, 2.0 * l);
    if (shift_num == neg_inf) return 1.0;

    double num = 0.0;
    for (double l : log_num) num += std::exp(l - shift_num);
    cplx c{};
    for (std::size_t i = 0; i < log_c.size(); ++i) c += phase_c[i] * std::exp(log_c[i] - 0.5 * shift_num);
    num -= std::norm(c);

    return 1.0 + num / den * std::exp(shift_num - shift_den);
}

double hz1_from_spins(const FockState& s) {
    if (s.n_total() < 1) throw DomainError("hz1_from_spins: needs N >= 1");
    const SpinExpectations e = spin_expectations(s);
    return (e.var_jx + e.var_jy) / e.j_total;
}

PlanarSqueezing planar_squeezing(const FockState& s) {
    const SpinExpectations e = spin_expectations(s);
    PlanarSqueezing out;
    out.delta_parallel = e.var_jx + e.var_jy;
    out.j_parallel = std::hypot(e.jx, e.jy);
    out.squeezed = out.delta_parallel < out.j_parallel;
    return out;
}

double ground_hz1(ModelKind kind, int n_total, double coupling) {
    const TwoModeParams params{kind, n_total, coupling};
    return hz_criterion(ground_state(build_hamiltonian(params)).state, 1);
}

std::vector<HzSweepPoint> hz_sweep(ModelKind kind, int n_total, const std::vector<double>& grid, unsigned threads,
                                   double min_step) {
    if (grid.empty()) throw DomainError("hz_sweep: coupling grid is empty");
    if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("hz_sweep: coupling grid must be sorted");

    auto evaluate = [&](double c) {
        const FockState g = ground_state(build_hamiltonian({kind, n_total, c})).state;
        const PlanarSqueezing ps = planar_squeezing(g);
        return HzSweepPoint{c, hz_criterion(g, 1), hz_criterion(g, n_total), ps.delta_parallel, ps.j_parallel};
    };

    std::vector<HzSweepPoint> all;
    std::vector<double> pts = grid;
    constexpr int kRefinePoints = 21;
    for (;;) {
        const auto batch = parallel_map<HzSweepPoint>(pts.size(), threads, [&](std::size_t i) { return evaluate(pts[i]); });
        all.insert(all.end(), batch.begin(), batch.end());
        if (!(min_step > 0.0) || pts.size() < 2) break;

        std::size_t i_min = 0;
        for (std::size_t i = 1; i < batch.size(); ++i)
            if (batch[i].hz1 < batch[i_min].hz1) i_min = i;
        double local = 0.0;
        if (i_min > 0) local = pts[i_min] - pts[i_min - 1];
        if (i_min + 1 < pts.size()) local = std::max(local, pts[i_min + 1] - pts[i_min]);
        if (local <= min_step) break;
        const double lo = pts[i_min == 0 ? 0 : i_min - 1];
        const double hi = pts[std::min(i_min + 1, pts.size() - 1)];
        const double step = (hi - lo) / (kRefinePoints - 1);
        pts.clear();
        for (int k = 0; k < kRefinePoints; ++k) pts.push_back(lo + step * k);
    }

    std::stable_sort(all.begin(), all.end(),
                     [](const HzSweepPoint& x, const HzSweepPoint& y) { return x.coupling < y.coupling; });
    std::vector<HzSweepPoint> out;
    for (const auto& p : all)
        if (out.empty() || p.coupling != out.back().coupling) out.push_back(p);
    return out;
}

CjResult cj_scan(ModelKind kind, int n_total, const std::vector<double>& grid, unsigned threads,
                 double min_step) {
    if (!(min_step > 0.0)) throw DomainError("cj_scan: min_step must be > 0");
    const auto sweep = hz_sweep(kind, n_total, grid, threads, min_step);
    CjResult best{std::numeric_limits<double>::infinity(), grid.front()};
    for (const auto& p : sweep)
        if (p.hz1 < best.c_j) best = {p.hz1, p.coupling};
    return best;
}

std::string_view to_string(CrossoverCriterion c) {
    switch (c) {
        case CrossoverCriterion::Bimodality: return "bimodality";
        case CrossoverCriterion::EdgeDominance: return "edge";
        case CrossoverCriterion::HzJump: return "hz-jump";
    }
    return "unknown";
}

CrossoverCriterion parse_crossover_criterion(std::string_view text) {
    if (text == "bimodality") return CrossoverCriterion::Bimodality;
    if (text == "edge") return CrossoverCriterion::EdgeDominance;
    if (text == "hz-jump") return CrossoverCriterion::HzJump;
    throw DomainError("unknown crossover criterion '" + std::string(text) + "' (expected bimodality, edge or hz-jump)");
}

bool crossover_predicate(ModelKind kind, int n_total, double coupling, CrossoverCriterion criterion) {
    const TwoModeParams params{kind, n_total, coupling};
    const FockState g = ground_state(build_hamiltonian(params)).state;
    const std::vector<double> p = g.probabilities();
    const double centre = p[static_cast<std::size_t>(n_total / 2)];
    switch (criterion) {
        case CrossoverCriterion::Bimodality:
            return *std::max_element(p.begin(), p.end()) > centre * (1.0 + 1e-9);
        case CrossoverCriterion::EdgeDominance:
            return p.front() > centre;
        case CrossoverCriterion::HzJump:
            return hz_criterion(g, 1) > 0.5 + 1e-9;
    }
    return false;
}

double crossover_coupling(ModelKind kind, int n_total, CrossoverCriterion criterion, double lo, double hi,
                          double tol) {
    if (n_total < 4) throw DomainError("crossover_coupling: needs N >= 4, got N = " + std::to_string(n_total));
    if (!(lo >= 0.0 && hi > lo && tol > 0.0)) throw DomainError("crossover_coupling: invalid bracket or tolerance");
    if (criterion == CrossoverCriterion::HzJump) {
        // E_HZ^(1) need not start below 0.5 (the soliton model starts near
        // 0.78), so bisect from the minimum of a coarse scan.
        constexpr int kCoarse = 100;
        double best = std::numeric_limits<double>::infinity();
        double at = lo;
        for (int i = 0; i <= kCoarse; ++i) {
            const double c = lo + (hi - lo) * i / kCoarse;
            const double v = ground_hz1(kind, n_total, c);
            if (v < best) {
                best = v;
                at = c;
            }
        }
        if (!(best <= 0.5 + 1e-9))
            throw DomainError("crossover_coupling: E_HZ^(1) never drops below 0.5 on the bracket");
        lo = at;
    }
    if (crossover_predicate(kind, n_total, lo, criterion))
        throw DomainError("crossover_coupling: predicate already holds at the lower bracket end");
    if (!crossover_predicate(kind, n_total, hi, criterion))
        throw DomainError("crossover_coupling: predicate never satisfied on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (crossover_predicate(kind, n_total, mid, criterion))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace sjj
