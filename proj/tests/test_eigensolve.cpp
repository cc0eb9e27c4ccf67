#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "sjj/eigensolve.hpp"
#include "sjj/errors.hpp"

using namespace sjj;

namespace {

// Closed forms for N = 2 with the exact soliton constant 4 * 0.79^2.
std::vector<double> n2_closed_form(ModelKind kind, double c) {
    const double k = kind == ModelKind::SJJ ? 4.0 * 0.79 * 0.79 : 16.0;
    std::vector<double> e{(-c - std::sqrt(c * c + k)) / 4.0, -c / 2.0, (-c + std::sqrt(c * c + k)) / 4.0};
    std::sort(e.begin(), e.end());
    return e;
}

FockState random_state(std::mt19937_64& rng, int n_total) {
    std::normal_distribution<double> g;
    Amplitudes a(static_cast<std::size_t>(n_total) + 1);
    for (auto& x : a) x = {g(rng), g(rng)};
    return FockState::normalized(std::move(a));
}

}  // namespace

TEST_CASE("N=2 closed forms") {
    const auto e = eigenvalues(build_hamiltonian({ModelKind::SJJ, 2, 2.0}));
    CHECK(e[0] == doctest::Approx(-1.137201).epsilon(1e-6));
    CHECK(e[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e[2] == doctest::Approx(0.137201).epsilon(1e-5));

    const auto b = eigenvalues(build_hamiltonian({ModelKind::BJJ, 2, 0.0}));
    CHECK(b[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(b[1]) < 1e-14);
    CHECK(b[2] == doctest::Approx(1.0).epsilon(1e-14));

    for (auto kind : {ModelKind::SJJ, ModelKind::BJJ})
        for (int i = 0; i <= 100; ++i) {
            const double c = 0.1 * i;
            const auto got = eigenvalues(build_hamiltonian({kind, 2, c}));
            const auto want = n2_closed_form(kind, c);
            for (int k = 0; k < 3; ++k) REQUIRE(std::abs(got[k] - want[k]) <= 1e-12);
        }
}

TEST_CASE("dense Jacobi oracle equivalence for N <= 20") {
    for (auto kind : {ModelKind::SJJ, ModelKind::BJJ})
        for (int n = 1; n <= 20; ++n)
            for (double c : {0.0, 1.0, 2.0, 4.0}) {
                const auto h = build_hamiltonian({kind, n, c});
                const auto sp = eigen_decompose(h);
                const auto ref = oracle::jacobi_eigen(oracle::dense_hamiltonian(kind == ModelKind::SJJ, n, c));
                for (int k = 0; k <= n; ++k) {
                    REQUIRE(std::abs(sp.energies[k] - ref.values[k]) <= 1e-10);
                    const auto v = sp.vectors.column(k);
                    const Amplitudes va(v.begin(), v.end());
                    const auto hv = apply_hamiltonian(h, va);
                    double res = 0.0;
                    for (int i = 0; i <= n; ++i) res += std::norm(hv[i] - sp.energies[k] * va[i]);
                    REQUIRE(std::sqrt(res) <= 1e-10 * std::max(1.0, std::abs(sp.energies[k])));
                }
            }
}

TEST_CASE("spectrum structure: orthonormal, signed, parity-definite") {
    for (auto kind : {ModelKind::SJJ, ModelKind::BJJ})
        for (int n : {1, 2, 7, 30, 121})
            for (double c : {0.0, 1.0, 2.0009925, 4.0, 8.0}) {
                const auto h = build_hamiltonian({kind, n, c});
                const auto sp = eigen_decompose(h);
                for (int j = 0; j <= n; ++j) {
                    const auto vj = sp.vectors.column(j);
                    REQUIRE(sp.parity[j] != Parity::Unknown);
                    const double sign = static_cast<double>(static_cast<int>(sp.parity[j]));
                    for (int i = 0; i <= n; ++i) REQUIRE(std::abs(vj[i] - sign * vj[n - i]) <= 1e-8);
                    for (double x : vj)
                        if (std::abs(x) > 1e-12) {
                            REQUIRE(x > 0.0);
                            break;
                        }
                    // near-ties may be listed even-first
                    if (j > 0)
                        REQUIRE(sp.energies[j] >=
                                sp.energies[j - 1] - 8.0 * 2.3e-16 * std::max(1.0, std::abs(sp.energies[j])));
                    for (int k = j; k <= std::min(n, j + 3); ++k) {
                        const auto vk = sp.vectors.column(k);
                        double dot = 0.0;
                        for (int i = 0; i <= n; ++i) dot += vj[i] * vk[i];
                        REQUIRE(std::abs(dot - (j == k ? 1.0 : 0.0)) <= 1e-10);
                    }
                }
            }
}

TEST_CASE("zero off-diagonal gives sorted diagonal and permuted identity") {
    const TridiagonalHamiltonian h({2.0, -1.0, 0.5}, {0.0, 0.0}, {ModelKind::BJJ, 2, 0.0});
    const auto sp = eigen_decompose(h);
    CHECK(sp.energies == std::vector<double>{-1.0, 0.5, 2.0});
    CHECK(sp.vectors(1, 0) == 1.0);
    CHECK(sp.vectors(2, 1) == 1.0);
    CHECK(sp.vectors(0, 2) == 1.0);
    CHECK(energy_gap(TridiagonalHamiltonian({1.0, 1.0}, {0.0}, {ModelKind::BJJ, 1, 0.0})) == 0.0);
}

TEST_CASE("ground states") {
    SUBCASE("N=1 closed form") {
        for (auto kind : {ModelKind::SJJ, ModelKind::BJJ}) {
            const auto h = build_hamiltonian({kind, 1, 1.7});
            const auto g = ground_state(h);
            CHECK(g.state[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
            CHECK(g.state[1].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
            CHECK(g.energy == doctest::Approx(h.diag()[0] - std::abs(h.offdiag()[0])).epsilon(1e-14));
        }
    }
    SUBCASE("Lambda = 0 is unimodal and centred") {
        const auto p = ground_state(build_hamiltonian({ModelKind::SJJ, 300, 0.0})).state.probabilities();
        for (int n = 0; n < 150; ++n) REQUIRE(p[n] < p[n + 1]);
        for (int n = 150; n < 300; ++n) REQUIRE(p[n] > p[n + 1]);
    }
    SUBCASE("Lambda = 4 is N00N-like") {
        const auto p = ground_state(build_hamiltonian({ModelKind::SJJ, 300, 4.0})).state.probabilities();
        CHECK(p[0] == doctest::Approx(0.5).epsilon(0.02));
        CHECK(p[300] == doctest::Approx(0.5).epsilon(0.02));
        // n = 1 and N-1 hold the first satellites (about 5e-3)
        for (int n = 2; n <= 298; ++n) REQUIRE(p[n] < 1e-3);
    }
    SUBCASE("positive, symmetric, agreeing with the full spectrum") {
        for (auto kind : {ModelKind::SJJ, ModelKind::BJJ})
            for (double c : {0.5, 1.0, 2.0, 2.0009925, 4.0, 10.0}) {
                const auto h = build_hamiltonian({kind, 300, c});
                const auto g = ground_state(h);
                const auto sp = eigen_decompose(h);
                CHECK(g.energy == doctest::Approx(sp.energies[0]).epsilon(1e-13));
                CHECK(mean_energy(h, g.state) == doctest::Approx(g.energy).epsilon(1e-12));
                for (int n = 0; n <= 300; ++n) {
                    REQUIRE(g.state[n].real() > 0.0);
                    REQUIRE(std::abs(std::norm(g.state[n]) - std::norm(g.state[300 - n])) <= 1e-8);
                }
            }
    }
}

TEST_CASE("spectrum bounds are continuous in the coupling") {
    // dH/dLambda = diag(-(2n/N - 1)^2 / 2) has norm 1/2, so by Weyl's
    // inequality no eigenvalue moves by more than step/2. The ground energy
    // has a genuine kink near Lambda = 2 (from about -1 to -Lambda/2), so a
    // bound relative to the previous local slope would not hold there.
    for (auto kind : {ModelKind::SJJ, ModelKind::BJJ}) {
        const double step = 0.01;
        std::vector<double> prev;
        for (int i = 0; i <= 800; ++i) {
            const auto e = eigenvalues(build_hamiltonian({kind, 100, step * i}));
            if (!prev.empty()) {
                REQUIRE(std::abs(e.front() - prev.front()) <= 0.5 * step + 1e-13);
                REQUIRE(std::abs(e.back() - prev.back()) <= 0.5 * step + 1e-13);
            }
            prev = e;
        }
    }
}

TEST_CASE("energy gaps") {
    const double k = 4.0 * 0.79 * 0.79;
    CHECK(energy_gap(build_hamiltonian({ModelKind::SJJ, 2, 2.0})) ==
          doctest::Approx(-1.0 - (-2.0 - std::sqrt(4.0 + k)) / 4.0).epsilon(1e-12));
    for (double lam : {0.0, 3.0, 100.0})
        CHECK(energy_gap(build_hamiltonian({ModelKind::BJJ, 2, lam})) ==
              doctest::Approx((-lam + std::sqrt(lam * lam + 16.0)) / 4.0).epsilon(1e-12));
    // large-lambda asymptote of the closed form: gap -> 2 / lambda
    const double g = energy_gap(build_hamiltonian({ModelKind::BJJ, 2, 100.0}));
    CHECK(g * 100.0 / 2.0 == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("propagation") {
    std::mt19937_64 rng(11);
    const auto h = build_hamiltonian({ModelKind::SJJ, 20, 2.0});
    const auto s0 = random_state(rng, 20);

    const auto same = propagate(h, s0, 0.0);
    for (int n = 0; n <= 20; ++n) CHECK(same[n] == s0[n]);

    const auto sp = eigen_decompose(h);
    const auto col = sp.vectors.column(3);
    const auto eig = FockState::from_real(col);
    const auto moved = propagate(sp, eig, 1.7);
    const auto phase = std::exp(std::complex<double>(0.0, -sp.energies[3] * 1.7));
    for (int n = 0; n <= 20; ++n) CHECK(std::abs(moved[n] - phase * eig[n]) < 1e-12);

    const auto got = propagate(h, s0, 0.37);
    const auto want = oracle::rk4_schrodinger(oracle::dense_hamiltonian(true, 20, 2.0), s0.amps(), 0.37, 1e-5);
    double err = 0.0;
    for (int n = 0; n <= 20; ++n) err = std::max(err, std::abs(got[n] - want[n]));
    CHECK(err <= 1e-6);
}
