#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "sjj/errors.hpp"
#include "sjj/linalg.hpp"

using namespace sjj::linalg;

TEST_CASE("QL on a random tridiagonal matrix matches Jacobi") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {1, 2, 5, 17, 40}) {
        std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
        for (auto& x : d) x = u(rng);
        for (auto& x : e) x = u(rng);
        const auto r = tridiagonal_ql(d, e, true);
        oracle::Dense m(n);
        for (int i = 0; i < n; ++i) m(i, i) = d[i];
        for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = e[i];
        const auto ref = oracle::jacobi_eigen(m);
        auto vals = r.values;
        std::sort(vals.begin(), vals.end());
        for (int k = 0; k < n; ++k) CHECK(vals[k] == doctest::Approx(ref.values[k]).epsilon(1e-12).scale(1.0));
        for (int k = 0; k < n; ++k) {
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double hv = d[i] * r.vectors(i, k);
                if (i > 0) hv += e[i - 1] * r.vectors(i - 1, k);
                if (i + 1 < n) hv += e[i] * r.vectors(i + 1, k);
                res = std::max(res, std::abs(hv - r.values[k] * r.vectors(i, k)));
            }
            CHECK(res < 1e-13);
        }
    }
}

TEST_CASE("diagonal input returns the diagonal") {
    const auto r = tridiagonal_ql(std::vector<double>{3.0, 1.0, 2.0}, std::vector<double>{0.0, 0.0}, true);
    auto vals = r.values;
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("twisted eigenvector resolves tiny components") {
    // Path graph with a strong diagonal ramp: the lowest eigenvector decays
    // over many orders of magnitude.
    const int n = 60;
    std::vector<double> d(n), e(n - 1, -1.0);
    for (int i = 0; i < n; ++i) d[i] = 4.0 * i;
    const auto r = tridiagonal_ql(d, e, false);
    const double e0 = *std::min_element(r.values.begin(), r.values.end());
    const auto v = twisted_eigenvector(d, e, e0);
    for (double x : v) CHECK(x > 0.0);
    // ratio recursion from the last row: v[n-2] / v[n-1] = (E - d[n-1]) / e[n-2]
    CHECK(v[n - 2] / v[n - 1] == doctest::Approx((e0 - d[n - 1]) / e[n - 2]).epsilon(1e-10));
    CHECK(v[n - 1] < 1e-100);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(tridiagonal_ql(std::vector<double>{1.0, 2.0}, std::vector<double>{}, false), sjj::DomainError);
}
