#include "sjj/combinatorics.hpp"

#include <cmath>
#include <limits>

#include "sjj/errors.hpp"

namespace sjj {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kDirectSumLimit = 64;
}  // namespace

double log_falling_factorial(long k, long m) {
    if (m < 0 || k < 0) throw DomainError("log_falling_factorial: negative argument");
    if (m > k) return kNegInf;
    if (m <= kDirectSumLimit) {
        double acc = 0.0;
        for (long j = 0; j < m; ++j) acc += std::log(static_cast<double>(k - j));
        return acc;
    }
    return std::lgamma(static_cast<double>(k) + 1.0) - std::lgamma(static_cast<double>(k - m) + 1.0);
}

double log_binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return kNegInf;
    const long kk = std::min(k, n - k);
    if (kk <= kDirectSumLimit) {
        double acc = 0.0;
        for (long j = 1; j <= kk; ++j)
            acc += std::log(static_cast<double>(n - kk + j) / static_cast<double>(j));
        return acc;
    }
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double xlogy(double y, double x) {
    if (y == 0.0) return 0.0;
    return y * std::log(x);
}

LogBinomialTable::LogBinomialTable(long n_max) : n_max_(n_max) {
    if (n_max < 0) throw DomainError("LogBinomialTable: negative size");
    rows_.resize(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n + 1));
        row[0] = 0.0;
        // Accumulate from both ends toward the middle so C(n,k) and C(n,n-k)
        // are bitwise equal.
        for (long k = 1; k <= n / 2; ++k)
            row[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] +
                std::log(static_cast<double>(n - k + 1) / static_cast<double>(k));
        for (long k = n / 2 + 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(n - k)];
    }
}

double LogBinomialTable::operator()(long n, long k) const {
    if (n < 0 || n > n_max_) throw DomainError("LogBinomialTable: n out of range");
    if (k < 0 || k > n) return kNegInf;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace sjj
