#pragma once

#include <cstddef>
#include <vector>

namespace sjj {

// log(k! / (k-m)!), or -inf when m > k. Small m is summed term by term so
// that ratios of neighbouring factorials stay accurate to a few ulps.
double log_falling_factorial(long k, long m);

// log(C(n, k)); -inf outside 0 <= k <= n.
double log_binomial(long n, long k);

// y * log(x) with the convention 0 * log(0) = 0.
double xlogy(double y, double x);

// Table of log C(n, k) for 0 <= k <= n <= n_max, built by running sums of
// log((n-k+1)/k) along each row.
class LogBinomialTable {
public:
    explicit LogBinomialTable(long n_max);

    long n_max() const { return n_max_; }
    double operator()(long n, long k) const;

private:
    long n_max_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace sjj
