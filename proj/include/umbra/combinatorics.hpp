#pragma once

#include "umbra/rational.hpp"

#include <cstddef>
#include <vector>

namespace umbra {

/// Pascal-triangle cache of exact binomial coefficients. Built once per use
/// site and sized up front; out-of-range (n, k) reads as zero.
class binomial_table {
public:
    explicit binomial_table(int n_max) {
        rows_.resize(static_cast<std::size_t>(n_max < 0 ? 0 : n_max) + 1);
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            rows_[n].assign(n + 1, bigint(1));
            for (std::size_t k = 1; k < n; ++k)
                rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }

    const bigint& operator()(int n, int k) const {
        if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) >= rows_.size())
            return zero_;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<bigint>> rows_;
    inline static const bigint zero_{0};
};

inline bigint factorial(int n) {
    bigint r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// n (n-1) ... (n-k+1); equals n!/(n-k)! without forming either factorial.
inline bigint falling_factorial(int n, int k) {
    bigint r = 1;
    for (int i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

/// One-off exact binomial coefficient (multiplicative form, every division
/// exact).
inline bigint binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    bigint r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// Number of ways to split n into `parts` ordered nonnegative jumps.
inline bigint composition_count(int n, int parts) {
    return binomial(n + parts - 1, parts - 1);
}

} // namespace umbra
