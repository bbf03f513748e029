#pragma once

#include "umbra/combinatorics.hpp"
#include "umbra/core.hpp"
#include "umbra/poly.hpp"

#include <stdexcept>
#include <vector>

namespace umbra {

/// Builds the coefficient triangle from cumulants by recursion.
///
/// Row n is filled left to right using the (i = 1, j = k-1) instance of the
/// product identity C(i+j,i) a_{n,i+j} = sum_m C(n,m) a_{m,i} a_{n-m,j}:
///
///     k * a_{n,k} = sum_{m=1}^{n-k+1} C(n,m) c_m a_{n-m,k-1},
///
/// where the m = 0 term drops because a_{0,1} = 0 and the m = n term drops
/// for k >= 2 because a_{0,k-1} = 0, so every entry on the right lives in an
/// earlier row. Column 1 is the input itself: a_{n,1} = c_n.
///
/// Cumulants read zero-extended past their stored length. c_1 = 0 is
/// accepted; the result then has deg p_n < n and carries a warning flag.
inline triangle from_cumulants(const cumulant_seq& c, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("from_cumulants: n_max must be >= 0");
    std::vector<std::vector<rational>> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0].assign(1, rational(1));
    const binomial_table binom(n_max);
    for (int n = 1; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, rational(0));
        row[1] = c.at(n);
        for (int k = 2; k <= n; ++k) {
            rational sum;
            for (int m = 1; m <= n - k + 1; ++m)
                sum += rational(binom(n, m)) * c.at(m) *
                       rows[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = sum / rational(k);
        }
    }
    return triangle(std::move(rows), c.at(1).is_zero());
}

/// Builds the same triangle by truncated series expansion of exp(x f(t)),
/// f(t) = sum_k c_k t^k/k!, working mod t^{n_max+1} with coefficients
/// polynomial in x: the x^m part of the t^n coefficient gives
///
///     a_{n,m} = (n!/m!) [t^n] f(t)^m.
///
/// f has no constant term, so f^m cannot reach t^n for m > n and the triangle
/// shape is automatic. This route never touches the recursion above; the two
/// are kept independent for cross-validation.
inline triangle from_generating_series(const cumulant_seq& c, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("from_generating_series: n_max must be >= 0");
    const std::size_t len = static_cast<std::size_t>(n_max) + 1;

    std::vector<rational> fc(len);
    for (int k = 1; k <= n_max; ++k)
        fc[static_cast<std::size_t>(k)] = c.at(k) / rational(factorial(k));
    const poly f(std::move(fc));

    std::vector<std::vector<rational>> rows(len);
    for (int n = 0; n <= n_max; ++n)
        rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, rational(0));
    rows[0][0] = rational(1);

    poly power = poly::one();
    for (int m = 1; m <= n_max; ++m) {
        power = mul_trunc(power, f, len);
        if (power.is_zero())
            break;
        for (int n = m; n <= n_max; ++n)
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
                power.coeff(static_cast<std::size_t>(n)) *
                rational(falling_factorial(n, n - m));
    }
    return triangle(std::move(rows), c.at(1).is_zero());
}

/// Reads the cumulants back off the triangle: c_n = a_{n,1}.
inline cumulant_seq cumulants_of(const triangle& t) {
    std::vector<rational> c;
    if (t.n_max() == 0) {
        c.emplace_back(0);
        return cumulant_seq(std::move(c));
    }
    c.reserve(static_cast<std::size_t>(t.n_max()));
    for (int n = 1; n <= t.n_max(); ++n)
        c.push_back(t.coeff(n, 1));
    return cumulant_seq(std::move(c));
}

/// True iff p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y) holds exactly for
/// every n up to n_max.
inline bool verify_binomial(const triangle& t, const rational& x, const rational& y) {
    const binomial_table binom(t.n_max());
    std::vector<rational> px, py;
    for (int n = 0; n <= t.n_max(); ++n) {
        px.push_back(t.eval(n, x));
        py.push_back(t.eval(n, y));
    }
    const rational xy = x + y;
    for (int n = 0; n <= t.n_max(); ++n) {
        rational rhs;
        for (int k = 0; k <= n; ++k)
            rhs += rational(binom(n, k)) * px[static_cast<std::size_t>(k)] *
                   py[static_cast<std::size_t>(n - k)];
        if (!(t.eval(n, xy) == rhs))
            return false;
    }
    return true;
}

/// True iff C(i+j,i) a_{n,i+j} = sum_k C(n,k) a_{k,i} a_{n-k,j} holds exactly
/// for all i, j >= 0 with i+j <= n <= n_max.
inline bool verify_recurrence(const triangle& t) {
    const binomial_table binom(t.n_max());
    for (int n = 0; n <= t.n_max(); ++n) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; i + j <= n; ++j) {
                rational rhs;
                for (int k = 0; k <= n; ++k) {
                    const rational aki = t.coeff(k, i);
                    if (aki.is_zero())
                        continue;
                    rhs += rational(binom(n, k)) * aki * t.coeff(n - k, j);
                }
                if (!(rational(binom(i + j, i)) * t.coeff(n, i + j) == rhs))
                    return false;
            }
        }
    }
    return true;
}

} // namespace umbra
