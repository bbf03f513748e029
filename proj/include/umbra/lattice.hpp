#pragma once

#include "umbra/combinatorics.hpp"
#include "umbra/core.hpp"
#include "umbra/exact.hpp"
#include "umbra/poly.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umbra {

inline constexpr std::uint64_t default_path_cap = 10'000'000;

/// Raised by the enumeration guard: the composition space is larger than the
/// configured cap.
struct path_limit_error : std::runtime_error {
    path_limit_error(std::string count_, std::uint64_t cap_)
        : std::runtime_error("path enumeration refused: " + count_ +
                             " compositions exceed the cap of " + std::to_string(cap_)),
          count(std::move(count_)), cap(cap_) {}
    std::string count;
    std::uint64_t cap;
};

inline void check_path_budget(int n, int slices, std::uint64_t cap) {
    const bigint count = composition_count(n, slices);
    if (count > cap)
        throw path_limit_error(count.str(), cap);
}

/// Visits every (k_1, ..., k_N) with k_j >= 0 and sum n, in lexicographic
/// order. The visitor receives the jump vector by const reference and must
/// copy if it keeps it.
template <typename F>
inline void for_each_composition(int n, int slices, F&& visit) {
    if (n < 0)
        throw std::invalid_argument("for_each_composition: n must be >= 0");
    if (slices < 1)
        throw std::invalid_argument("for_each_composition: at least one slice");
    std::vector<int> jumps(static_cast<std::size_t>(slices), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == slices - 1) {
            jumps[static_cast<std::size_t>(pos)] = remaining;
            visit(std::as_const(jumps));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            jumps[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
}

/// All monotone paths reaching mode n in `slices` steps. The count is
/// C(n+slices-1, slices-1); enumeration refuses above `cap`.
inline std::vector<path_composition> enumerate_paths(int n, int slices,
                                                     std::uint64_t cap = default_path_cap) {
    if (n < 0)
        throw std::invalid_argument("enumerate_paths: n must be >= 0");
    if (slices < 1)
        throw std::invalid_argument("enumerate_paths: at least one slice");
    check_path_budget(n, slices, cap);
    std::vector<path_composition> out;
    out.reserve(composition_count(n, slices).convert_to<std::size_t>());
    for_each_composition(n, slices, [&](const std::vector<int>& jumps) {
        out.emplace_back(jumps);
    });
    return out;
}

/// The exact splitting identity: sum over all compositions of n of
/// prod_j q_{k_j}(x/N), with q_k = p_k/k! read off the triangle. Equal to
/// q_n(x) for every N >= 1 -- this is an identity, not an approximation.
inline rational split_exact(const triangle& t, int n, const rational& x, int slices,
                            std::uint64_t cap = default_path_cap) {
    if (n < 0 || n > t.n_max())
        throw std::out_of_range("split_exact: n out of range for the triangle");
    if (slices < 1)
        throw std::invalid_argument("split_exact: at least one slice");
    check_path_budget(n, slices, cap);

    const rational x_slice = x / rational(slices);
    std::vector<rational> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        q[static_cast<std::size_t>(k)] = t.eval(k, x_slice) / rational(factorial(k));

    rational sum;
    for_each_composition(n, slices, [&](const std::vector<int>& jumps) {
        rational prod = 1;
        for (int k : jumps) {
            if (k == 0)
                continue;
            prod *= q[static_cast<std::size_t>(k)];
            if (prod.is_zero())
                break;
        }
        sum += prod;
    });
    return sum;
}

namespace detail {

/// Per-slice factor series of the first-order scheme:
/// 1 + (x/N) sum_{k=1}^{n} c_k t^k / k!.
inline poly first_order_factor(const cumulant_seq& c, int n, const rational& x, int slices) {
    std::vector<rational> g(static_cast<std::size_t>(n) + 1);
    g[0] = rational(1);
    for (int k = 1; k <= n; ++k)
        g[static_cast<std::size_t>(k)] =
            x * c.at(k) / rational(bigint(slices) * factorial(k));
    return poly(std::move(g));
}

} // namespace detail

/// First-order path-integral discretization with N slices:
///
///     n! [t^n] (1 + (x/N) f_{<=n}(t))^N,
///
/// computed by truncated polynomial powers. This is the exact sum of the
/// discretized scheme over all compositions; the dropped Taylor remainders
/// make it differ from p_n(x) by O(1/N), except n <= 1 where it is exact.
inline rational pathint_approx(const cumulant_seq& c, int n, const rational& x, int slices) {
    if (n < 0)
        throw std::invalid_argument("pathint_approx: n must be >= 0");
    if (slices < 1)
        throw std::invalid_argument("pathint_approx: at least one slice");
    const poly g = detail::first_order_factor(c, n, x, slices);
    const poly gn = pow_trunc(g, static_cast<unsigned long>(slices),
                              static_cast<std::size_t>(n) + 1);
    return gn.coeff(static_cast<std::size_t>(n)) * rational(factorial(n));
}

/// Brute-force evaluator of the same scheme: walks every composition and
/// multiplies per-step factors delta_{k,0} + c_k x/(N k!). Kept as an
/// enumeration oracle for the algebraic route; only usable while the
/// composition count stays under the cap.
inline rational pathint_approx_enumerated(const cumulant_seq& c, int n, const rational& x,
                                          int slices,
                                          std::uint64_t cap = default_path_cap) {
    if (n < 0)
        throw std::invalid_argument("pathint_approx_enumerated: n must be >= 0");
    if (slices < 1)
        throw std::invalid_argument("pathint_approx_enumerated: at least one slice");
    check_path_budget(n, slices, cap);
    const poly g = detail::first_order_factor(c, n, x, slices);
    rational sum;
    for_each_composition(n, slices, [&](const std::vector<int>& jumps) {
        rational prod = 1;
        for (int k : jumps) {
            if (k == 0)
                continue;
            prod *= g.coeff(static_cast<std::size_t>(k));
            if (prod.is_zero())
                break;
        }
        sum += prod;
    });
    return sum * rational(factorial(n));
}

/// The exponentiated limit of the scheme: n! [t^n] exp(x f_{<=n}(t)).
/// Replacing each per-slice factor 1 + h x/N by exp(h x/N) removes the
/// discretization error entirely, so this reproduces p_n(x) exactly.
inline rational pathint_exp(const cumulant_seq& c, int n, const rational& x) {
    if (n < 0)
        throw std::invalid_argument("pathint_exp: n must be >= 0");
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    std::vector<rational> u(len);
    for (int k = 1; k <= n; ++k)
        u[static_cast<std::size_t>(k)] = x * c.at(k) / rational(factorial(k));
    return exp_trunc(poly(std::move(u)), len).coeff(static_cast<std::size_t>(n)) *
           rational(factorial(n));
}

struct convergence_row {
    unsigned long slices = 0;
    rational value;
    rational error;
};

struct convergence_report {
    std::vector<convergence_row> rows;
    rational reference;
    /// Least-squares slope of log|error| against log N over rows with
    /// nonzero error; 0 when fewer than two such rows exist.
    double slope = 0.0;
};

inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2)
        return 0.0;
    double mx = 0.0, my = 0.0;
    for (const auto& [px, py] : pts) {
        mx += px;
        my += py;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [px, py] : pts) {
        sxx += (px - mx) * (px - mx);
        sxy += (px - mx) * (py - my);
    }
    return sxx == 0.0 ? 0.0 : sxy / sxx;
}

/// Error table of the first-order scheme against the exact value, plus a
/// fitted log-log decay slope (about -1 away from degenerate points).
inline convergence_report convergence_table(const cumulant_seq& c, int n, const rational& x,
                                            const std::vector<unsigned long>& slice_counts,
                                            bool enumerated = false,
                                            std::uint64_t cap = default_path_cap) {
    const rational reference = from_cumulants(c, n).eval(n, x);
    convergence_report report;
    report.reference = reference;
    std::vector<std::pair<double, double>> pts;
    for (unsigned long N : slice_counts) {
        if (N > static_cast<unsigned long>(std::numeric_limits<int>::max()))
            throw std::invalid_argument("convergence_table: slice count too large");
        const rational value = enumerated
            ? pathint_approx_enumerated(c, n, x, static_cast<int>(N), cap)
            : pathint_approx(c, n, x, static_cast<int>(N));
        const rational error = abs(value - reference);
        const double log_err = error.is_zero() ? 0.0 : std::log(error.to_double());
        if (!error.is_zero() && std::isfinite(log_err))
            pts.emplace_back(std::log(static_cast<double>(N)), log_err);
        report.rows.push_back({N, value, error});
    }
    report.slope = fit_loglog_slope(pts);
    return report;
}

} // namespace umbra
