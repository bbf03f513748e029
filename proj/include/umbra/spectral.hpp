#pragma once

#include "umbra/combinatorics.hpp"
#include "umbra/core.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace umbra {

/// Discretization knobs for the quadrature evaluator. initial_nodes = 0 lets
/// the evaluator pick the smallest power of two >= 4(n+1); a nonzero hint is
/// rounded up to a power of two and clamped to the 2(n+1) sampling floor.
struct quadrature_config {
    std::uint64_t initial_nodes = 0;
    double tol = 1e-10;
    int max_doublings = 12;
};

/// Raised when doubling the node count max_doublings times never brought two
/// successive estimates within tolerance; carries both trailing estimates.
struct convergence_error : std::runtime_error {
    convergence_error(std::complex<double> previous_, std::complex<double> last_,
                      std::uint64_t nodes_)
        : std::runtime_error("quadrature did not converge (last nodes = " +
                             std::to_string(nodes_) + ")"),
          previous(previous_), last(last_), nodes(nodes_) {}
    std::complex<double> previous;
    std::complex<double> last;
    std::uint64_t nodes;
};

/// h_k = c_k/k! for k = 0..K, exactly; h_0 = 0 since c_0 = 0.
inline hamiltonian hamiltonian_of(const cumulant_seq& c, int K) {
    if (K < 1)
        throw std::invalid_argument("hamiltonian_of: K must be >= 1");
    std::vector<rational> h(static_cast<std::size_t>(K) + 1);
    for (int k = 1; k <= K; ++k)
        h[static_cast<std::size_t>(k)] = c.at(k) / rational(factorial(k));
    return hamiltonian(std::move(h));
}

/// Truncated Fourier sum h(p) = sum_{k=0}^{K} h_k e^{ipk} in double-complex.
inline std::complex<double> hamiltonian_eval(const hamiltonian& h, double p) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k <= h.order(); ++k)
        acc += h.coeff(k).to_double() * std::polar(1.0, p * k);
    return acc;
}

inline double factorial_as_double(int n) {
    if (n > 170)
        throw std::overflow_error("factorial_as_double: n! exceeds double range");
    double r = 1.0;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// One fixed-M trapezoidal estimate of
///     n! (1/(2pi)) int_{-pi}^{pi} e^{-inp} e^{x h(p)} dp
/// at the equispaced angles p_j = -pi + 2pi j/M. All frequencies in h are
/// nonnegative, so the sampling floor M >= 2(n+1) leaves only aliasing from
/// modes n+M, n+2M, ... of e^{x h}.
inline std::complex<double> spectral_estimate(const hamiltonian& h, int n, double x,
                                              std::uint64_t nodes) {
    if (n < 0)
        throw std::invalid_argument("spectral_estimate: n must be >= 0");
    if (nodes < 2 * static_cast<std::uint64_t>(n + 1))
        throw std::invalid_argument("spectral_estimate: nodes must be >= 2(n+1)");

    std::vector<double> hk(static_cast<std::size_t>(h.order()) + 1);
    for (int k = 0; k <= h.order(); ++k)
        hk[static_cast<std::size_t>(k)] = h.coeff(k).to_double();

    // Compensated summation: the target coefficient can sit many orders of
    // magnitude below the sample size, and the n! factor amplifies whatever
    // the accumulation loses.
    const double step = 2.0 * std::numbers::pi / static_cast<double>(nodes);
    std::complex<double> sum = 0.0;
    std::complex<double> carry = 0.0;
    for (std::uint64_t j = 0; j < nodes; ++j) {
        const double p = -std::numbers::pi + step * static_cast<double>(j);
        const std::complex<double> z = std::polar(1.0, p);
        std::complex<double> hp = 0.0;
        for (std::size_t k = hk.size(); k-- > 0;)
            hp = hp * z + hk[k];
        const std::complex<double> term =
            std::polar(1.0, -static_cast<double>(n) * p) * std::exp(x * hp) - carry;
        const std::complex<double> bumped = sum + term;
        carry = (bumped - sum) - term;
        sum = bumped;
    }
    return factorial_as_double(n) * sum / static_cast<double>(nodes);
}

struct spectral_result {
    std::complex<double> value;
    std::uint64_t nodes = 0;
    int doublings = 0;
};

inline std::uint64_t round_up_pow2(std::uint64_t v) {
    std::uint64_t p = 1;
    while (p < v)
        p <<= 1;
    return p;
}

/// Evaluates p_n(x) through the quadrature route.
///
/// The Hamiltonian is truncated at K = n: higher modes cannot reach the n-th
/// Fourier coefficient of e^{x h} in the continuum, so the truncation is
/// exact there and only aliasing remains. The node count doubles until two
/// successive estimates agree to tol * max(1, |estimate|).
inline spectral_result spectral_eval(const cumulant_seq& c, int n, double x,
                                     const quadrature_config& cfg = {}) {
    if (n < 0)
        throw std::invalid_argument("spectral_eval: n must be >= 0");
    const hamiltonian h = hamiltonian_of(c, n > 0 ? n : 1);

    std::uint64_t nodes = round_up_pow2(4 * static_cast<std::uint64_t>(n + 1));
    if (cfg.initial_nodes != 0) {
        nodes = round_up_pow2(cfg.initial_nodes);
        if (nodes < 2 * static_cast<std::uint64_t>(n + 1))
            nodes = round_up_pow2(2 * static_cast<std::uint64_t>(n + 1));
    }

    std::complex<double> prev = spectral_estimate(h, n, x, nodes);
    for (int d = 1; d <= cfg.max_doublings; ++d) {
        nodes *= 2;
        const std::complex<double> cur = spectral_estimate(h, n, x, nodes);
        if (std::abs(cur - prev) < cfg.tol * std::max(1.0, std::abs(cur)))
            return {cur, nodes, d};
        if (d == cfg.max_doublings)
            throw convergence_error(prev, cur, nodes);
        prev = cur;
    }
    throw convergence_error(prev, prev, nodes);
}

/// Evaluates both sides of h(p) = f(e^{ip}) under the same truncation
/// K = stored cumulant length: the left as the Fourier sum of h_k, the right
/// as the cumulant series f(t) = sum c_k t^k/k! at t = e^{ip}. Returns
/// (h(p), f(e^{ip})); the two must agree to float precision.
inline std::pair<std::complex<double>, std::complex<double>>
hamiltonian_vs_cumulant_series(const cumulant_seq& c, double p) {
    const int K = c.size();
    const std::complex<double> lhs = hamiltonian_eval(hamiltonian_of(c, K), p);

    const std::complex<double> z = std::polar(1.0, p);
    std::complex<double> rhs = 0.0;
    for (int k = K; k >= 1; --k)
        rhs = (rhs + c.at(k).to_double() / factorial_as_double(k)) * z;
    return {lhs, rhs};
}

} // namespace umbra
