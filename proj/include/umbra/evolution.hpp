#pragma once

#include "umbra/combinatorics.hpp"
#include "umbra/core.hpp"
#include "umbra/poly.hpp"
#include "umbra/spectral.hpp"

#include <stdexcept>
#include <vector>

namespace umbra {

/// Right-hand side of the evolution system d/dx q_n = (h * q)_n, the
/// convolution on nonnegative modes. h_0 = 0 makes the system strictly lower
/// triangular: component n never reads q_m for m >= n.
inline std::vector<rational> rhs(const hamiltonian& h, const wave_vector& w) {
    const int n_max = w.n_max();
    std::vector<rational> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        rational acc;
        for (int k = 1; k <= n; ++k) {
            const rational hk = h.coeff(k);
            if (hk.is_zero())
                continue;
            acc += hk * w.values()[static_cast<std::size_t>(n - k)];
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

/// Solves the evolution system in closed form: q_0 = 1 and
/// q_n(x) = int_0^x (h * q)_n ds, integrating polynomials by the power rule.
/// Returns the polynomials q_0(x)..q_{n_max}(x).
inline std::vector<poly> evolve_polynomials(const cumulant_seq& c, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("evolve_polynomials: n_max must be >= 0");
    const hamiltonian h = hamiltonian_of(c, n_max > 0 ? n_max : 1);
    std::vector<poly> q(static_cast<std::size_t>(n_max) + 1);
    q[0] = poly::one();
    for (int n = 1; n <= n_max; ++n) {
        poly conv;
        for (int k = 1; k <= n; ++k) {
            const rational hk = h.coeff(k);
            if (hk.is_zero())
                continue;
            conv += q[static_cast<std::size_t>(n - k)] * hk;
        }
        q[static_cast<std::size_t>(n)] = conv.antiderivative();
    }
    return q;
}

/// The wave vector at x obtained by exact integration of the evolution
/// system; coincides with the scaled triangle values p_n(x)/n!.
inline wave_vector evolve_exact(const cumulant_seq& c, int n_max, const rational& x) {
    const std::vector<poly> q = evolve_polynomials(c, n_max);
    std::vector<rational> values;
    values.reserve(q.size());
    for (const poly& qn : q)
        values.push_back(qn.eval(x));
    return wave_vector(x, std::move(values));
}

/// Classic fourth-order Runge-Kutta integration of the same system in
/// doubles, from 0 to x in `steps` uniform steps. Exists to exercise the ODE
/// formulation; global error is O((x/steps)^4).
inline std::vector<double> evolve_numeric(const cumulant_seq& c, int n_max, double x,
                                          int steps) {
    if (n_max < 0)
        throw std::invalid_argument("evolve_numeric: n_max must be >= 0");
    if (steps < 1)
        throw std::invalid_argument("evolve_numeric: steps must be >= 1");

    const hamiltonian ham = hamiltonian_of(c, n_max > 0 ? n_max : 1);
    std::vector<double> hk(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int k = 1; k <= n_max; ++k)
        hk[static_cast<std::size_t>(k)] = ham.coeff(k).to_double();

    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    auto deriv = [&](const std::vector<double>& q) {
        std::vector<double> d(dim, 0.0);
        for (std::size_t n = 1; n < dim; ++n) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += hk[k] * q[n - k];
            d[n] = acc;
        }
        return d;
    };
    auto shifted = [&](const std::vector<double>& q, const std::vector<double>& d,
                       double scale) {
        std::vector<double> out(dim);
        for (std::size_t i = 0; i < dim; ++i)
            out[i] = q[i] + scale * d[i];
        return out;
    };

    std::vector<double> q(dim, 0.0);
    q[0] = 1.0;
    const double dt = x / static_cast<double>(steps);
    for (int s = 0; s < steps; ++s) {
        const auto k1 = deriv(q);
        const auto k2 = deriv(shifted(q, k1, dt / 2.0));
        const auto k3 = deriv(shifted(q, k2, dt / 2.0));
        const auto k4 = deriv(shifted(q, k3, dt));
        for (std::size_t i = 0; i < dim; ++i)
            q[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return q;
}

/// Checks p_n'(x) = n! sum_k h_k p_{n-k}(x)/(n-k)! as an exact polynomial
/// identity in x for every n up to n_max. The sum effectively runs k = 1..n:
/// h_0 = 0 kills k = 0 and rows below zero do not exist. The prefactor
/// n!/(n-k)! is taken as a falling-factorial product, keeping it integral.
inline bool verify_schrodinger(const triangle& t, const cumulant_seq& c) {
    for (int n = 0; n <= t.n_max(); ++n) {
        const poly lhs = poly(t.row(n)).derivative();
        poly sum;
        for (int k = 1; k <= n; ++k) {
            const rational weight =
                rational(falling_factorial(n, k)) * c.at(k) / rational(factorial(k));
            if (weight.is_zero())
                continue;
            sum += poly(t.row(n - k)) * weight;
        }
        if (!(lhs == sum))
            return false;
    }
    return true;
}

} // namespace umbra
