#pragma once

#include "umbra/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umbra {

/// Cumulants c_1..c_K of a binomial-type sequence: c_n = p_n'(0).
///
/// c_0 is identically zero and never stored. Reads beyond K are zero: the
/// sequence carries formal-power-series semantics, so a finite list stands
/// for its infinite zero-extension.
class cumulant_seq {
public:
    explicit cumulant_seq(std::vector<rational> values) : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("cumulant_seq: at least c_1 is required");
    }

    /// K, the number of stored cumulants.
    int size() const { return static_cast<int>(values_.size()); }

    /// c_k with zero-extension; at(0) is 0 by definition.
    rational at(int k) const {
        if (k <= 0 || k > size())
            return rational(0);
        return values_[static_cast<std::size_t>(k - 1)];
    }

    const std::vector<rational>& values() const { return values_; }

    friend bool operator==(const cumulant_seq& a, const cumulant_seq& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<rational> values_;
};

/// Triangle of connecting constants a_{n,k}: row n holds the monomial-basis
/// coefficients of p_n(x) = sum_k a_{n,k} x^k, k = 0..n.
///
/// Only the shape is enforced here (row n has exactly n+1 entries); the
/// defining identities are checked by the verifiers, which must be able to
/// receive tampered values and say no.
class triangle {
public:
    explicit triangle(std::vector<std::vector<rational>> rows, bool c1_zero = false)
        : rows_(std::move(rows)), c1_zero_(c1_zero) {
        if (rows_.empty())
            throw std::invalid_argument("triangle: row 0 is required");
        for (std::size_t n = 0; n < rows_.size(); ++n)
            if (rows_[n].size() != n + 1)
                throw std::invalid_argument("triangle: row " + std::to_string(n) +
                                            " must have " + std::to_string(n + 1) +
                                            " entries");
    }

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    const std::vector<rational>& row(int n) const {
        check_row(n);
        return rows_[static_cast<std::size_t>(n)];
    }

    /// a_{n,k}, with zero for k outside 0..n.
    rational coeff(int n, int k) const {
        check_row(n);
        if (k < 0 || k > n)
            return rational(0);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// p_n(x) by Horner's rule, exactly.
    rational eval(int n, const rational& x) const {
        check_row(n);
        const auto& r = rows_[static_cast<std::size_t>(n)];
        rational acc;
        for (int k = n; k >= 0; --k)
            acc = acc * x + r[static_cast<std::size_t>(k)];
        return acc;
    }

    /// Set when the triangle was generated from cumulants with c_1 = 0: the
    /// identities all still hold but deg p_n < n.
    bool c1_zero_warning() const { return c1_zero_; }

    friend bool operator==(const triangle& a, const triangle& b) {
        return a.rows_ == b.rows_;
    }

private:
    void check_row(int n) const {
        if (n < 0 || n > n_max())
            throw std::out_of_range("triangle: row " + std::to_string(n) +
                                    " out of range (n_max = " + std::to_string(n_max()) + ")");
    }

    std::vector<std::vector<rational>> rows_;
    bool c1_zero_ = false;
};

/// Fourier coefficients h_0..h_K of h(p) = sum_k h_k e^{ipk}, h_k = c_k/k!.
/// h_0 is pinned to zero: q_0 is the constant 1, so q_0'(0) = 0.
class hamiltonian {
public:
    explicit hamiltonian(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("hamiltonian: h_0 must be present");
        if (!(coeffs_[0] == rational(0)))
            throw std::invalid_argument("hamiltonian: h_0 must be zero");
    }

    /// K, the highest stored mode.
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// h_k with zero-extension beyond K.
    rational coeff(int k) const {
        if (k < 0 || k > order())
            return rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<rational>& coeffs() const { return coeffs_; }

private:
    std::vector<rational> coeffs_;
};

/// The scaled sequence q_0(x)..q_{n_max}(x) at one evolution parameter x,
/// where q_n = p_n/n!. q_0 is always 1; at x = 0 the vector is (1, 0, ..., 0).
class wave_vector {
public:
    wave_vector(rational x, std::vector<rational> values)
        : x_(std::move(x)), values_(std::move(values)) {
        if (values_.empty() || !(values_[0] == rational(1)))
            throw std::invalid_argument("wave_vector: q_0 must be 1");
    }

    const rational& x() const { return x_; }
    int n_max() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<rational>& values() const { return values_; }

    friend bool operator==(const wave_vector& a, const wave_vector& b) {
        return a.x_ == b.x_ && a.values_ == b.values_;
    }

private:
    rational x_;
    std::vector<rational> values_;
};

/// One monotone lattice path across N time slices, stored as its jump sizes
/// (k_1, ..., k_N): all jumps nonnegative, summing to the target mode n.
/// Paths with a negative jump do not exist in this encoding, mirroring the
/// fact that their contribution vanishes.
class path_composition {
public:
    explicit path_composition(std::vector<int> jumps) : jumps_(std::move(jumps)) {
        if (jumps_.empty())
            throw std::invalid_argument("path_composition: at least one slice");
        for (int j : jumps_)
            if (j < 0)
                throw std::invalid_argument("path_composition: negative jump");
        target_ = std::accumulate(jumps_.begin(), jumps_.end(), 0);
    }

    const std::vector<int>& jumps() const { return jumps_; }
    int target() const { return target_; }
    int slices() const { return static_cast<int>(jumps_.size()); }

    friend bool operator==(const path_composition& a, const path_composition& b) {
        return a.jumps_ == b.jumps_;
    }

private:
    std::vector<int> jumps_;
    int target_ = 0;
};

} // namespace umbra
