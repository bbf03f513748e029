#pragma once

#include "umbra/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace umbra {

/// Dense polynomial (equally: truncated power series) with exact rational
/// coefficients. coeff(k) reads as zero past the stored length, so values
/// compare by mathematical content, not storage size.
class poly {
public:
    poly() = default;
    poly(std::initializer_list<rational> cs) : c_(cs) {}
    explicit poly(std::vector<rational> cs) : c_(std::move(cs)) {}

    static poly one() { return poly{rational(1)}; }

    std::size_t size() const { return c_.size(); }

    rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : rational(0);
    }

    const std::vector<rational>& coeffs() const { return c_; }

    int degree() const {
        for (std::size_t k = c_.size(); k-- > 0;)
            if (!c_[k].is_zero())
                return static_cast<int>(k);
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    rational eval(const rational& x) const {
        rational acc;
        for (std::size_t k = c_.size(); k-- > 0;)
            acc = acc * x + c_[k];
        return acc;
    }

    poly derivative() const {
        if (c_.size() <= 1)
            return poly();
        std::vector<rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * rational(static_cast<long long>(k));
        return poly(std::move(d));
    }

    /// Power-rule antiderivative with zero constant term.
    poly antiderivative() const {
        std::vector<rational> a(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k)
            a[k + 1] = c_[k] / rational(static_cast<long long>(k + 1));
        return poly(std::move(a));
    }

    poly& operator+=(const poly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        return *this;
    }

    poly& operator-=(const poly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        return *this;
    }

    poly& operator*=(const rational& s) {
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(poly a, const rational& s) { return a *= s; }
    friend poly operator*(const rational& s, poly a) { return a *= s; }

    friend bool operator==(const poly& a, const poly& b) {
        const std::size_t len = std::max(a.c_.size(), b.c_.size());
        for (std::size_t k = 0; k < len; ++k)
            if (!(a.coeff(k) == b.coeff(k)))
                return false;
        return true;
    }

private:
    std::vector<rational> c_;
};

inline poly mul(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero())
        return poly();
    std::vector<rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeff(i).is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a.coeff(i) * b.coeff(j);
    }
    return poly(std::move(out));
}

/// Product truncated to the first `len` coefficients (mod t^len).
inline poly mul_trunc(const poly& a, const poly& b, std::size_t len) {
    std::vector<rational> out(len);
    const std::size_t ia = std::min(a.size(), len);
    for (std::size_t i = 0; i < ia; ++i) {
        if (a.coeff(i).is_zero())
            continue;
        const std::size_t jb = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jb; ++j)
            out[i + j] += a.coeff(i) * b.coeff(j);
    }
    return poly(std::move(out));
}

inline poly pow_trunc(poly base, unsigned long exp, std::size_t len) {
    poly acc = poly::one();
    while (exp != 0) {
        if (exp & 1)
            acc = mul_trunc(acc, base, len);
        exp >>= 1;
        if (exp != 0)
            base = mul_trunc(base, base, len);
    }
    return acc;
}

/// exp(u) mod t^len for a series with no constant term: sum_m u^m/m!. The
/// valuation of u^m is at least m, so m < len terms suffice and the sum is
/// exact.
inline poly exp_trunc(const poly& u, std::size_t len) {
    if (!u.coeff(0).is_zero())
        throw std::invalid_argument("exp_trunc: series must have zero constant term");
    poly acc = poly::one();
    poly term = poly::one();
    for (std::size_t m = 1; m < len; ++m) {
        term = mul_trunc(term, u, len);
        term *= rational(bigint(1), bigint(m));
        if (term.is_zero())
            break;
        acc += term;
    }
    return acc;
}

} // namespace umbra
