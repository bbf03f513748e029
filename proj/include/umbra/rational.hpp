#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace umbra {

using bigint = boost::multiprecision::cpp_int;

/// Thrown when a rational literal does not match "a" or "a/b".
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number: always in lowest terms, denominator > 0.
///
/// This is the coefficient type of every exact engine. Arithmetic never
/// rounds; conversion to double happens only at the boundary to the
/// floating-point engines. The storage is boost::multiprecision, which keeps
/// values canonical through arithmetic; the constructor handles sign
/// normalization and rejects zero denominators.
class rational {
public:
    rational() : v_(0) {}
    rational(long long n) : v_(n) {}
    explicit rational(const bigint& n) : v_(n) {}

    rational(bigint num, bigint den) {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    /// Parses "a" or "a/b" (decimal integers, optional leading minus on
    /// either part). Anything else raises parse_error; "a/0" raises
    /// std::domain_error.
    static rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return rational(parse_integer(text));
        return rational(parse_integer(text.substr(0, slash)),
                        parse_integer(text.substr(slash + 1)));
    }

    /// Serializes as "num/den", or plain "num" when the denominator is 1.
    std::string str() const {
        std::string out = numerator().str();
        if (denominator() != 1) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    bigint numerator() const { return boost::multiprecision::numerator(v_); }
    bigint denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    double to_double() const { return v_.convert_to<double>(); }

    rational operator-() const { return rational(cpp_rat(-v_)); }

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.v_.is_zero())
            throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        if (a.v_ < b.v_)
            return std::strong_ordering::less;
        if (a.v_ == b.v_)
            return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    friend rational abs(const rational& r) {
        return r.sign() < 0 ? -r : r;
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

private:
    using cpp_rat = boost::multiprecision::cpp_rational;

    explicit rational(cpp_rat v) : v_(std::move(v)) {}

    static bigint parse_integer(std::string_view text) {
        const std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
        if (start == text.size())
            throw parse_error("invalid rational literal \"" + std::string(text) + "\"");
        for (std::size_t i = start; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw parse_error("invalid rational literal \"" + std::string(text) + "\"");
        return bigint(std::string(text));
    }

    cpp_rat v_;
};

/// Reduces num/den to canonical form. Same contract as the two-argument
/// constructor; provided as a named entry point.
inline rational normalize(bigint num, bigint den) {
    return rational(std::move(num), std::move(den));
}

inline rational pow(const rational& base, unsigned long exp) {
    rational acc = 1;
    rational sq = base;
    for (; exp != 0; exp >>= 1) {
        if (exp & 1)
            acc *= sq;
        if (exp > 1)
            sq *= sq;
    }
    return acc;
}

} // namespace umbra
