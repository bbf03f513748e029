#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using umbra::poly;
using umbra::rational;

namespace {

poly random_poly(std::mt19937& gen, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<rational> c;
    const int d = deg(gen);
    for (int k = 0; k <= d; ++k)
        c.push_back(testutil::random_rational(gen));
    return poly(std::move(c));
}

} // namespace

TEST_CASE("multiplication matches the reference convolution", "[poly]") {
    std::mt19937 gen(31);
    for (int i = 0; i < 50; ++i) {
        const poly a = random_poly(gen, 6);
        const poly b = random_poly(gen, 6);
        const auto ref = testutil::ref_mul(a.coeffs(), b.coeffs());
        CHECK(mul(a, b) == poly(ref));
        CHECK(mul_trunc(a, b, 4) == poly({ref.size() > 0 ? ref[0] : rational(0),
                                          ref.size() > 1 ? ref[1] : rational(0),
                                          ref.size() > 2 ? ref[2] : rational(0),
                                          ref.size() > 3 ? ref[3] : rational(0)}));
    }
}

TEST_CASE("pow_trunc is iterated multiplication", "[poly]") {
    std::mt19937 gen(37);
    const poly a = random_poly(gen, 3);
    poly iter = poly::one();
    for (unsigned e = 0; e <= 6; ++e) {
        CHECK(pow_trunc(a, e, 5) == mul_trunc(iter, poly::one(), 5));
        iter = mul_trunc(iter, a, 5);
    }
}

TEST_CASE("exp_trunc of t has coefficients 1/k!", "[poly]") {
    const poly e = exp_trunc(poly{rational(0), rational(1)}, 6);
    for (int k = 0; k < 6; ++k)
        CHECK(e.coeff(static_cast<std::size_t>(k)) ==
              rational(umbra::bigint(1), umbra::factorial(k)));
    CHECK_THROWS_AS(exp_trunc(poly{rational(1)}, 3), std::invalid_argument);
}

TEST_CASE("exp_trunc turns sums into products", "[poly]") {
    std::mt19937 gen(41);
    for (int i = 0; i < 20; ++i) {
        poly u = random_poly(gen, 5);
        poly v = random_poly(gen, 5);
        auto no_const = [](poly p) {
            std::vector<rational> c(p.coeffs());
            if (!c.empty())
                c[0] = rational(0);
            return poly(c);
        };
        u = no_const(u);
        v = no_const(v);
        CHECK(exp_trunc(u + v, 7) == mul_trunc(exp_trunc(u, 7), exp_trunc(v, 7), 7));
    }
}

TEST_CASE("derivative and antiderivative", "[poly]") {
    const poly p{rational(5), rational(-1), rational(3, 2)};
    CHECK(p.derivative() == poly{rational(-1), rational(3)});
    CHECK(p.antiderivative() == poly{rational(0), rational(5), rational(-1, 2), rational(1, 2)});
    std::mt19937 gen(43);
    for (int i = 0; i < 20; ++i) {
        const poly q = random_poly(gen, 6);
        CHECK(q.antiderivative().derivative() == q);
    }
}

TEST_CASE("evaluation matches naive power sums", "[poly]") {
    std::mt19937 gen(47);
    for (int i = 0; i < 30; ++i) {
        const poly p = random_poly(gen, 6);
        const rational x = testutil::random_rational(gen);
        CHECK(p.eval(x) == testutil::ref_eval(p.coeffs(), x));
    }
}

TEST_CASE("equality ignores trailing zeros", "[poly]") {
    CHECK(poly{rational(1), rational(2), rational(0)} == poly{rational(1), rational(2)});
    CHECK(poly{} == poly{rational(0), rational(0)});
    CHECK(poly{rational(1)} != poly{rational(1), rational(1)});
    CHECK(poly{rational(0), rational(0), rational(3)}.degree() == 2);
    CHECK(poly{}.degree() == -1);
}
