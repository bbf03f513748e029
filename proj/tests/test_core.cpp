#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using umbra::rational;

TEST_CASE("cumulant_seq stores c_1 onward and zero-extends", "[core]") {
    const umbra::cumulant_seq c({rational(1), rational(-1), rational(2)});
    CHECK(c.size() == 3);
    CHECK(c.at(0) == rational(0));
    CHECK(c.at(1) == rational(1));
    CHECK(c.at(3) == rational(2));
    CHECK(c.at(4) == rational(0));
    CHECK(c.at(99) == rational(0));

    CHECK_THROWS_AS(umbra::cumulant_seq({}), std::invalid_argument);
}

TEST_CASE("triangle enforces its shape", "[core]") {
    CHECK_THROWS_AS(umbra::triangle({}), std::invalid_argument);
    CHECK_THROWS_AS(umbra::triangle({{rational(1), rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(umbra::triangle({{rational(1)}, {rational(0)}}), std::invalid_argument);

    const umbra::triangle t({{rational(1)}, {rational(0), rational(1)}});
    CHECK(t.n_max() == 1);
    CHECK(t.coeff(1, 1) == rational(1));
    CHECK(t.coeff(1, 5) == rational(0));
}

TEST_CASE("triangle_eval on the monomial triangle", "[core]") {
    const umbra::triangle t = umbra::catalog_get("monomial").closed_form(5);
    CHECK(t.eval(3, rational(2)) == rational(8));
    CHECK(t.eval(0, rational(123, 7)) == rational(1));
    CHECK(t.eval(5, rational(-1, 2)) == rational(-1, 32));
}

TEST_CASE("triangle_eval on the falling-factorial triangle", "[core]") {
    const umbra::triangle t = umbra::catalog_get("falling").closed_form(4);
    // oracle: expand x(x-1)(x-2) independently and evaluate at 5
    const auto p3 = testutil::ref_falling(3);
    CHECK(testutil::ref_eval(p3, rational(5)) == rational(60));
    CHECK(t.eval(3, rational(5)) == rational(60));
    CHECK(t.eval(0, rational(5)) == rational(1));
}

TEST_CASE("triangle_eval rejects rows out of range", "[core]") {
    const umbra::triangle t = umbra::catalog_get("monomial").closed_form(3);
    CHECK_THROWS_AS(t.eval(4, rational(1)), std::out_of_range);
    CHECK_THROWS_AS(t.eval(-1, rational(1)), std::out_of_range);
    CHECK_THROWS_AS(t.row(17), std::out_of_range);
}

TEST_CASE("every generated triangle has a_{0,0} = 1 and p_n(0) = delta_n0", "[core]") {
    std::mt19937 gen(23);
    for (int i = 0; i < 30; ++i) {
        const auto c = testutil::random_cumulants(gen, 8);
        const umbra::triangle t = umbra::from_cumulants(c, 8);
        CHECK(t.coeff(0, 0) == rational(1));
        for (int n = 0; n <= t.n_max(); ++n) {
            CHECK(t.coeff(n, 0) == rational(n == 0 ? 1 : 0));
            CHECK(t.eval(n, rational(0)) == rational(n == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("hamiltonian pins h_0 = 0", "[core]") {
    CHECK_THROWS_AS(umbra::hamiltonian({}), std::invalid_argument);
    CHECK_THROWS_AS(umbra::hamiltonian({rational(1)}), std::invalid_argument);
    const umbra::hamiltonian h({rational(0), rational(1), rational(1, 2)});
    CHECK(h.order() == 2);
    CHECK(h.coeff(2) == rational(1, 2));
    CHECK(h.coeff(3) == rational(0));
}

TEST_CASE("wave_vector requires q_0 = 1", "[core]") {
    CHECK_THROWS_AS(umbra::wave_vector(rational(0), {}), std::invalid_argument);
    CHECK_THROWS_AS(umbra::wave_vector(rational(0), {rational(2)}), std::invalid_argument);
    const umbra::wave_vector w(rational(1), {rational(1), rational(1), rational(1, 2)});
    CHECK(w.n_max() == 2);
}

TEST_CASE("path_composition validates its jumps", "[core]") {
    const umbra::path_composition p({0, 2, 1});
    CHECK(p.target() == 3);
    CHECK(p.slices() == 3);
    CHECK_THROWS_AS(umbra::path_composition({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(umbra::path_composition({}), std::invalid_argument);
}

TEST_CASE("binomial machinery", "[core]") {
    const umbra::binomial_table binom(10);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binom(n, k) == umbra::binomial(n, k));
    CHECK(binom(5, 7) == 0);
    CHECK(binom(3, -1) == 0);
    CHECK(umbra::binomial(10, 5) == 252);
    CHECK(umbra::factorial(0) == 1);
    CHECK(umbra::factorial(6) == 720);
    CHECK(umbra::falling_factorial(7, 3) == 210);
    CHECK(umbra::falling_factorial(7, 0) == 1);
    CHECK(umbra::composition_count(2, 2) == 3);
    CHECK(umbra::composition_count(3, 3) == 10);
}
