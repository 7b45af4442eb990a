#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hfm/quadrature.hpp"
#include "hfm/units.hpp"

using namespace hfm;

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    for (int n : {1, 2, 5, 16, 64}) {
        const QuadratureRule r = gauss_legendre(n, -1.0, 1.0);
        REQUIRE(r.size() == static_cast<std::size_t>(n));
        for (int p = 0; p <= 2 * n - 1; ++p) {
            const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
            CHECK(r.integrate([p](double x) { return std::pow(x, p); }) == doctest::Approx(exact).epsilon(1e-13));
        }
        for (double w : r.weights) CHECK(w > 0.0);
    }
}

TEST_CASE("gauss-legendre on a shifted interval") {
    const QuadratureRule r = gauss_legendre(20, 0.0, std::numbers::pi / 2);
    CHECK(r.integrate([](double a) { return std::cos(a) * std::sin(a); }) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("gauss-laguerre moments") {
    const QuadratureRule r = gauss_laguerre(12);
    double fact = 1.0;
    for (int p = 0; p <= 23; ++p) {
        if (p > 0) fact *= p;
        CHECK(r.integrate([p](double x) { return std::pow(x, p); }) == doctest::Approx(fact).epsilon(1e-12));
    }
}

TEST_CASE("endpoint log rule reproduces the log moment") {
    const EndpointLogRule q = endpoint_log_rule(64);
    double s = 0.0, plain = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        s += q.weights[i] * std::log(q.cos_alpha[i]) * q.cos_alpha[i] * std::sin(q.alpha[i]);
        plain += q.weights[i] * q.cos_alpha[i] * std::sin(q.alpha[i]);
        CHECK(q.cos_alpha[i] == doctest::Approx(std::cos(q.alpha[i])).epsilon(1e-12));
    }
    CHECK(std::abs(s + 0.25) < 1e-12);
    CHECK(std::abs(plain - 0.5) < 1e-14);
}

TEST_CASE("invalid orders") {
    CHECK_THROWS_AS(gauss_legendre(0), ConfigError);
    CHECK_THROWS_AS(gauss_laguerre(0), ConfigError);
    CHECK_THROWS_AS(endpoint_log_rule(0), ConfigError);
}

}
