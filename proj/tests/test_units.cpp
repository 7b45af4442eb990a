#include <doctest.h>

#include "hfm/units.hpp"
#include "oracles.hpp"

using namespace hfm;

TEST_SUITE("units") {

TEST_CASE("larmor frequency from SI constants") {
    const MaterialParams gaas;
    CHECK(larmor_frequency(0.0, gaas) == 0.0);
    const double one = larmor_frequency(1.0, gaas);
    CHECK(one == doctest::Approx(oracle::larmor_meV(1.0, 0.067)).epsilon(1e-8));
    CHECK(one == doctest::Approx(0.864).epsilon(1e-3));
    CHECK(larmor_frequency(2.0, gaas) == doctest::Approx(2.0 * one).epsilon(1e-15));
}

TEST_CASE("larmor frequency rejects negative field") {
    CHECK_THROWS_AS(larmor_frequency(-0.1, MaterialParams{}), ConfigError);
}

TEST_CASE("larmor frequency homogeneity") {
    for (double b : {0.3, 1.7, 9.0}) {
        for (double m : {0.02, 0.067, 0.5}) {
            const MaterialParams p{m, 12.0};
            const MaterialParams p2{2.0 * m, 12.0};
            CHECK(larmor_frequency(3.0 * b, p) == doctest::Approx(3.0 * larmor_frequency(b, p)).epsilon(1e-14));
            CHECK(larmor_frequency(b, p2) == doctest::Approx(0.5 * larmor_frequency(b, p)).epsilon(1e-14));
        }
    }
}

TEST_CASE("effective frequency") {
    CHECK(effective_frequency(5, 0) == 5.0);
    CHECK(effective_frequency(0, 7.25) == 7.25);
    CHECK(effective_frequency(3, 4) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(effective_frequency(5, 5) == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("oscillator length") {
    const MaterialParams gaas;
    const double l0 = oscillator_length(5.0, gaas);
    CHECK(l0 == doctest::Approx(oracle::length_nm(5.0, 0.067)).epsilon(1e-8));
    CHECK(l0 == doctest::Approx(15.1).epsilon(5e-3));
    CHECK(oscillator_length(5.0, MaterialParams{4 * 0.067, 12}) == doctest::Approx(l0 / 2).epsilon(1e-14));
    CHECK(oscillator_length(20.0, gaas) == doctest::Approx(l0 / 2).epsilon(1e-14));
    CHECK_THROWS_AS(oscillator_length(0.0, gaas), ConfigError);
}

TEST_CASE("default coupling") {
    const MaterialParams gaas;
    const double l0 = oracle::length_nm(5.0, 0.067);
    CHECK(default_beta(5.0, gaas) == doctest::Approx(oracle::coulomb_meV(12.0, l0)).epsilon(1e-8));
    CHECK(DotConfig::gaas_default().beta == doctest::Approx(7.956).epsilon(1e-3));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((MaterialParams{0.0, 12.0}.validate()), ConfigError);
    CHECK_THROWS_AS((MaterialParams{0.067, -1.0}.validate()), ConfigError);
    DotConfig c = DotConfig::gaas_default();
    CHECK_NOTHROW(c.validate());
    c.rho0 = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = DotConfig::gaas_default();
    c.hbar_omega0 = -1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = DotConfig::gaas_default();
    c.b_field = -1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = DotConfig::gaas_default();
    c.beta = -2.0;  // attractive sign is allowed
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("internal unit round trip") {
    DotConfig c = DotConfig::gaas_default();
    for (double b : {0.0, 1.0, 6.5}) {
        c.b_field = b;
        const InternalUnits u = internal_units(c);
        const Frequencies f = frequencies(c);
        CHECK(u.energy_meV == doctest::Approx(f.omega_eff).epsilon(1e-15));
        for (double x : {1e-3, 0.7, 42.0, 1e4}) {
            CHECK(std::abs(u.to_meV(u.to_internal_energy(x)) - x) <= 1e-14 * x);
            CHECK(std::abs(u.to_nm(u.to_internal_length(x)) - x) <= 1e-14 * x);
        }
    }
}

TEST_CASE("internal length is the three-body oscillator length") {
    DotConfig c = DotConfig::gaas_default();
    c.b_field = 3.0;
    const Frequencies f = frequencies(c);
    // b = sqrt(ħ/(μ ω_eff)), μ = m*/√3
    const double b = oracle::length_nm(f.omega_eff, 0.067 / std::sqrt(3.0));
    CHECK(internal_units(c).length_nm == doctest::Approx(b).epsilon(1e-8));
    // ρ₀ is fixed in zero-field units
    CHECK(rho0_internal(c) * internal_units(c).length_nm ==
          doctest::Approx(c.rho0 * oracle::length_nm(5.0, 0.067 / std::sqrt(3.0))).epsilon(1e-8));
}

}
