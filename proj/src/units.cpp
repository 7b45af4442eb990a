#include "hfm/units.hpp"

#include <cmath>

namespace hfm {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

}  // namespace

void MaterialParams::validate() const {
    require(std::isfinite(m_eff_ratio) && m_eff_ratio > 0, "m_eff_ratio must be positive");
    require(std::isfinite(epsilon_r) && epsilon_r > 0, "epsilon_r must be positive");
}

void DotConfig::validate() const {
    material.validate();
    require(std::isfinite(hbar_omega0) && hbar_omega0 > 0, "hbar_omega0 must be positive");
    require(std::isfinite(b_field) && b_field >= 0, "b_field must be non-negative");
    require(std::isfinite(beta), "beta must be finite");
    require(std::isfinite(rho0) && rho0 > 0, "rho0 must be positive");
}

DotConfig DotConfig::gaas_default() {
    DotConfig c;
    c.beta = default_beta(c.hbar_omega0, c.material);
    return c;
}

double larmor_frequency(double b_field_tesla, const MaterialParams& material) {
    material.validate();
    require(std::isfinite(b_field_tesla) && b_field_tesla >= 0,
            "magnetic field must be non-negative; orientation enters through the sign of L_z");
    return constants::bohr_magneton_meV_per_T * b_field_tesla / material.m_eff_ratio;
}

double effective_frequency(double omega0, double omega_L) {
    return std::hypot(omega0, omega_L);
}

double oscillator_length(double hbar_omega0_meV, const MaterialParams& material) {
    material.validate();
    require(hbar_omega0_meV > 0, "hbar_omega0 must be positive");
    const double mc2 = material.m_eff_ratio * constants::electron_mass_eV;
    return constants::hbar_c_eV_nm / std::sqrt(mc2 * hbar_omega0_meV * 1e-3);
}

double default_beta(double hbar_omega0_meV, const MaterialParams& material) {
    const double l0 = oscillator_length(hbar_omega0_meV, material);
    return 1e3 * constants::coulomb_eV_nm / (material.epsilon_r * l0);
}

Frequencies frequencies(const DotConfig& config) {
    Frequencies f;
    f.omega0 = config.hbar_omega0;
    f.omega_L = larmor_frequency(config.b_field, config.material);
    f.omega_eff = effective_frequency(f.omega0, f.omega_L);
    return f;
}

InternalUnits internal_units(const DotConfig& config) {
    config.validate();
    const Frequencies f = frequencies(config);
    // μ = m*/√3 for three equal masses
    const double mu_c2 = config.material.m_eff_ratio * constants::electron_mass_eV / std::sqrt(3.0);
    InternalUnits u;
    u.energy_meV = f.omega_eff;
    u.length_nm = constants::hbar_c_eV_nm / std::sqrt(mu_c2 * f.omega_eff * 1e-3);
    return u;
}

double rho0_internal(const DotConfig& config) {
    const Frequencies f = frequencies(config);
    return config.rho0 * std::sqrt(f.omega_eff / f.omega0);
}

}  // namespace hfm
