#pragma once

#include <stdexcept>
#include <string>

namespace hfm {

/// Invalid user input (bad parameter, malformed config). Maps to the CLI's config exit code.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside a solver or an internal consistency sentinel.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace constants {
inline constexpr double hbar_c_eV_nm = 197.3269804;        // ħc
inline constexpr double electron_mass_eV = 510998.95;      // m_e c²
inline constexpr double bohr_magneton_meV_per_T = 5.7883818060e-2;  // ħe/(2 m_e)
inline constexpr double coulomb_eV_nm = 1.43996454784;     // e²/(4π ε₀)
}  // namespace constants

struct MaterialParams {
    double m_eff_ratio = 0.067;  ///< m*/m_e
    double epsilon_r = 12.0;     ///< relative permittivity

    void validate() const;
    static MaterialParams gaas() { return {}; }
};

/// Physical description of one dot at one field strength.
///
/// `beta` is the prefactor of the pair interaction V = β ln(|r_ij| / r₀) in meV.
/// `rho0` is the reference length of that logarithm, measured in units of the
/// zero-field hyperradial oscillator length b₀ = sqrt(ħ / (μ ω₀)) with μ = m*/√3.
struct DotConfig {
    double hbar_omega0 = 5.0;  ///< confinement energy (meV)
    double b_field = 0.0;      ///< Tesla, >= 0
    double beta = 0.0;         ///< meV per pair
    double rho0 = 1.0;
    MaterialParams material;

    void validate() const;

    /// GaAs dot with ħω₀ = 5 meV and β = e²/(ε_r ℓ₀).
    static DotConfig gaas_default();
};

/// All three entries are energies ħω in meV.
struct Frequencies {
    double omega0 = 0.0;
    double omega_L = 0.0;
    double omega_eff = 0.0;
};

/// ħω_L = ħ e B / (2 m*) in meV. Throws ConfigError for B < 0.
double larmor_frequency(double b_field_tesla, const MaterialParams& material);

double effective_frequency(double omega0, double omega_L);

/// ℓ₀ = sqrt(ħ / (m* ω₀)) in nm.
double oscillator_length(double hbar_omega0_meV, const MaterialParams& material);

/// β = e² / (ε_r ℓ₀) in meV.
double default_beta(double hbar_omega0_meV, const MaterialParams& material);

Frequencies frequencies(const DotConfig& config);

/// Dimensionless units of the relative-motion problem: energies in ħω_eff,
/// hyperradius in b = sqrt(ħ / (μ ω_eff)).
struct InternalUnits {
    double energy_meV = 1.0;
    double length_nm = 1.0;

    double to_internal_energy(double meV) const { return meV / energy_meV; }
    double to_meV(double e) const { return e * energy_meV; }
    double to_internal_length(double nm) const { return nm / length_nm; }
    double to_nm(double x) const { return x * length_nm; }
};

InternalUnits internal_units(const DotConfig& config);

/// Reference length of the logarithm in the field-dependent internal units.
double rho0_internal(const DotConfig& config);

}  // namespace hfm
