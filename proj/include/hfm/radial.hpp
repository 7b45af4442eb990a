#pragma once

#include <string>
#include <vector>

namespace hfm {

/// u_{KN}(ρ) = c_{KN} ρ^{K+3/2} exp(−αρ²/2) L_N^{K+1}(αρ²), unit norm on dρ.
struct RadialBasisIndex {
    int K = 0;
    int N = 0;
    double alpha_scale = 1.0;
};

double radial_basis(const RadialBasisIndex& idx, double rho);

/// How the closed-form non-interacting energy is scaled.
///  - paper:  √(2/3) ħω (2N + K + 2)
///  - oracle: c ħω (2N + K + 2) with c fixed by the finite-difference hyperradial solve
enum class PrefactorMode { paper, oracle };

std::string to_string(PrefactorMode m);
PrefactorMode prefactor_from_string(const std::string& s);

/// c for `oracle` mode: the β = 0 hyperradial equation with centrifugal index
/// (K+1)² − 1/4 and oscillator term ¼ω̃²ρ² has χ²/2 = ħω (2N + K + 2).
inline constexpr double oracle_prefactor = 1.0;

double energy_prefactor(PrefactorMode m);

/// prefactor · ħω (2N + K + 2) − ħω_L · L_z, in the units of ħω.
double noninteracting_energy(int N, int K, int Lz, double hbar_omega, double hbar_omega_L,
                             PrefactorMode mode = PrefactorMode::oracle);

/// ⟨u_{KN}| ln(ρ/ρ₀) |u_{KN'}⟩ from the closed form
///   diagonal:      ½ψ(N+K+2) − ½ ln α − ln ρ₀
///   off-diagonal:  −1/(2|N−N'|) · sqrt(Γ(m+K+2) n! / (m! Γ(n+K+2))),  m = min, n = max.
double log_radial_element_analytic(int K, int N, int Np, double alpha_scale, double rho0);

/// Same element by adaptive Gauss–Kronrod quadrature on [0, ∞).
double log_radial_element_quadrature(int K, int N, int Np, double alpha_scale, double rho0);

/// Analytic value, cross-checked against quadrature. Throws SolverError when the
/// two routes differ by more than `tolerance`.
double log_radial_element(int K, int N, int Np, double alpha_scale, double rho0, double tolerance = 1e-10);

/// ⟨u_{KN} | u_{K'N'}⟩, exact Gauss–Laguerre for K + K' even.
double radial_overlap(int K, int N, int Kp, int Np, double alpha_scale = 1.0);

/// Uniform interior grid ρ_i = i h, i = 1..nodes, h = rho_max / (nodes + 1), Dirichlet at both ends.
struct RadialGrid {
    int nodes = 4000;
    double rho_max = 12.0;

    /// ρ_max = 12 / sqrt(α) for α = ω̃ / 2.
    static RadialGrid for_width(double alpha_scale, int nodes = 4000);
};

struct OdeSolution {
    double chi2 = 0.0;            ///< Richardson-extrapolated lowest eigenvalue
    double chi2_fine = 0.0;       ///< raw value on the refined grid
    double chi2_coarse = 0.0;     ///< raw value on the base grid
    double energy = 0.0;          ///< χ²/2, i.e. ħω units when ω̃ = 2
    double richardson_error = 0.0;
    bool converged = false;
    std::vector<double> rho;  ///< refined grid
    std::vector<double> u;    ///< normalized, positive near the origin
};

/// Lowest eigenpair of
///   u'' + [χ² − ((K+1)² − ¼)/ρ² − ¼ω̃²ρ² − g ln(ρ/ρ₀) + c] u = 0
/// by three-point finite differences on `grid` and on the grid with halved spacing,
/// combined by Richardson extrapolation.
OdeSolution solve_diagonal_ode(int K, double omega_tilde, double log_strength, double constant, double rho0,
                               const RadialGrid& grid, double tolerance = 1e-6);

}  // namespace hfm
