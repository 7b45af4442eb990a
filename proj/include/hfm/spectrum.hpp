#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hfm/hyperangular.hpp"
#include "hfm/potential.hpp"
#include "hfm/radial.hpp"
#include "hfm/table.hpp"
#include "hfm/units.hpp"

namespace hfm {

/// ħω_eff (2n + |m| + 1) − ħω_L m
double fock_darwin(int n, int m, double hbar_omega0, double hbar_omega_L);

/// Strong-field limit of fock_darwin: ħω_L (2n + |m| − m + 1).
double landau_level(int n, int m, double hbar_omega_L);

struct QuadratureOrders {
    int n_alpha = 64;  ///< Gauss–Legendre order in α
    int n_phi = 64;    ///< uniform points per planar angle
    int n_log = 64;    ///< order of the endpoint-log rule for the pair integrals
};

struct SolverOptions {
    int k_max = 6;
    int n_max = 20;
    int L = 0;
    Symmetry symmetry = Symmetry::symmetric;
    PrefactorMode prefactor = PrefactorMode::oracle;
    /// Width parameter λ of the hyperradial functions, exp(−λρ²/2) in internal units.
    /// λ = 1 makes the noninteracting Hamiltonian diagonal; λ <= 0 picks λ by
    /// minimizing the ground energy.
    double basis_scale = 1.0;
    QuadratureOrders quadrature;

    void validate() const;
};

/// One product basis function: symmetrized angular state × hyperradial u_{K N}.
struct BasisState {
    int angular = 0;  ///< index into the CouplingDecomposition states
    int K = 0;
    int N = 0;
};

/// Field-independent radial matrices on the α = 1 internal scale.
struct RadialTables {
    int n_max = 0;
    std::map<int, Eigen::MatrixXd> log_rho;                      ///< ⟨u_{KN}| ln ρ |u_{KN'}⟩
    std::map<std::pair<int, int>, Eigen::MatrixXd> overlap;      ///< ⟨u_{KN}|u_{K'N'}⟩

    static RadialTables build(const std::vector<int>& Ks, int n_max);
};

struct Hamiltonian {
    Eigen::MatrixXd H;  ///< meV
    Eigen::MatrixXd S;  ///< Gram matrix of the product basis
    std::vector<BasisState> states;
};

/// H = H⁰ + β [A ⊗ ⟨ln(ρ/ρ₀)⟩ + B ⊗ ⟨u|u⟩]. At basis_scale 1, H⁰ = diag(E⁰_{KN}) from
/// noninteracting_energy; otherwise H⁰ is tridiagonal in N.
/// `rho0` is in internal units. Cross-K radial overlaps enter through the B term.
Hamiltonian assemble_hamiltonian(const std::vector<BasisState>& states, const CouplingDecomposition& coupling,
                                 const RadialTables& radial, const Frequencies& freq, double beta_meV,
                                 double rho0, int L, PrefactorMode prefactor, double basis_scale = 1.0);

struct EigenResult {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< columns in the original (non-orthogonal) basis
    double overlap_condition = 1.0;
    int pruned = 0;  ///< directions dropped from S
};

/// Generalized symmetric eigenproblem H c = E S c by Löwdin orthogonalization.
EigenResult solve_generalized(const Eigen::MatrixXd& H, const Eigen::MatrixXd& S, double prune = 1e-10);

/// Angular couplings and radial tables for one truncation, reusable across field values.
class RelativeProblem {
public:
    explicit RelativeProblem(const SolverOptions& options);

    const SolverOptions& options() const { return options_; }
    const std::vector<AngularBlock>& blocks() const { return blocks_; }
    const CouplingDecomposition& coupling() const { return coupling_; }
    const RadialTables& radial() const { return radial_; }
    const std::vector<BasisState>& states() const { return states_; }

    /// Basis states with K ≤ k_max (a nested subset, preserving order).
    std::vector<BasisState> states_up_to(int k_max) const;

    /// options().basis_scale if positive, else the λ minimizing the lowest level.
    double resolve_scale(const DotConfig& config) const;

    Hamiltonian assemble(const DotConfig& config) const;
    Hamiltonian assemble(const DotConfig& config, const std::vector<BasisState>& subset) const;
    Hamiltonian assemble(const DotConfig& config, const std::vector<BasisState>& subset, double basis_scale) const;

private:
    SolverOptions options_;
    std::vector<AngularBlock> blocks_;
    CouplingDecomposition coupling_;
    RadialTables radial_;
    std::vector<BasisState> states_;
};

struct GroundStateResult {
    double energy_meV = 0.0;        ///< relative motion
    double total_energy_meV = 0.0;  ///< plus the center-of-mass ground level
    Eigen::VectorXd coefficients;   ///< a_{KN}, unit norm
    std::vector<BasisState> states;
    std::vector<std::pair<int, double>> trace;  ///< (K_max', energy) for each nonempty K_max' ≤ K_max
    double overlap_condition = 1.0;
    double basis_scale = 1.0;
};

GroundStateResult ground_state(const RelativeProblem& problem, const DotConfig& config);
GroundStateResult ground_state(const DotConfig& config, const SolverOptions& options);

/// Lowest `count` relative energies (meV).
std::vector<double> lowest_levels(const RelativeProblem& problem, const DotConfig& config, int count);

enum class SweepKind { cm, relative_noninteracting, interacting };

std::string to_string(SweepKind k);
SweepKind sweep_kind_from_string(const std::string& s);

struct SweepOptions {
    SweepKind kind = SweepKind::interacting;
    int cm_n_max = 1;
    int cm_m_max = 5;
    int levels = 4;  ///< interacting levels per field point
    int threads = 1;
};

/// Evenly spaced START:STOP with `steps` points (inclusive).
std::vector<double> linspace(double start, double stop, int steps);

/// Rows in field order, then by labels. Points are solved in parallel but the
/// table does not depend on the thread count.
SpectrumTable field_sweep(const DotConfig& config, const std::vector<double>& b_values, const SolverOptions& options,
                          const SweepOptions& sweep);

}  // namespace hfm
