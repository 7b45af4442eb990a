#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "hfm/hyperangular.hpp"

namespace hfm {

/// ln of the factor converting |X_i| (mass-scaled) into the pair separation |r_jk|
/// for three equal masses: |r_jk| = sqrt(2) 3^{-1/4} |X_i|.
double pair_separation_log_scale();

/// J = ln_coefficient · ln(ρ/ρ₀) + constant for the pair whose separation is
/// ∝ ρ cos α in the channels' own Jacobi set.
struct PairIntegral {
    double ln_coefficient = 0.0;
    double constant = 0.0;
    bool suppressed = false;  ///< L mismatch, element vanishes by rotation invariance
};

/// ⟨c | ln(ρ cos α / ρ₀) | c′⟩ over S³. The φ integrals are done exactly, the α
/// integral with endpoint_log_rule(alpha_order).
PairIntegral pair_angular_integral(const Channel& c, const Channel& cp, int alpha_order = 64);

/// ⟨c | ln cos α_pair | c′⟩ on set-1 channels, where `pair` ∈ {1, 2, 3} names the
/// Jacobi set whose X vector is that pair. Pairs 2 and 3 go through the RR blocks,
/// so `channels` must contain complete (K, L) blocks at a single L.
Eigen::MatrixXd c_constant_matrix(const std::vector<Channel>& channels, int pair, const AngularGrid& grid,
                                  int alpha_order = 64);

/// W(ρ) = β [A ln(ρ/ρ₀) + B] on the symmetrized states of a set of angular blocks.
struct CouplingDecomposition {
    Eigen::MatrixXd A;  ///< dimensionless, diagonal
    Eigen::MatrixXd B;  ///< in units of β, includes pair_separation_log_scale()
    std::array<Eigen::MatrixXd, 3> pair_B;  ///< single-pair contributions to B
    Eigen::MatrixXd gram;                   ///< angular overlap of the states (≈ I)
    std::vector<int> state_K;               ///< grand angular momentum of each state
    std::vector<int> state_block;           ///< index of the owning AngularBlock

    Eigen::Index size() const { return A.rows(); }

    Eigen::MatrixXd evaluate(double rho, double rho0, double beta) const;
};

CouplingDecomposition assemble_coupling(const std::vector<AngularBlock>& blocks, int alpha_order = 64);

}  // namespace hfm
