#pragma once

#include <array>
#include <cmath>

#include <Eigen/Core>

namespace hfm {

using Vec2 = Eigen::Vector2d;

struct Masses {
    std::array<double, 3> m{1.0, 1.0, 1.0};

    double total() const { return m[0] + m[1] + m[2]; }
    /// μ = sqrt(m₁m₂m₃ / M)
    double reduced() const { return std::sqrt(m[0] * m[1] * m[2] / total()); }
};

/// Mass-scaled Jacobi vectors of partition i = {i, (jk)} with (i, j, k) cyclic.
///
///   X_i = sqrt(m_j m_k / ((m_j + m_k) μ)) (r_j − r_k)
///   Y_i = sqrt(m_i (m_j + m_k) / (M μ)) (r_i − (m_j r_j + m_k r_k)/(m_j + m_k))
///   R   = Σ m r / sqrt(M μ)
///
/// so that Σ m r² = μ (X² + Y² + R²) in every partition.
struct JacobiVectors {
    Vec2 X = Vec2::Zero();
    Vec2 Y = Vec2::Zero();
    Vec2 R = Vec2::Zero();
    int set_index = 1;  ///< 1, 2 or 3
};

struct HyperPoint {
    double rho = 0.0;
    double alpha = 0.0;  ///< [0, π/2], |X| = ρ cos α
    double phi1 = 0.0;   ///< direction of X, [0, 2π)
    double phi2 = 0.0;   ///< direction of Y, [0, 2π)
    int set_index = 1;
    bool degenerate = false;  ///< some angle was canonicalized (ρ = 0, X = 0 or Y = 0)
};

using Positions = std::array<Vec2, 3>;

JacobiVectors to_jacobi(const Positions& r, int set_index, const Masses& masses = {});

/// Inverse of to_jacobi.
Positions from_jacobi(const JacobiVectors& v, const Masses& masses = {});

/// Angle φ_ik with X_k = X_i cos φ + Y_i sin φ, Y_k = −X_i sin φ + Y_i cos φ.
///
/// tan φ_ik = (−1)^p sqrt(m_j M / (m_i m_k)) where p is the parity of the
/// permutation (i, k, j); cos φ_ik < 0 fixes the branch. Equal masses give
/// ±2π/3, i.e. the principal arctan value ±π/3 shifted by π.
double kinematic_angle(int i, int k, const Masses& masses = {});

/// Rotates (X, Y) by φ and relabels the result as `target_set`. R is untouched.
JacobiVectors rotate_jacobi(const JacobiVectors& v, double phi, int target_set);

/// Moves v into partition `target_set` using kinematic_angle.
JacobiVectors change_set(const JacobiVectors& v, int target_set, const Masses& masses = {});

HyperPoint to_hyperspherical(const JacobiVectors& v);

/// R is set to zero.
JacobiVectors from_hyperspherical(const HyperPoint& p);

}  // namespace hfm
