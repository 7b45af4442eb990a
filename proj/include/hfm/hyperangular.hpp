#pragma once

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hfm/quadrature.hpp"

namespace hfm {

using cplx = std::complex<double>;

/// One hyperspherical harmonic on S³: grand angular momentum K, planar
/// momenta l1 (of X) and l2 (of Y), nodal index n, with K = 2n + |l1| + |l2|.
struct Channel {
    int K = 0;
    int l1 = 0;
    int l2 = 0;
    int n = 0;

    int L() const { return l1 + l2; }
    bool valid() const;

    auto operator<=>(const Channel&) const = default;
};

std::string to_string(const Channel& c);

/// Channel from (n, l1, l2); K is derived.
Channel make_channel(int n, int l1, int l2);

/// The finite sum
///   Σ_{m=0}^{n} (−1)^{n−m} C(n+|l2|, m) C(n+|l1|, n−m) cos^{2m+|l1|}α sin^{2(n−m)+|l2|}α.
/// Integer powers keep it analytic for α slightly outside [0, π/2].
double jacobi_poly(int n, int l1, int l2, double alpha);

/// sqrt((K+1) n! (n+|l1|+|l2|)! / (2π² (n+|l1|)! (n+|l2|)!))
double normalization(int n, int l1, int l2);

cplx eval_harmonic(const Channel& c, double alpha, double phi1, double phi2);

/// Evaluates the harmonic at the unit 4-vector given as complex planar
/// coordinates z1 = cos α e^{iφ1}, z2 = sin α e^{iφ2}.
cplx eval_harmonic_z(const Channel& c, cplx z1, cplx z2);

/// Restriction on l1 parity, i.e. on the (−1)^{l1} phase of X → −X.
enum class Parity { any, even, odd };

/// Every channel with K ≤ k_max and l1 + l2 = L, ordered by K, then l1, then l2.
std::vector<Channel> enumerate_channels(int k_max, int L, Parity parity = Parity::any);

/// Channels of one (K, L) block in the same order.
std::vector<Channel> channels_at(int K, int L);

/// Product grid: Gauss–Legendre in α on [0, π/2] times uniform φ1, φ2 on [0, 2π).
/// The weight of each point includes the measure cos α sin α, so the weights sum to 2π².
class AngularGrid {
public:
    AngularGrid(int n_alpha = 64, int n_phi = 64);

    int n_alpha() const { return static_cast<int>(alpha_.size()); }
    int n_phi() const { return n_phi_; }
    std::size_t size() const { return alpha_.size() * n_phi_ * n_phi_; }

    double alpha(int ia) const { return alpha_[ia]; }
    /// w_α cos α sin α
    double alpha_weight(int ia) const { return alpha_w_[ia]; }
    double phi(int ip) const;
    double phi_weight() const;

    struct Point {
        double alpha, phi1, phi2, weight;
    };
    /// Flat index ordering: α slowest, then φ1, then φ2.
    Point point(std::size_t idx) const;

    double total_weight() const;

private:
    std::vector<double> alpha_;
    std::vector<double> alpha_w_;
    int n_phi_;
};

/// Harmonic values at every grid point (rows) for each channel (columns).
Eigen::MatrixXcd sample_channels(const std::vector<Channel>& channels, const AngularGrid& grid);

/// ∫ Φ*_a Φ_b dΩ by quadrature.
Eigen::MatrixXcd gram_matrix(const std::vector<Channel>& channels, const AngularGrid& grid);

struct GrandAngularCheck {
    double rayleigh_quotient = 0.0;  ///< ⟨Φ| −Δ_S³ |Φ⟩ / ⟨Φ|Φ⟩
    double expected = 0.0;           ///< K(K+2)
    double rel_error = 0.0;          ///< relative, or absolute when expected == 0
    bool ok = false;
};

/// Applies the S³ Laplace–Beltrami operator
///   ∂²_α + (cot α − tan α) ∂_α + ∂²_{φ1}/cos²α + ∂²_{φ2}/sin²α
/// by fourth-order central differences at each grid point and reports the Rayleigh quotient.
GrandAngularCheck grand_angular_apply(const Channel& c, const AngularGrid& grid,
                                      double step = 1e-3, double tolerance = 1e-6);

/// Raynal–Revai block at (K, L): column c holds the expansion of the set-`from_set`
/// harmonic c in set-`to_set` harmonics, M[c̃, c] = ⟨Φ^{to}_c̃ | Φ^{from}_c⟩.
/// Real by mirror symmetry; throws SolverError if the imaginary residue exceeds 1e-9.
Eigen::MatrixXd rr_matrix(int K, int L, int from_set, int to_set, const AngularGrid& grid);

/// max |M^T M − I|
double unitarity_defect(const Eigen::MatrixXd& m);

enum class Symmetry { symmetric, mixed, antisymmetric };

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);

/// Spatial symmetry paired with total spin S for three electrons: S = 1/2 → [2,1], S = 3/2 → [1³].
Symmetry spatial_symmetry_for_spin(double total_spin);

/// Permutation operators of S₃ represented on the set-1 channels of one (K, L) block.
/// Column c is the image of channel c.
struct PermutationMatrices {
    Eigen::MatrixXd p12, p13, p23;
    Eigen::MatrixXd cycle, cycle_inverse;  ///< p12·p23 and p23·p12
};

/// Pair exchange (jk) is diagonal in set-i channels with phase (−1)^{l1};
/// the other sets are reached through the RR blocks.
PermutationMatrices permutation_matrices(const Eigen::MatrixXd& rr12, const Eigen::MatrixXd& rr13,
                                         const std::vector<Channel>& channels);

/// Young projector. For the mixed symmetry this is the isotypic projector
/// (both rows of [2,1]).
Eigen::MatrixXd young_projector(Symmetry s, const PermutationMatrices& p);

/// Orthonormal symmetry-adapted combinations of the set-1 channels of one (K, L) block.
/// For [2,1] only the row even under the (23) exchange is kept, one state per multiplet.
struct SymmetrizedBasis {
    Symmetry symmetry = Symmetry::symmetric;
    int K = 0;
    int L = 0;
    std::vector<Channel> channels;
    Eigen::MatrixXd coefficients;  ///< channels × states, orthonormal columns

    int size() const { return static_cast<int>(coefficients.cols()); }
};

SymmetrizedBasis symmetrize(Symmetry s, const PermutationMatrices& p, const std::vector<Channel>& channels,
                            int K, int L);

/// Everything the coupling assembly needs about one (K, L) block.
struct AngularBlock {
    int K = 0;
    int L = 0;
    std::vector<Channel> channels;
    Eigen::MatrixXd rr12;  ///< set 1 → set 2
    Eigen::MatrixXd rr13;  ///< set 1 → set 3
    PermutationMatrices perms;
    SymmetrizedBasis basis;
};

AngularBlock build_angular_block(int K, int L, Symmetry s, const AngularGrid& grid);

/// Blocks for K = |L|, |L|+2, ..., ≤ k_max.
std::vector<AngularBlock> build_angular_blocks(int k_max, int L, Symmetry s, const AngularGrid& grid);

}  // namespace hfm
