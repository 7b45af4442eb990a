#include "hfm/hyperangular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hfm/jacobi.hpp"
#include "hfm/units.hpp"

namespace hfm {

namespace {

constexpr double pi = std::numbers::pi;

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

cplx ipow(cplx z, int p) {
    cplx r = 1.0;
    for (int i = 0; i < p; ++i) r *= z;
    return r;
}

// Precomputed form of one channel: N and the coefficients of c2^m s2^{n−m}.
struct HarmonicTerms {
    Channel channel;
    double norm = 0.0;
    std::vector<double> coeff;

    explicit HarmonicTerms(const Channel& c) : channel(c), norm(normalization(c.n, c.l1, c.l2)) {
        const int a1 = std::abs(c.l1);
        const int a2 = std::abs(c.l2);
        for (int m = 0; m <= c.n; ++m) {
            const double sign = ((c.n - m) % 2 == 0) ? 1.0 : -1.0;
            coeff.push_back(sign * binom(c.n + a2, m) * binom(c.n + a1, c.n - m));
        }
    }

    // Σ_m coeff_m c2^m s2^{n−m}
    double radial_sum(double c2, double s2) const {
        double sum = 0.0;
        double cp = 1.0;
        for (int m = 0; m <= channel.n; ++m) {
            sum += coeff[m] * cp * ipow(s2, channel.n - m);
            cp *= c2;
        }
        return sum;
    }

    cplx eval_z(cplx z1, cplx z2) const;
};

cplx planar_factor(cplx z, int l) {
    return l >= 0 ? ipow(z, l) : ipow(std::conj(z), -l);
}

cplx HarmonicTerms::eval_z(cplx z1, cplx z2) const {
    return norm * radial_sum(std::norm(z1), std::norm(z2)) * planar_factor(z1, channel.l1) *
           planar_factor(z2, channel.l2);
}

}  // namespace

bool Channel::valid() const {
    return n >= 0 && K == 2 * n + std::abs(l1) + std::abs(l2);
}

std::string to_string(const Channel& c) {
    return "(K=" + std::to_string(c.K) + ",l1=" + std::to_string(c.l1) + ",l2=" + std::to_string(c.l2) +
           ",n=" + std::to_string(c.n) + ")";
}

Channel make_channel(int n, int l1, int l2) {
    if (n < 0) throw ConfigError("nodal index must be non-negative");
    return Channel{2 * n + std::abs(l1) + std::abs(l2), l1, l2, n};
}

double jacobi_poly(int n, int l1, int l2, double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const int a1 = std::abs(l1);
    const int a2 = std::abs(l2);
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double sign = ((n - m) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom(n + a2, m) * binom(n + a1, n - m) * ipow(c, 2 * m + a1) *
               ipow(s, 2 * (n - m) + a2);
    }
    return sum;
}

double normalization(int n, int l1, int l2) {
    const int a1 = std::abs(l1);
    const int a2 = std::abs(l2);
    const int K = 2 * n + a1 + a2;
    const double log_ratio = std::lgamma(n + 1.0) + std::lgamma(n + a1 + a2 + 1.0) -
                             std::lgamma(n + a1 + 1.0) - std::lgamma(n + a2 + 1.0);
    return std::sqrt((K + 1.0) * std::exp(log_ratio) / (2.0 * pi * pi));
}

cplx eval_harmonic(const Channel& c, double alpha, double phi1, double phi2) {
    const double p = normalization(c.n, c.l1, c.l2) * jacobi_poly(c.n, c.l1, c.l2, alpha);
    return p * std::polar(1.0, c.l1 * phi1 + c.l2 * phi2);
}

cplx eval_harmonic_z(const Channel& c, cplx z1, cplx z2) { return HarmonicTerms(c).eval_z(z1, z2); }

std::vector<Channel> enumerate_channels(int k_max, int L, Parity parity) {
    std::vector<Channel> out;
    for (int K = 0; K <= k_max; ++K) {
        for (const Channel& c : channels_at(K, L)) {
            const bool even = (c.l1 % 2 == 0);
            if (parity == Parity::even && !even) continue;
            if (parity == Parity::odd && even) continue;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<Channel> channels_at(int K, int L) {
    std::vector<Channel> out;
    if (K < 0) return out;
    for (int l1 = -K; l1 <= K; ++l1) {
        const int l2 = L - l1;
        const int rest = K - std::abs(l1) - std::abs(l2);
        if (rest < 0 || rest % 2 != 0) continue;
        out.push_back(Channel{K, l1, l2, rest / 2});
    }
    return out;
}

AngularGrid::AngularGrid(int n_alpha, int n_phi) : n_phi_(n_phi) {
    if (n_phi < 1) throw ConfigError("phi quadrature order must be >= 1");
    const QuadratureRule rule = gauss_legendre(n_alpha, 0.0, 0.5 * pi);
    alpha_ = rule.nodes;
    alpha_w_.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        alpha_w_[i] = rule.weights[i] * std::cos(alpha_[i]) * std::sin(alpha_[i]);
}

double AngularGrid::phi(int ip) const { return 2.0 * pi * ip / n_phi_; }

double AngularGrid::phi_weight() const { return 2.0 * pi / n_phi_; }

AngularGrid::Point AngularGrid::point(std::size_t idx) const {
    const std::size_t np = static_cast<std::size_t>(n_phi_);
    const int i2 = static_cast<int>(idx % np);
    const int i1 = static_cast<int>((idx / np) % np);
    const int ia = static_cast<int>(idx / (np * np));
    const double pw = phi_weight();
    return {alpha_[ia], phi(i1), phi(i2), alpha_w_[ia] * pw * pw};
}

double AngularGrid::total_weight() const {
    double s = 0.0;
    for (double w : alpha_w_) s += w;
    return s * 4.0 * pi * pi;
}

Eigen::MatrixXcd sample_channels(const std::vector<Channel>& channels, const AngularGrid& grid) {
    const int na = grid.n_alpha();
    const int np = grid.n_phi();
    const Eigen::Index nc = static_cast<Eigen::Index>(channels.size());
    Eigen::MatrixXcd values(static_cast<Eigen::Index>(grid.size()), nc);

    // Separable: N P(α) e^{i l1 φ1} e^{i l2 φ2}
    for (Eigen::Index j = 0; j < nc; ++j) {
        const Channel& c = channels[j];
        const double norm = normalization(c.n, c.l1, c.l2);
        std::vector<cplx> e1(np), e2(np);
        for (int ip = 0; ip < np; ++ip) {
            e1[ip] = std::polar(1.0, c.l1 * grid.phi(ip));
            e2[ip] = std::polar(1.0, c.l2 * grid.phi(ip));
        }
        Eigen::Index row = 0;
        for (int ia = 0; ia < na; ++ia) {
            const double p = norm * jacobi_poly(c.n, c.l1, c.l2, grid.alpha(ia));
            for (int i1 = 0; i1 < np; ++i1) {
                const cplx a = p * e1[i1];
                for (int i2 = 0; i2 < np; ++i2) values(row++, j) = a * e2[i2];
            }
        }
    }
    return values;
}

namespace {

Eigen::VectorXd grid_weights(const AngularGrid& grid) {
    Eigen::VectorXd w(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) w[static_cast<Eigen::Index>(i)] = grid.point(i).weight;
    return w;
}

}  // namespace

Eigen::MatrixXcd gram_matrix(const std::vector<Channel>& channels, const AngularGrid& grid) {
    const Eigen::MatrixXcd values = sample_channels(channels, grid);
    const Eigen::VectorXd w = grid_weights(grid);
    return values.adjoint() * (w.asDiagonal() * values);
}

GrandAngularCheck grand_angular_apply(const Channel& c, const AngularGrid& grid, double step, double tolerance) {
    if (!c.valid()) throw ConfigError("invalid channel " + to_string(c));
    const double h = step;
    // fourth-order central stencils
    auto d1 = [h](auto&& f) { return (f(-2) - 8.0 * f(-1) + 8.0 * f(1) - f(2)) / (12.0 * h); };
    auto d2 = [h](auto&& f) {
        return (-f(-2) + 16.0 * f(-1) - 30.0 * f(0) + 16.0 * f(1) - f(2)) / (12.0 * h * h);
    };

    const HarmonicTerms terms(c);
    auto eval = [&terms](double a, double p1, double p2) {
        return terms.eval_z(std::polar(1.0, p1) * std::cos(a), std::polar(1.0, p2) * std::sin(a));
    };
    cplx numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const auto pt = grid.point(idx);
        const double a = pt.alpha;
        auto fa = [&](int k) { return eval(a + k * h, pt.phi1, pt.phi2); };
        auto f1 = [&](int k) { return eval(a, pt.phi1 + k * h, pt.phi2); };
        auto f2 = [&](int k) { return eval(a, pt.phi1, pt.phi2 + k * h); };
        const double ca = std::cos(a);
        const double sa = std::sin(a);
        const cplx lap = d2(fa) + (ca / sa - sa / ca) * d1(fa) + d2(f1) / (ca * ca) + d2(f2) / (sa * sa);
        const cplx value = fa(0);
        numerator += pt.weight * std::conj(value) * (-lap);
        denominator += pt.weight * std::norm(value);
    }

    GrandAngularCheck out;
    out.rayleigh_quotient = numerator.real() / denominator;
    out.expected = c.K * (c.K + 2.0);
    const double scale = out.expected == 0.0 ? 1.0 : out.expected;
    out.rel_error = std::abs(out.rayleigh_quotient - out.expected) / scale;
    out.ok = out.rel_error <= tolerance;
    return out;
}

Eigen::MatrixXd rr_matrix(int K, int L, int from_set, int to_set, const AngularGrid& grid) {
    const std::vector<Channel> channels = channels_at(K, L);
    const Eigen::Index nc = static_cast<Eigen::Index>(channels.size());
    if (nc == 0) return Eigen::MatrixXd(0, 0);
    if (from_set == to_set) return Eigen::MatrixXd::Identity(nc, nc);

    const Eigen::MatrixXcd target = sample_channels(channels, grid);
    Eigen::MatrixXcd source(target.rows(), nc);
    std::vector<HarmonicTerms> terms(channels.begin(), channels.end());
    const double phi = kinematic_angle(to_set, from_set);
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const auto pt = grid.point(idx);
        const cplx x = std::polar(std::cos(pt.alpha), pt.phi1);
        const cplx y = std::polar(std::sin(pt.alpha), pt.phi2);
        // kinematic rotation acts componentwise, so it can be applied to the complex planar form
        const cplx xf = cphi * x + sphi * y;
        const cplx yf = -sphi * x + cphi * y;
        for (Eigen::Index j = 0; j < nc; ++j)
            source(static_cast<Eigen::Index>(idx), j) = terms[j].eval_z(xf, yf);
    }
    const Eigen::VectorXd w = grid_weights(grid);
    const Eigen::MatrixXcd m = target.adjoint() * (w.asDiagonal() * source);
    const double imag = m.imag().cwiseAbs().maxCoeff();
    if (imag > 1e-9)
        throw SolverError("Raynal-Revai block has imaginary residue " + std::to_string(imag));
    return m.real();
}

double unitarity_defect(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    return (m.transpose() * m - Eigen::MatrixXd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::symmetric: return "symmetric";
        case Symmetry::mixed: return "mixed";
        case Symmetry::antisymmetric: return "antisymmetric";
    }
    return "?";
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "symmetric" || s == "[3]") return Symmetry::symmetric;
    if (s == "mixed" || s == "[2,1]") return Symmetry::mixed;
    if (s == "antisymmetric" || s == "[1,1,1]") return Symmetry::antisymmetric;
    throw ConfigError("unknown symmetry sector '" + s + "'");
}

Symmetry spatial_symmetry_for_spin(double total_spin) {
    if (total_spin == 0.5) return Symmetry::mixed;
    if (total_spin == 1.5) return Symmetry::antisymmetric;
    throw ConfigError("three electrons have total spin 1/2 or 3/2");
}

PermutationMatrices permutation_matrices(const Eigen::MatrixXd& rr12, const Eigen::MatrixXd& rr13,
                                         const std::vector<Channel>& channels) {
    const Eigen::Index nc = static_cast<Eigen::Index>(channels.size());
    if (rr12.rows() != nc || rr13.rows() != nc)
        throw SolverError("permutation_matrices: RR block does not match the channel list");
    Eigen::VectorXd phase(nc);
    for (Eigen::Index j = 0; j < nc; ++j) phase[j] = (channels[j].l1 % 2 == 0) ? 1.0 : -1.0;
    const auto d = phase.asDiagonal();

    PermutationMatrices p;
    p.p23 = Eigen::MatrixXd(d);
    p.p13 = rr12.transpose() * d * rr12;
    p.p12 = rr13.transpose() * d * rr13;
    p.cycle = p.p12 * p.p23;
    p.cycle_inverse = p.p23 * p.p12;
    return p;
}

Eigen::MatrixXd young_projector(Symmetry s, const PermutationMatrices& p) {
    const Eigen::Index n = p.p23.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd cycles = id + p.cycle + p.cycle_inverse;
    const Eigen::MatrixXd swaps = p.p12 + p.p13 + p.p23;
    const Eigen::MatrixXd sym = (cycles + swaps) / 6.0;
    const Eigen::MatrixXd anti = (cycles - swaps) / 6.0;
    switch (s) {
        case Symmetry::symmetric: return sym;
        case Symmetry::antisymmetric: return anti;
        case Symmetry::mixed: return id - sym - anti;
    }
    return id;
}

SymmetrizedBasis symmetrize(Symmetry s, const PermutationMatrices& p, const std::vector<Channel>& channels,
                            int K, int L) {
    SymmetrizedBasis basis;
    basis.symmetry = s;
    basis.K = K;
    basis.L = L;
    basis.channels = channels;
    const Eigen::Index n = static_cast<Eigen::Index>(channels.size());
    if (n == 0) {
        basis.coefficients = Eigen::MatrixXd(0, 0);
        return basis;
    }

    Eigen::MatrixXd q = young_projector(s, p);
    if (s == Symmetry::mixed) q = q * (Eigen::MatrixXd::Identity(n, n) + p.p23) * 0.5;
    q = 0.5 * (q + q.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    if (es.info() != Eigen::Success) throw SolverError("symmetrize: eigensolve failed");
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = n - 1; i >= 0; --i)
        if (es.eigenvalues()[i] > 0.5) keep.push_back(i);

    basis.coefficients.resize(n, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t col = 0; col < keep.size(); ++col) {
        Eigen::VectorXd v = es.eigenvectors().col(keep[col]);
        Eigen::Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        if (v[imax] < 0) v = -v;
        basis.coefficients.col(static_cast<Eigen::Index>(col)) = v;
    }
    return basis;
}

AngularBlock build_angular_block(int K, int L, Symmetry s, const AngularGrid& grid) {
    AngularBlock b;
    b.K = K;
    b.L = L;
    b.channels = channels_at(K, L);
    b.rr12 = rr_matrix(K, L, 1, 2, grid);
    b.rr13 = rr_matrix(K, L, 1, 3, grid);
    b.perms = permutation_matrices(b.rr12, b.rr13, b.channels);
    b.basis = symmetrize(s, b.perms, b.channels, K, L);
    return b;
}

std::vector<AngularBlock> build_angular_blocks(int k_max, int L, Symmetry s, const AngularGrid& grid) {
    std::vector<AngularBlock> blocks;
    for (int K = std::abs(L); K <= k_max; K += 2) blocks.push_back(build_angular_block(K, L, s, grid));
    return blocks;
}

}  // namespace hfm
