#include "hfm/potential.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "hfm/quadrature.hpp"
#include "hfm/units.hpp"

namespace hfm {

namespace {

constexpr double pi = std::numbers::pi;

// Own-pair integrals over a concatenated channel list: first the plain overlap,
// then the ln cos α moment.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> own_pair_matrices(const std::vector<Channel>& channels,
                                                              int alpha_order) {
    const Eigen::Index n = static_cast<Eigen::Index>(channels.size());
    Eigen::MatrixXd overlap = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd logc = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            const PairIntegral j = pair_angular_integral(channels[a], channels[b], alpha_order);
            overlap(a, b) = overlap(b, a) = j.ln_coefficient;
            logc(a, b) = logc(b, a) = j.constant;
        }
    }
    return {overlap, logc};
}

// Block-diagonal Raynal–Revai transform set 1 → `pair` over a concatenated channel list.
Eigen::MatrixXd block_transform(const std::vector<Channel>& channels,
                                const std::map<int, Eigen::MatrixXd>& rr_by_K) {
    const Eigen::Index n = static_cast<Eigen::Index>(channels.size());
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index start = 0;
    while (start < n) {
        const int K = channels[start].K;
        Eigen::Index len = 0;
        while (start + len < n && channels[start + len].K == K) ++len;
        const Eigen::MatrixXd& m = rr_by_K.at(K);
        if (m.rows() != len) throw SolverError("channel list does not hold a complete (K, L) block");
        r.block(start, start, len, len) = m;
        start += len;
    }
    return r;
}

}  // namespace

double pair_separation_log_scale() { return 0.5 * std::log(2.0) - 0.25 * std::log(3.0); }

PairIntegral pair_angular_integral(const Channel& c, const Channel& cp, int alpha_order) {
    PairIntegral out;
    if (c.L() != cp.L()) {
        out.suppressed = true;
        return out;
    }
    // ∫dφ1 dφ2 e^{i(l1'−l1)φ1} e^{i(l2'−l2)φ2} = 4π² δ δ
    if (c.l1 != cp.l1 || c.l2 != cp.l2) return out;

    const EndpointLogRule rule = endpoint_log_rule(alpha_order);
    const double norm = normalization(c.n, c.l1, c.l2) * normalization(cp.n, cp.l1, cp.l2) * 4.0 * pi * pi;
    double overlap = 0.0;
    double logc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double a = rule.alpha[i];
        const double ca = rule.cos_alpha[i];
        const double f = jacobi_poly(c.n, c.l1, c.l2, a) * jacobi_poly(cp.n, cp.l1, cp.l2, a) * ca * std::sin(a);
        overlap += rule.weights[i] * f;
        logc += rule.weights[i] * f * std::log(ca);
    }
    out.ln_coefficient = norm * overlap;
    out.constant = norm * logc;
    return out;
}

Eigen::MatrixXd c_constant_matrix(const std::vector<Channel>& channels, int pair, const AngularGrid& grid,
                                  int alpha_order) {
    if (pair < 1 || pair > 3) throw ConfigError("pair index must be 1, 2 or 3");
    for (const Channel& c : channels)
        if (c.L() != channels.front().L()) throw ConfigError("c_constant_matrix needs channels at one L");
    const Eigen::MatrixXd own = own_pair_matrices(channels, alpha_order).second;
    if (pair == 1 || channels.empty()) return own;

    std::map<int, Eigen::MatrixXd> rr;
    for (const Channel& c : channels)
        if (!rr.count(c.K)) rr[c.K] = rr_matrix(c.K, c.L(), 1, pair, grid);
    const Eigen::MatrixXd r = block_transform(channels, rr);
    return r.transpose() * own * r;
}

Eigen::MatrixXd CouplingDecomposition::evaluate(double rho, double rho0, double beta) const {
    return beta * (A * std::log(rho / rho0) + B);
}

CouplingDecomposition assemble_coupling(const std::vector<AngularBlock>& blocks, int alpha_order) {
    std::vector<Channel> channels;
    std::map<int, Eigen::MatrixXd> rr12, rr13;
    Eigen::Index n_states = 0;
    for (const AngularBlock& b : blocks) {
        if (b.rr12.rows() != static_cast<Eigen::Index>(b.channels.size()) ||
            b.basis.coefficients.rows() != static_cast<Eigen::Index>(b.channels.size()))
            throw SolverError("assemble_coupling: block dimension mismatch at K=" + std::to_string(b.K));
        if (b.L != blocks.front().L) throw SolverError("assemble_coupling: blocks at different L");
        channels.insert(channels.end(), b.channels.begin(), b.channels.end());
        rr12[b.K] = b.rr12;
        rr13[b.K] = b.rr13;
        n_states += b.basis.size();
    }

    // U: channels × symmetrized states, block diagonal
    CouplingDecomposition out;
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(channels.size()), n_states);
    Eigen::Index row = 0, col = 0;
    for (std::size_t ib = 0; ib < blocks.size(); ++ib) {
        const auto& c = blocks[ib].basis.coefficients;
        u.block(row, col, c.rows(), c.cols()) = c;
        for (Eigen::Index s = 0; s < c.cols(); ++s) {
            out.state_K.push_back(blocks[ib].K);
            out.state_block.push_back(static_cast<int>(ib));
        }
        row += c.rows();
        col += c.cols();
    }

    const auto [overlap, own] = own_pair_matrices(channels, alpha_order);
    const std::array<Eigen::MatrixXd, 3> transforms = {
        Eigen::MatrixXd::Identity(overlap.rows(), overlap.cols()),
        block_transform(channels, rr12),
        block_transform(channels, rr13),
    };
    const double scale = pair_separation_log_scale();

    out.A = Eigen::MatrixXd::Zero(n_states, n_states);
    out.B = Eigen::MatrixXd::Zero(n_states, n_states);
    for (int p = 0; p < 3; ++p) {
        const Eigen::MatrixXd& r = transforms[p];
        const Eigen::MatrixXd ov = u.transpose() * r.transpose() * overlap * r * u;
        out.pair_B[p] = u.transpose() * r.transpose() * own * r * u + scale * ov;
        if (p == 0) out.gram = ov;
        out.A += ov;
        out.B += out.pair_B[p];
    }
    return out;
}

}  // namespace hfm
