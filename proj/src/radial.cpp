#include "hfm/radial.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <lapacke.h>

#include "hfm/quadrature.hpp"
#include "hfm/units.hpp"

namespace hfm {

namespace {

double basis_norm(int K, int N, double alpha) {
    // c² = 2 α^{K+2} N! / Γ(N+K+2)
    return std::sqrt(2.0 * std::exp((K + 2.0) * std::log(alpha) + std::lgamma(N + 1.0) - std::lgamma(N + K + 2.0)));
}

void require_index(int K, int N) {
    if (K < 0 || N < 0) throw ConfigError("radial indices must be non-negative");
}

}  // namespace

double radial_basis(const RadialBasisIndex& idx, double rho) {
    require_index(idx.K, idx.N);
    if (!(idx.alpha_scale > 0)) throw ConfigError("alpha_scale must be positive");
    if (rho <= 0.0) return 0.0;
    const double t = idx.alpha_scale * rho * rho;
    return basis_norm(idx.K, idx.N, idx.alpha_scale) * std::pow(rho, idx.K + 1.5) * std::exp(-0.5 * t) *
           std::assoc_laguerre(static_cast<unsigned>(idx.N), static_cast<unsigned>(idx.K + 1), t);
}

std::string to_string(PrefactorMode m) { return m == PrefactorMode::paper ? "paper" : "oracle"; }

PrefactorMode prefactor_from_string(const std::string& s) {
    if (s == "paper") return PrefactorMode::paper;
    if (s == "oracle" || s == "oracle-consistent") return PrefactorMode::oracle;
    throw ConfigError("prefactor mode must be 'paper' or 'oracle', got '" + s + "'");
}

double energy_prefactor(PrefactorMode m) {
    return m == PrefactorMode::paper ? std::sqrt(2.0 / 3.0) : oracle_prefactor;
}

double noninteracting_energy(int N, int K, int Lz, double hbar_omega, double hbar_omega_L, PrefactorMode mode) {
    require_index(K, N);
    return energy_prefactor(mode) * hbar_omega * (2.0 * N + K + 2.0) - hbar_omega_L * Lz;
}

double log_radial_element_analytic(int K, int N, int Np, double alpha_scale, double rho0) {
    require_index(K, N);
    require_index(K, Np);
    const double a = K + 1.0;
    if (N == Np) return 0.5 * boost::math::digamma(N + a + 1.0) - 0.5 * std::log(alpha_scale) - std::log(rho0);
    const int m = std::min(N, Np);
    const int n = std::max(N, Np);
    const double log_ratio = std::lgamma(m + a + 1.0) + std::lgamma(n + 1.0) - std::lgamma(m + 1.0) -
                             std::lgamma(n + a + 1.0);
    return -0.5 / (n - m) * std::exp(0.5 * log_ratio);
}

double log_radial_element_quadrature(int K, int N, int Np, double alpha_scale, double rho0) {
    const RadialBasisIndex bra{K, N, alpha_scale};
    const RadialBasisIndex ket{K, Np, alpha_scale};
    auto f = [&](double rho) {
        if (rho <= 0.0) return 0.0;
        return radial_basis(bra, rho) * radial_basis(ket, rho) * std::log(rho / rho0);
    };
    // split at the basis scale so the oscillatory bulk sits on a finite interval
    const double mid = 4.0 * std::sqrt((N + Np + K + 4.0) / alpha_scale);
    using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double inner = gk::integrate(f, 0.0, mid, 12, 1e-13);
    const double outer = gk::integrate(f, mid, std::numeric_limits<double>::infinity(), 12, 1e-13);
    return inner + outer;
}

double log_radial_element(int K, int N, int Np, double alpha_scale, double rho0, double tolerance) {
    const double analytic = log_radial_element_analytic(K, N, Np, alpha_scale, rho0);
    const double quad = log_radial_element_quadrature(K, N, Np, alpha_scale, rho0);
    if (std::abs(analytic - quad) > tolerance)
        throw SolverError("log radial element K=" + std::to_string(K) + " N=" + std::to_string(N) +
                          " N'=" + std::to_string(Np) + ": analytic " + std::to_string(analytic) +
                          " vs quadrature " + std::to_string(quad));
    return analytic;
}

double radial_overlap(int K, int N, int Kp, int Np, double alpha_scale) {
    require_index(K, N);
    require_index(Kp, Np);
    if ((K + Kp) % 2 != 0) {
        using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
        auto f = [&](double rho) {
            return radial_basis({K, N, alpha_scale}, rho) * radial_basis({Kp, Np, alpha_scale}, rho);
        };
        return gk::integrate(f, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-13);
    }
    // t = αρ²: sqrt(N! N'! / (Γ(N+K+2) Γ(N'+K'+2))) ∫ t^{(K+K')/2+1} e^{−t} L_N^{K+1} L_{N'}^{K'+1} dt
    const int p = (K + Kp) / 2 + 1;
    const int degree = p + N + Np;
    const QuadratureRule rule = gauss_laguerre(degree / 2 + 2);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        s += rule.weights[i] * std::pow(t, p) *
             std::assoc_laguerre(static_cast<unsigned>(N), static_cast<unsigned>(K + 1), t) *
             std::assoc_laguerre(static_cast<unsigned>(Np), static_cast<unsigned>(Kp + 1), t);
    }
    const double log_pref = 0.5 * (std::lgamma(N + 1.0) + std::lgamma(Np + 1.0) - std::lgamma(N + K + 2.0) -
                                   std::lgamma(Np + Kp + 2.0));
    return std::exp(log_pref) * s;
}

RadialGrid RadialGrid::for_width(double alpha_scale, int nodes) {
    return RadialGrid{nodes, 12.0 / std::sqrt(alpha_scale)};
}

namespace {

struct FdResult {
    double chi2;
    std::vector<double> rho, u;
};

FdResult lowest_fd_state(int K, double omega_tilde, double g, double c, double rho0, int nodes, double rho_max) {
    const double h = rho_max / (nodes + 1);
    const double centrifugal = (K + 1.0) * (K + 1.0) - 0.25;
    std::vector<double> d(nodes), e(std::max(nodes - 1, 1), -1.0 / (h * h)), rho(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double r = (i + 1) * h;
        rho[i] = r;
        d[i] = 2.0 / (h * h) + centrifugal / (r * r) + 0.25 * omega_tilde * omega_tilde * r * r +
               g * std::log(r / rho0) - c;
    }
    lapack_int m = 0;
    std::vector<double> w(nodes), z(nodes);
    std::vector<lapack_int> isuppz(2);
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', nodes, d.data(), e.data(), 0.0, 0.0, 1, 1,
                                           0.0, &m, w.data(), z.data(), nodes, isuppz.data());
    if (info != 0 || m != 1) throw SolverError("tridiagonal eigensolve failed, info=" + std::to_string(info));

    double norm = 0.0;
    for (double v : z) norm += v * v;
    norm = std::sqrt(norm * h);
    const double sign = z[0] < 0 ? -1.0 : 1.0;
    for (double& v : z) v *= sign / norm;
    return {w[0], std::move(rho), std::move(z)};
}

}  // namespace

OdeSolution solve_diagonal_ode(int K, double omega_tilde, double log_strength, double constant, double rho0,
                               const RadialGrid& grid, double tolerance) {
    if (K < 0) throw ConfigError("K must be non-negative");
    if (!(omega_tilde > 0) || !(rho0 > 0)) throw ConfigError("omega_tilde and rho0 must be positive");
    if (grid.nodes < 16 || !(grid.rho_max > 0)) throw ConfigError("radial grid too small");
    const double width = std::sqrt(2.0 / omega_tilde);
    if (grid.rho_max < 6.0 * width)
        throw ConfigError("rho_max does not cover the Gaussian tail of the oscillator ground state");

    const FdResult coarse = lowest_fd_state(K, omega_tilde, log_strength, constant, rho0, grid.nodes, grid.rho_max);
    // halving h on [0, rho_max]: (nodes+1) intervals become 2(nodes+1)
    FdResult fine = lowest_fd_state(K, omega_tilde, log_strength, constant, rho0, 2 * grid.nodes + 1, grid.rho_max);

    OdeSolution out;
    out.chi2_coarse = coarse.chi2;
    out.chi2_fine = fine.chi2;
    out.chi2 = (4.0 * fine.chi2 - coarse.chi2) / 3.0;
    out.energy = 0.5 * out.chi2;
    out.richardson_error = std::abs(out.chi2 - fine.chi2);
    out.converged = out.richardson_error <= tolerance * std::max(1.0, std::abs(out.chi2));
    out.rho = std::move(fine.rho);
    out.u = std::move(fine.u);
    return out;
}

}  // namespace hfm
