#include "hfm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hfm/units.hpp"

namespace hfm {

namespace {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix of a three-term recurrence.
Eigen::VectorXd jacobi_matrix_nodes(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw SolverError("Golub-Welsch eigensolve failed");
    return es.eigenvalues();
}

// P_n(x) and P_n'(x)
std::pair<double, double> legendre_with_derivative(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

// L_n(x), L_{n-1}(x)
std::pair<double, double> laguerre_pair(int n, double x) {
    double l0 = 1.0, l1 = 1.0 - x;
    if (n == 0) return {l0, 0.0};
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2 * k + 1 - x) * l1 - k * l0) / (k + 1);
        l0 = l1;
        l1 = l2;
    }
    return {l1, l0};
}

void require_order(int order) {
    if (order < 1) throw ConfigError("quadrature order must be >= 1, got " + std::to_string(order));
}

}  // namespace

QuadratureRule gauss_legendre(int order, double a, double b) {
    require_order(order);
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    if (order == 1) {
        rule.nodes[0] = 0.5 * (a + b);
        rule.weights[0] = b - a;
        return rule;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd off(order - 1);
    for (int k = 1; k < order; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    const Eigen::VectorXd x0 = jacobi_matrix_nodes(diag, off);

    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < order; ++i) {
        double x = x0[i];
        for (int it = 0; it < 3; ++it) {
            const auto [p, dp] = legendre_with_derivative(order, x);
            x -= p / dp;
        }
        const auto [p, dp] = legendre_with_derivative(order, x);
        (void)p;
        rule.nodes[i] = mid + half * x;
        rule.weights[i] = half * 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

QuadratureRule gauss_laguerre(int order) {
    require_order(order);
    Eigen::VectorXd diag(order);
    Eigen::VectorXd off(std::max(order - 1, 0));
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k) off[k - 1] = k;
    const Eigen::VectorXd x0 = jacobi_matrix_nodes(diag, off);

    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = x0[i];
        for (int it = 0; it < 3; ++it) {
            const auto [ln, lnm1] = laguerre_pair(order, x);
            const double dl = order * (ln - lnm1) / x;
            x -= ln / dl;
        }
        // w = x / ((n+1)² L_{n+1}(x)²)
        const auto [lnp1, ln] = laguerre_pair(order + 1, x);
        (void)ln;
        rule.nodes[i] = x;
        rule.weights[i] = x / ((order + 1.0) * (order + 1.0) * lnp1 * lnp1);
    }
    return rule;
}

EndpointLogRule endpoint_log_rule(int order) {
    const QuadratureRule gl = gauss_legendre(order, 0.0, 1.0);
    constexpr double half_pi = 0.5 * std::numbers::pi;
    EndpointLogRule rule;
    rule.alpha.resize(order);
    rule.cos_alpha.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double t = gl.nodes[i];
        const double t3 = t * t * t;
        const double theta = half_pi * t3 * t;  // π/2 − α
        rule.alpha[i] = half_pi - theta;
        rule.cos_alpha[i] = std::sin(theta);
        rule.weights[i] = gl.weights[i] * half_pi * 4.0 * t3;
    }
    return rule;
}

}  // namespace hfm
