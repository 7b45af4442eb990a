#pragma once

#include <vector>

namespace hfm {

/// Nodes and weights of a one-dimensional rule, sum_i w_i f(x_i).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Gauss–Legendre rule on [a, b], built by Golub–Welsch and polished with Newton steps.
QuadratureRule gauss_legendre(int order, double a = -1.0, double b = 1.0);

/// Gauss–Laguerre rule for ∫₀^∞ e^{−x} f(x) dx.
QuadratureRule gauss_laguerre(int order);

/// Rule for ∫₀^{π/2} g(α) dα where g carries an integrable (cos α) ln(cos α) endpoint
/// singularity at α = π/2. Gauss–Legendre after the substitution π/2 − α = (π/2) t⁴.
/// `cos_alpha` holds cos α evaluated without cancellation near π/2.
struct EndpointLogRule {
    std::vector<double> alpha;
    std::vector<double> cos_alpha;
    std::vector<double> weights;

    std::size_t size() const { return alpha.size(); }
};

EndpointLogRule endpoint_log_rule(int order);

}  // namespace hfm
