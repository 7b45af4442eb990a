#include "hfm/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/Eigenvalues>
#include <boost/math/tools/minima.hpp>

namespace hfm {

double fock_darwin(int n, int m, double hbar_omega0, double hbar_omega_L) {
    if (n < 0) throw ConfigError("Fock-Darwin radial index must be non-negative");
    return effective_frequency(hbar_omega0, hbar_omega_L) * (2.0 * n + std::abs(m) + 1.0) - hbar_omega_L * m;
}

double landau_level(int n, int m, double hbar_omega_L) {
    return hbar_omega_L * (2.0 * n + std::abs(m) - m + 1.0);
}

void SolverOptions::validate() const {
    if (k_max < 0) throw ConfigError("k_max must be non-negative");
    if (n_max < 0) throw ConfigError("n_max must be non-negative");
    if (std::abs(L) > k_max) throw ConfigError("|L| must not exceed k_max");
    if (quadrature.n_alpha < 1 || quadrature.n_phi < 1 || quadrature.n_log < 1)
        throw ConfigError("quadrature orders must be positive");
    if (!std::isfinite(basis_scale)) throw ConfigError("basis_scale must be finite");
}

RadialTables RadialTables::build(const std::vector<int>& Ks, int n_max) {
    RadialTables t;
    t.n_max = n_max;
    const Eigen::Index n = n_max + 1;
    for (int K : Ks) {
        if (t.log_rho.count(K)) continue;
        Eigen::MatrixXd m(n, n);
        for (int a = 0; a <= n_max; ++a)
            for (int b = a; b <= n_max; ++b) m(a, b) = m(b, a) = log_radial_element_analytic(K, a, b, 1.0, 1.0);
        t.log_rho[K] = m;
    }
    for (int K : Ks) {
        for (int Kp : Ks) {
            if (Kp < K || t.overlap.count({K, Kp})) continue;
            Eigen::MatrixXd m(n, n);
            for (int a = 0; a <= n_max; ++a)
                for (int b = 0; b <= n_max; ++b) m(a, b) = radial_overlap(K, a, Kp, b);
            t.overlap[{K, Kp}] = m;
        }
    }
    return t;
}

namespace {

double radial_overlap_lookup(const RadialTables& t, int K, int N, int Kp, int Np) {
    if (K <= Kp) return t.overlap.at({K, Kp})(N, Np);
    return t.overlap.at({Kp, K})(Np, N);
}

}  // namespace

Hamiltonian assemble_hamiltonian(const std::vector<BasisState>& states, const CouplingDecomposition& coupling,
                                 const RadialTables& radial, const Frequencies& freq, double beta_meV,
                                 double rho0, int L, PrefactorMode prefactor, double basis_scale) {
    if (!(basis_scale > 0.0)) throw ConfigError("basis_scale must be positive");
    const Eigen::Index n = static_cast<Eigen::Index>(states.size());
    Hamiltonian h;
    h.states = states;
    h.H = Eigen::MatrixXd::Zero(n, n);
    h.S = Eigen::MatrixXd::Zero(n, n);
    // the tables are tabulated at λ = 1; ln ρ picks up −½ ln λ on its diagonal
    const double log_rho0 = std::log(rho0) + 0.5 * std::log(basis_scale);
    const double lam = basis_scale;
    const double hw = energy_prefactor(prefactor) * freq.omega_eff;
    for (Eigen::Index i = 0; i < n; ++i) {
        const BasisState& a = states[i];
        if (a.angular < 0 || a.angular >= coupling.size() || a.N > radial.n_max)
            throw SolverError("assemble_hamiltonian: basis state outside the coupling or radial tables");
        for (Eigen::Index j = 0; j < n; ++j) {
            const BasisState& b = states[j];
            const double ov = radial_overlap_lookup(radial, a.K, a.N, b.K, b.N);
            double w = coupling.B(a.angular, b.angular) * ov;
            // A is diagonal in the angular states, which fixes K = K'
            if (a.K == b.K) {
                double ln_elem = radial.log_rho.at(a.K)(a.N, b.N);
                if (a.N == b.N) ln_elem -= log_rho0;
                w += coupling.A(a.angular, b.angular) * ln_elem;
            }
            h.H(i, j) = beta_meV * w;
            // H⁰(λ) = ½(λ + 1/λ)(2N+K+2) on the diagonal, ½(λ − 1/λ) sqrt((N+1)(N+K+2)) next to it
            if (lam != 1.0 && a.angular == b.angular && std::abs(a.N - b.N) == 1) {
                const int lo = std::min(a.N, b.N);
                const double off = std::sqrt((lo + 1.0) * (lo + a.K + 2.0));
                h.H(i, j) += hw * 0.5 * (lam - 1.0 / lam) * off;
            }
            h.S(i, j) = coupling.gram(a.angular, b.angular) * ov;
        }
        h.H(i, i) += 0.5 * (lam + 1.0 / lam) * hw * (2.0 * a.N + a.K + 2.0) - freq.omega_L * L;
    }
    if (!h.H.allFinite()) throw SolverError("non-finite Hamiltonian element");
    return h;
}

EigenResult solve_generalized(const Eigen::MatrixXd& H, const Eigen::MatrixXd& S, double prune) {
    EigenResult out;
    if (H.rows() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_s(S);
    if (es_s.info() != Eigen::Success) throw SolverError("overlap eigensolve failed");
    const Eigen::VectorXd& lam = es_s.eigenvalues();
    const double lmax = lam.maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam[i] > prune * lmax) keep.push_back(i);
    if (keep.empty()) throw SolverError("overlap matrix is numerically zero");
    out.pruned = static_cast<int>(lam.size() - static_cast<Eigen::Index>(keep.size()));
    out.overlap_condition = lmax / lam[keep.front()];

    Eigen::MatrixXd x(S.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        x.col(static_cast<Eigen::Index>(c)) = es_s.eigenvectors().col(keep[c]) / std::sqrt(lam[keep[c]]);
    const Eigen::MatrixXd hp = x.transpose() * H * x;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (hp + hp.transpose()));
    if (es.info() != Eigen::Success) throw SolverError("Hamiltonian eigensolve failed");
    out.values = es.eigenvalues();
    out.vectors = x * es.eigenvectors();
    return out;
}

RelativeProblem::RelativeProblem(const SolverOptions& options) : options_(options) {
    options_.validate();
    const AngularGrid grid(options_.quadrature.n_alpha, options_.quadrature.n_phi);
    blocks_ = build_angular_blocks(options_.k_max, options_.L, options_.symmetry, grid);
    coupling_ = assemble_coupling(blocks_, options_.quadrature.n_log);

    std::vector<int> Ks;
    for (const AngularBlock& b : blocks_)
        if (b.basis.size() > 0) Ks.push_back(b.K);
    radial_ = RadialTables::build(Ks, options_.n_max);

    for (Eigen::Index s = 0; s < coupling_.size(); ++s)
        for (int N = 0; N <= options_.n_max; ++N)
            states_.push_back(BasisState{static_cast<int>(s), coupling_.state_K[s], N});
}

std::vector<BasisState> RelativeProblem::states_up_to(int k_max) const {
    std::vector<BasisState> out;
    for (const BasisState& s : states_)
        if (s.K <= k_max) out.push_back(s);
    return out;
}

Hamiltonian RelativeProblem::assemble(const DotConfig& config) const { return assemble(config, states_); }

Hamiltonian RelativeProblem::assemble(const DotConfig& config, const std::vector<BasisState>& subset) const {
    return assemble(config, subset, resolve_scale(config));
}

Hamiltonian RelativeProblem::assemble(const DotConfig& config, const std::vector<BasisState>& subset,
                                      double basis_scale) const {
    config.validate();
    return assemble_hamiltonian(subset, coupling_, radial_, frequencies(config), config.beta, rho0_internal(config),
                                options_.L, options_.prefactor, basis_scale);
}

double RelativeProblem::resolve_scale(const DotConfig& config) const {
    if (options_.basis_scale > 0.0) return options_.basis_scale;
    if (states_.empty()) return 1.0;
    auto lowest = [&](double log_lam) {
        const Hamiltonian h = assemble(config, states_, std::exp(log_lam));
        return solve_generalized(h.H, h.S).values[0];
    };
    const auto best = boost::math::tools::brent_find_minima(lowest, std::log(0.05), std::log(20.0), 30);
    return std::exp(best.first);
}

namespace {

std::vector<Eigen::Index> indices_up_to(const std::vector<BasisState>& states, int k_max) {
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].K <= k_max) idx.push_back(static_cast<Eigen::Index>(i));
    return idx;
}

Eigen::MatrixXd principal(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& idx) {
    const Eigen::Index n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

}  // namespace

GroundStateResult ground_state(const RelativeProblem& problem, const DotConfig& config) {
    if (problem.states().empty())
        throw SolverError("no basis states of symmetry " + to_string(problem.options().symmetry) +
                          " with K <= " + std::to_string(problem.options().k_max));
    const double scale = problem.resolve_scale(config);
    const Hamiltonian h = problem.assemble(config, problem.states(), scale);
    const EigenResult eig = solve_generalized(h.H, h.S);

    GroundStateResult out;
    out.basis_scale = scale;
    out.energy_meV = eig.values[0];
    const Frequencies f = frequencies(config);
    out.total_energy_meV = out.energy_meV + fock_darwin(0, 0, f.omega0, f.omega_L);
    out.coefficients = eig.vectors.col(0);
    Eigen::Index imax = 0;
    out.coefficients.cwiseAbs().maxCoeff(&imax);
    if (out.coefficients[imax] < 0) out.coefficients = -out.coefficients;
    out.states = h.states;
    out.overlap_condition = eig.overlap_condition;

    const int step = 2;
    for (int kp = std::abs(problem.options().L); kp <= problem.options().k_max; kp += step) {
        const auto idx = indices_up_to(h.states, kp);
        if (idx.empty()) continue;
        const EigenResult sub = solve_generalized(principal(h.H, idx), principal(h.S, idx));
        out.trace.emplace_back(kp, sub.values[0]);
    }
    return out;
}

GroundStateResult ground_state(const DotConfig& config, const SolverOptions& options) {
    const RelativeProblem problem(options);
    return ground_state(problem, config);
}

std::vector<double> lowest_levels(const RelativeProblem& problem, const DotConfig& config, int count) {
    if (problem.states().empty()) return {};
    const Hamiltonian h = problem.assemble(config);
    const EigenResult eig = solve_generalized(h.H, h.S);
    const Eigen::Index n = std::min<Eigen::Index>(count, eig.values.size());
    return std::vector<double>(eig.values.data(), eig.values.data() + n);
}

std::string to_string(SweepKind k) {
    switch (k) {
        case SweepKind::cm: return "cm";
        case SweepKind::relative_noninteracting: return "relative-noninteracting";
        case SweepKind::interacting: return "interacting";
    }
    return "?";
}

SweepKind sweep_kind_from_string(const std::string& s) {
    if (s == "cm") return SweepKind::cm;
    if (s == "relative-noninteracting" || s == "relative") return SweepKind::relative_noninteracting;
    if (s == "interacting") return SweepKind::interacting;
    throw ConfigError("unknown sweep kind '" + s + "'");
}

std::vector<double> linspace(double start, double stop, int steps) {
    if (steps < 1) throw ConfigError("field range needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        out[static_cast<std::size_t>(i)] = steps == 1 ? start : start + (stop - start) * i / (steps - 1);
    return out;
}

namespace {

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

DotConfig at_field(DotConfig c, double b) {
    c.b_field = b;
    c.validate();
    return c;
}

}  // namespace

SpectrumTable field_sweep(const DotConfig& config, const std::vector<double>& b_values, const SolverOptions& options,
                          const SweepOptions& sweep) {
    if (b_values.empty()) throw ConfigError("field range is empty");
    config.validate();
    options.validate();

    SpectrumTable t;
    t.set("kind", to_string(sweep.kind));
    t.set("hbar_omega0_meV", format_double(config.hbar_omega0));
    t.set("m_eff_ratio", format_double(config.material.m_eff_ratio));
    t.set("epsilon_r", format_double(config.material.epsilon_r));
    t.set("beta_meV", format_double(config.beta));
    t.set("rho0", format_double(config.rho0));
    t.set("k_max", std::to_string(options.k_max));
    t.set("n_max", std::to_string(options.n_max));
    t.set("L", std::to_string(options.L));
    t.set("symmetry", to_string(options.symmetry));
    t.set("prefactor", to_string(options.prefactor));
    t.set("code_version", code_version);

    std::vector<std::vector<std::vector<double>>> per_point(b_values.size());

    switch (sweep.kind) {
        case SweepKind::cm: {
            t.columns = {"b_tesla", "n", "m", "energy_meV", "hbar_omega_L_meV", "landau_meV"};
            for (std::size_t i = 0; i < b_values.size(); ++i) {
                const Frequencies f = frequencies(at_field(config, b_values[i]));
                for (int n = 0; n <= sweep.cm_n_max; ++n)
                    for (int m = -sweep.cm_m_max; m <= sweep.cm_m_max; ++m)
                        per_point[i].push_back({b_values[i], double(n), double(m), fock_darwin(n, m, f.omega0, f.omega_L),
                                                f.omega_L, landau_level(n, m, f.omega_L)});
            }
            break;
        }
        case SweepKind::relative_noninteracting: {
            t.columns = {"b_tesla", "K", "L", "N", "energy_meV"};
            for (std::size_t i = 0; i < b_values.size(); ++i) {
                const Frequencies f = frequencies(at_field(config, b_values[i]));
                for (int K = std::abs(options.L); K <= options.k_max; K += 2)
                    for (int N = 0; N <= options.n_max; ++N)
                        per_point[i].push_back(
                            {b_values[i], double(K), double(options.L), double(N),
                             noninteracting_energy(N, K, options.L, f.omega_eff, f.omega_L, options.prefactor)});
            }
            break;
        }
        case SweepKind::interacting: {
            t.columns = {"b_tesla", "level", "energy_meV"};
            const RelativeProblem problem(options);
            parallel_for(b_values.size(), sweep.threads, [&](std::size_t i) {
                const auto levels = lowest_levels(problem, at_field(config, b_values[i]), sweep.levels);
                for (std::size_t k = 0; k < levels.size(); ++k)
                    per_point[i].push_back({b_values[i], double(k), levels[k]});
            });
            break;
        }
    }
    for (auto& rows : per_point)
        for (auto& r : rows) t.rows.push_back(std::move(r));
    t.validate();
    return t;
}

}  // namespace hfm
