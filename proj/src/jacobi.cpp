#include "hfm/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hfm/units.hpp"

namespace hfm {

namespace {

struct Triple {
    int i, j, k;  // zero-based
};

Triple cyclic(int set_index) {
    if (set_index < 1 || set_index > 3)
        throw ConfigError("Jacobi set index must be 1, 2 or 3, got " + std::to_string(set_index));
    const int i = set_index - 1;
    return {i, (i + 1) % 3, (i + 2) % 3};
}

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    if (a >= two_pi) a -= two_pi;
    return a;
}

}  // namespace

JacobiVectors to_jacobi(const Positions& r, int set_index, const Masses& masses) {
    const auto [i, j, k] = cyclic(set_index);
    const auto& m = masses.m;
    const double M = masses.total();
    const double mu = masses.reduced();
    const double mjk = m[j] + m[k];

    JacobiVectors v;
    v.set_index = set_index;
    v.X = std::sqrt(m[j] * m[k] / (mjk * mu)) * (r[j] - r[k]);
    v.Y = std::sqrt(m[i] * mjk / (M * mu)) * (r[i] - (m[j] * r[j] + m[k] * r[k]) / mjk);
    v.R = (m[0] * r[0] + m[1] * r[1] + m[2] * r[2]) / std::sqrt(M * mu);
    return v;
}

Positions from_jacobi(const JacobiVectors& v, const Masses& masses) {
    const auto [i, j, k] = cyclic(v.set_index);
    const auto& m = masses.m;
    const double M = masses.total();
    const double mu = masses.reduced();
    const double mjk = m[j] + m[k];

    const Vec2 rjk = v.X / std::sqrt(m[j] * m[k] / (mjk * mu));
    const Vec2 ri_rel = v.Y / std::sqrt(m[i] * mjk / (M * mu));  // r_i − cm_jk
    const Vec2 cm = v.R * std::sqrt(M * mu) / M;

    // cm = (m_i r_i + mjk cm_jk) / M with r_i = cm_jk + ri_rel
    const Vec2 cm_jk = cm - m[i] * ri_rel / M;
    Positions r;
    r[i] = cm_jk + ri_rel;
    r[j] = cm_jk + m[k] / mjk * rjk;
    r[k] = cm_jk - m[j] / mjk * rjk;
    return r;
}

double kinematic_angle(int i, int k, const Masses& masses) {
    if (i < 1 || i > 3 || k < 1 || k > 3 || i == k)
        throw ConfigError("kinematic_angle needs two distinct set indices in {1,2,3}");
    const int j = 6 - i - k;
    const auto& m = masses.m;
    const double M = masses.total();
    // (i, k, j) is an even permutation exactly when k follows i cyclically
    const bool even = (k == i % 3 + 1);
    const double t = (even ? 1.0 : -1.0) * std::sqrt(m[j - 1] * M / (m[i - 1] * m[k - 1]));
    return std::atan2(-t, -1.0);
}

JacobiVectors rotate_jacobi(const JacobiVectors& v, double phi, int target_set) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    JacobiVectors out;
    out.X = c * v.X + s * v.Y;
    out.Y = -s * v.X + c * v.Y;
    out.R = v.R;
    out.set_index = target_set;
    return out;
}

JacobiVectors change_set(const JacobiVectors& v, int target_set, const Masses& masses) {
    if (v.set_index == target_set) return v;
    return rotate_jacobi(v, kinematic_angle(v.set_index, target_set, masses), target_set);
}

HyperPoint to_hyperspherical(const JacobiVectors& v) {
    HyperPoint p;
    p.set_index = v.set_index;
    const double x = v.X.norm();
    const double y = v.Y.norm();
    p.rho = std::hypot(x, y);
    if (p.rho == 0.0) {
        p.degenerate = true;
        return p;
    }
    p.alpha = std::atan2(y, x);
    if (x > 0) {
        p.phi1 = wrap_angle(std::atan2(v.X.y(), v.X.x()));
    } else {
        p.degenerate = true;
    }
    if (y > 0) {
        p.phi2 = wrap_angle(std::atan2(v.Y.y(), v.Y.x()));
    } else {
        p.degenerate = true;
    }
    return p;
}

JacobiVectors from_hyperspherical(const HyperPoint& p) {
    JacobiVectors v;
    v.set_index = p.set_index;
    const double x = p.rho * std::cos(p.alpha);
    const double y = p.rho * std::sin(p.alpha);
    v.X = Vec2(x * std::cos(p.phi1), x * std::sin(p.phi1));
    v.Y = Vec2(y * std::cos(p.phi2), y * std::sin(p.phi2));
    return v;
}

}  // namespace hfm
