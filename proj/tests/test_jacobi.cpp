#include <doctest.h>

#include <numbers>
#include <random>

#include "hfm/jacobi.hpp"

using namespace hfm;

namespace {

constexpr double pi = std::numbers::pi;

Positions random_positions(std::mt19937& gen) {
    std::normal_distribution<double> d(0.0, 1.5);
    return {Vec2(d(gen), d(gen)), Vec2(d(gen), d(gen)), Vec2(d(gen), d(gen))};
}

double dist(const JacobiVectors& a, const JacobiVectors& b) {
    return (a.X - b.X).norm() + (a.Y - b.Y).norm() + (a.R - b.R).norm();
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("coincident particles") {
    const Positions zero{Vec2::Zero(), Vec2::Zero(), Vec2::Zero()};
    for (int s = 1; s <= 3; ++s) {
        const JacobiVectors v = to_jacobi(zero, s);
        CHECK(v.X.norm() == 0.0);
        CHECK(v.Y.norm() == 0.0);
        CHECK(v.R.norm() == 0.0);
        CHECK(v.set_index == s);
    }
    // particles 1 and 2 coincide: X of the partition {3,(12)} vanishes
    const Positions pair{Vec2(0.4, -1.0), Vec2(0.4, -1.0), Vec2(2.0, 3.0)};
    CHECK(to_jacobi(pair, 3).X.norm() == 0.0);
}

TEST_CASE("equilateral triangle") {
    const double d = 1.7;
    const Positions tri{Vec2(0, 0), Vec2(d, 0), Vec2(d / 2, d * std::sqrt(3.0) / 2)};
    double rho1 = 0.0;
    for (int s = 1; s <= 3; ++s) {
        const JacobiVectors v = to_jacobi(tri, s);
        CHECK(v.X.norm() == doctest::Approx(v.Y.norm()).epsilon(1e-14));
        const double rho = to_hyperspherical(v).rho;
        if (s == 1) rho1 = rho;
        CHECK(rho == doctest::Approx(rho1).epsilon(1e-14));
    }
}

TEST_CASE("invalid set index") {
    const Positions r{Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)};
    CHECK_THROWS(to_jacobi(r, 0));
    CHECK_THROWS(to_jacobi(r, 4));
    CHECK_THROWS(kinematic_angle(2, 2));
    CHECK_THROWS(kinematic_angle(0, 1));
}

TEST_CASE("hyperradius is the same in every partition") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Positions r = random_positions(gen);
        const double r1 = to_hyperspherical(to_jacobi(r, 1)).rho;
        CHECK(to_hyperspherical(to_jacobi(r, 2)).rho == doctest::Approx(r1).epsilon(1e-12));
        CHECK(to_hyperspherical(to_jacobi(r, 3)).rho == doctest::Approx(r1).epsilon(1e-12));
    }
}

TEST_CASE("moment of inertia decomposition") {
    std::mt19937 gen(11);
    for (Masses ms : {Masses{}, Masses{{1.0, 2.0, 3.5}}, Masses{{0.2, 5.0, 1.1}}}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Positions r = random_positions(gen);
            double lhs = 0.0;
            for (int i = 0; i < 3; ++i) lhs += ms.m[i] * r[i].squaredNorm();
            for (int s = 1; s <= 3; ++s) {
                const JacobiVectors v = to_jacobi(r, s, ms);
                const double rhs = ms.reduced() * (v.X.squaredNorm() + v.Y.squaredNorm() + v.R.squaredNorm());
                CHECK(rhs == doctest::Approx(lhs).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("equal-mass pair separation scale") {
    std::mt19937 gen(3);
    const Positions r = random_positions(gen);
    // μ = m/√3: |r_j − r_k| = √2 3^{-1/4} |X_i|
    const double scale = std::sqrt(2.0) * std::pow(3.0, -0.25);
    CHECK((r[1] - r[2]).norm() == doctest::Approx(scale * to_jacobi(r, 1).X.norm()).epsilon(1e-13));
    CHECK((r[2] - r[0]).norm() == doctest::Approx(scale * to_jacobi(r, 2).X.norm()).epsilon(1e-13));
    CHECK((r[0] - r[1]).norm() == doctest::Approx(scale * to_jacobi(r, 3).X.norm()).epsilon(1e-13));
}

TEST_CASE("positions round trip") {
    std::mt19937 gen(5);
    const Masses ms{{1.0, 2.0, 3.5}};
    for (int trial = 0; trial < 20; ++trial) {
        const Positions r = random_positions(gen);
        for (int s = 1; s <= 3; ++s) {
            const Positions back = from_jacobi(to_jacobi(r, s, ms), ms);
            for (int i = 0; i < 3; ++i) CHECK((back[i] - r[i]).norm() < 1e-13);
        }
    }
}

TEST_CASE("kinematic rotation matches the direct construction") {
    std::mt19937 gen(13);
    for (Masses ms : {Masses{}, Masses{{1.0, 2.0, 3.5}}, Masses{{4.0, 0.3, 1.0}}}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Positions r = random_positions(gen);
            for (int i = 1; i <= 3; ++i)
                for (int k = 1; k <= 3; ++k) {
                    if (i == k) continue;
                    const JacobiVectors moved = change_set(to_jacobi(r, i, ms), k, ms);
                    CHECK(moved.set_index == k);
                    CHECK(dist(moved, to_jacobi(r, k, ms)) < 1e-12);
                }
        }
    }
}

TEST_CASE("equal-mass kinematic angles") {
    // cyclic moves (1→2, 2→3, 3→1) and their inverses
    for (auto [i, k] : {std::pair{1, 2}, {2, 3}, {3, 1}}) {
        CHECK(kinematic_angle(i, k) == doctest::Approx(-2 * pi / 3).epsilon(1e-15));
        CHECK(kinematic_angle(k, i) == doctest::Approx(2 * pi / 3).epsilon(1e-15));
        CHECK(std::abs(std::tan(kinematic_angle(i, k))) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    }
}

TEST_CASE("kinematic angles are antisymmetric and compose") {
    const Masses ms{{1.0, 2.0, 3.5}};
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            if (i != k) CHECK(kinematic_angle(i, k, ms) == doctest::Approx(-kinematic_angle(k, i, ms)).epsilon(1e-15));
    const double total = kinematic_angle(1, 2, ms) + kinematic_angle(2, 3, ms) + kinematic_angle(3, 1, ms);
    CHECK(std::abs(std::remainder(total, 2 * pi)) < 1e-14);
}

TEST_CASE("rotation group properties") {
    std::mt19937 gen(17);
    const Positions r = random_positions(gen);
    const JacobiVectors v = to_jacobi(r, 1);
    CHECK(dist(rotate_jacobi(v, 0.0, 1), v) == 0.0);
    for (double phi : {0.3, -1.2, pi / 3, 2.9}) {
        const JacobiVectors w = rotate_jacobi(v, phi, 2);
        CHECK(w.X.squaredNorm() + w.Y.squaredNorm() ==
              doctest::Approx(v.X.squaredNorm() + v.Y.squaredNorm()).epsilon(1e-14));
        CHECK(dist(rotate_jacobi(w, -phi, 1), v) < 1e-14);
    }
    const JacobiVectors twice = rotate_jacobi(rotate_jacobi(v, pi / 3, 1), pi / 3, 1);
    CHECK(dist(twice, rotate_jacobi(v, 2 * pi / 3, 1)) < 1e-14);
    // φ_ik followed by φ_ki is the identity
    CHECK(dist(rotate_jacobi(rotate_jacobi(v, kinematic_angle(1, 3), 3), kinematic_angle(3, 1), 1), v) < 1e-14);
}

TEST_CASE("hyperspherical coordinates") {
    JacobiVectors v;
    v.X = Vec2(1, 0);
    HyperPoint p = to_hyperspherical(v);
    CHECK(p.rho == 1.0);
    CHECK(p.alpha == 0.0);
    CHECK(p.phi1 == 0.0);
    CHECK(p.degenerate);

    v.X = Vec2(0, 0);
    v.Y = Vec2(0, 1);
    p = to_hyperspherical(v);
    CHECK(p.rho == 1.0);
    CHECK(p.alpha == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(p.phi2 == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(p.phi1 == 0.0);
    CHECK(p.degenerate);

    p = to_hyperspherical(JacobiVectors{});
    CHECK(p.rho == 0.0);
    CHECK(p.alpha == 0.0);
    CHECK(p.degenerate);
}

TEST_CASE("hyperspherical round trip") {
    std::mt19937 gen(19);
    std::normal_distribution<double> d(0.0, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
        JacobiVectors v;
        v.X = Vec2(d(gen), d(gen));
        v.Y = Vec2(d(gen), d(gen));
        v.set_index = 1 + trial % 3;
        const HyperPoint p = to_hyperspherical(v);
        CHECK_FALSE(p.degenerate);
        CHECK(p.alpha >= 0.0);
        CHECK(p.alpha <= pi / 2);
        CHECK(p.phi1 >= 0.0);
        CHECK(p.phi1 < 2 * pi);
        CHECK(v.X.norm() == doctest::Approx(p.rho * std::cos(p.alpha)).epsilon(1e-14));
        const JacobiVectors back = from_hyperspherical(p);
        CHECK(back.set_index == v.set_index);
        CHECK((back.X - v.X).norm() < 1e-14 * (1 + p.rho));
        CHECK((back.Y - v.Y).norm() < 1e-14 * (1 + p.rho));
    }
}

}
