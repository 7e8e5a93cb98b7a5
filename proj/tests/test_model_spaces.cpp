#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phsub/model_spaces.hpp"

using namespace phsub;

namespace {
constexpr unsigned kSeed = 42;

VectorXd random_tangent(const PseudoHyperbolicSpace& space, const VectorXd& p,
                        std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const PseudoFrame basis = tangent_basis(space, p);
    VectorXd v = VectorXd::Zero(p.size());
    for (int i = 0; i < basis.size(); ++i) v += gauss(rng) * basis.vectors[i];
    return v;
}
} // namespace

TEST_CASE("quadric membership") {
    const PseudoHyperbolicSpace space(3, 1);
    CHECK(contains(space, -VectorXd::Unit(4, 0)));
    CHECK_FALSE(contains(space, 2.0 * VectorXd::Unit(4, 0)));
    CHECK_FALSE(contains(space, VectorXd::Unit(4, 3))); // spacelike, <x,x> = +1
}

TEST_CASE("sample_point is deterministic and lands on the quadric") {
    const PseudoHyperbolicSpace space(7, 3);
    std::mt19937_64 rng1(kSeed), rng2(kSeed);
    for (int it = 0; it < 200; ++it) {
        const VectorXd p = sample_point(space, rng1);
        const VectorXd q = sample_point(space, rng2);
        CHECK((p - q).norm() == 0.0);
        CHECK(space.ambient().ip(p, p) == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("tangent_basis spans p-perp with the expected causal count") {
    std::mt19937_64 rng(kSeed);
    const PseudoHyperbolicSpace space(15, 7);
    const ScalarProduct g = space.ambient();
    for (int it = 0; it < 20; ++it) {
        const VectorXd p = sample_point(space, rng);
        const PseudoFrame basis = tangent_basis(space, p);
        REQUIRE(basis.size() == 15);
        CHECK(basis.count_timelike() == 7);
        for (int i = 0; i < basis.size(); ++i) {
            CHECK(std::abs(g.ip(p, basis.vectors[i])) < 1e-10);
            for (int j = 0; j < i; ++j) CHECK(std::abs(g.ip(basis.vectors[i], basis.vectors[j])) < 1e-10);
        }
    }
}

TEST_CASE("geodesics flow by cosh and cos") {
    std::mt19937_64 rng(kSeed);
    const PseudoHyperbolicSpace space(4, 1);
    const ScalarProduct g = space.ambient();
    const VectorXd p = sample_point(space, rng);
    const PseudoFrame basis = tangent_basis(space, p);
    // timelike direction: closed circle of period 2 pi
    int tl = 0;
    while (basis.signs[tl] != -1) ++tl;
    const VectorXd u = basis.vectors[tl];
    CHECK((geodesic(space, p, u, 0.0) - p).norm() < 1e-14);
    CHECK((geodesic(space, p, u, 2.0 * M_PI) - p).norm() < 1e-10);
    // spacelike direction: stays on the quadric, escapes
    int sl = 0;
    while (basis.signs[sl] != 1) ++sl;
    const VectorXd v = basis.vectors[sl];
    const VectorXd far = geodesic(space, p, v, 3.0);
    CHECK(contains(space, far, 1e-8));
    CHECK(g.ip(far, p) == doctest::Approx(-std::cosh(3.0)).epsilon(1e-10));
    // null directions are rejected
    CHECK_THROWS_AS(geodesic(space, p, u + v, 1.0), DomainError);
}

TEST_CASE("total curvature is constant -1 with the standard symmetries") {
    std::mt19937_64 rng(kSeed);
    const PseudoHyperbolicSpace space(5, 2);
    const ScalarProduct g = space.ambient();
    for (int it = 0; it < 100; ++it) {
        const VectorXd p = sample_point(space, rng);
        const VectorXd X = random_tangent(space, p, rng), Y = random_tangent(space, p, rng);
        const VectorXd Z = random_tangent(space, p, rng), W = random_tangent(space, p, rng);
        const double r = curvature_total(space, p, X, Y, Z, W);
        CHECK(r == doctest::Approx(-(g.ip(X, Z) * g.ip(Y, W) - g.ip(X, W) * g.ip(Y, Z)))
                       .epsilon(1e-10));
        CHECK(curvature_total(space, p, Y, X, Z, W) == doctest::Approx(-r).epsilon(1e-10));
        CHECK(curvature_total(space, p, Z, W, X, Y) == doctest::Approx(r).epsilon(1e-10));
        // first Bianchi
        const double bianchi = r + curvature_total(space, p, Y, Z, X, W) +
                               curvature_total(space, p, Z, X, Y, W);
        CHECK(std::abs(bianchi) < 1e-9);
        // sectional curvature of a nondegenerate plane is -1
        const double denom = g.ip(X, X) * g.ip(Y, Y) - g.ip(X, Y) * g.ip(X, Y);
        if (std::abs(denom) > 1e-3)
            CHECK(curvature_total(space, p, X, Y, X, Y) / denom ==
                  doctest::Approx(-1.0).epsilon(1e-8));
    }
    CHECK_THROWS_AS(curvature_total(space, VectorXd::Unit(6, 0) * -1.0, VectorXd::Unit(6, 0),
                                    VectorXd::Unit(6, 1), VectorXd::Unit(6, 1),
                                    VectorXd::Unit(6, 2)),
                    DomainError);
}

TEST_CASE("complex model curvature has holomorphic sectional curvature -4") {
    std::mt19937_64 rng(kSeed);
    const ComplexPseudoHyperbolicSpace space(3, 1);
    const ScalarProduct g = space.ambient();
    const MatrixXd J = space.complex_structure();
    CHECK((J * J + MatrixXd::Identity(g.dim, g.dim)).norm() < 1e-14);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int it = 0; it < 100; ++it) {
        VectorXd X(g.dim), Y(g.dim);
        for (int i = 0; i < g.dim; ++i) {
            X[i] = gauss(rng);
            Y[i] = gauss(rng);
        }
        // holomorphic plane {X, JX}
        const double gx = g.ip(X, X);
        if (std::abs(gx) > 1e-3)
            CHECK(curvature_complex(g, J, X, J * X, X, J * X) / (gx * gx) ==
                  doctest::Approx(-4.0).epsilon(1e-10));
        // J-invariance of the tensor
        CHECK(curvature_complex(g, J, J * X, J * Y, X, Y) ==
              doctest::Approx(curvature_complex(g, J, X, Y, X, Y)).epsilon(1e-9));
        // totally real plane: sectional curvature -1
        VectorXd Z = Y;
        Z -= X * (g.ip(X, Z) / gx);
        const VectorXd jx = J * X;
        Z -= jx * (g.ip(jx, Z) / g.ip(jx, jx));
        const double denom = g.ip(X, X) * g.ip(Z, Z) - g.ip(X, Z) * g.ip(X, Z);
        if (std::abs(denom) > 1e-3)
            CHECK(curvature_complex(g, J, X, Z, X, Z) / denom ==
                  doctest::Approx(-1.0).epsilon(1e-8));
    }
}

TEST_CASE("base model structures are skew anticommuting complex structures") {
    struct Row {
        BaseKind kind;
        int dim;
        size_t count;
    };
    for (const Row row : {Row{BaseKind::RealHyperbolic4, 8, 0},
                          Row{BaseKind::ComplexHyperbolic, 6, 1},
                          Row{BaseKind::QuaternionicHyperbolic, 8, 3},
                          Row{BaseKind::CayleyPlane, 16, 7}}) {
        const BaseCurvatureModel model = make_base_model(row.kind, row.dim);
        REQUIRE(model.structures.size() == row.count);
        const MatrixXd id = MatrixXd::Identity(row.dim, row.dim);
        for (size_t a = 0; a < row.count; ++a) {
            const MatrixXd& S = model.structures[a];
            CHECK((S * S + id).norm() < 1e-12);
            CHECK((S + S.transpose()).norm() < 1e-12);
            for (size_t b = 0; b < a; ++b)
                CHECK((S * model.structures[b] + model.structures[b] * S).norm() < 1e-12);
        }
    }
}

TEST_CASE("cayley structures: the volume product is a traceless involution") {
    const std::vector<MatrixXd> structs = cayley_structures();
    REQUIRE(structs.size() == 7);
    // the seven generators make R^16 a sum of the two inequivalent 8-dim
    // modules, so the volume product squares to +Id with signature (8, 8)
    MatrixXd vol = structs[0];
    for (int a = 1; a < 7; ++a) vol = vol * structs[a];
    const MatrixXd id = MatrixXd::Identity(16, 16);
    CHECK((vol * vol - id).norm() < 1e-10);
    CHECK(std::abs(vol.trace()) < 1e-10);
}

TEST_CASE("base quartic closed forms") {
    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto rand_vec = [&](int d) {
        VectorXd v(d);
        for (int i = 0; i < d; ++i) v[i] = gauss(rng);
        return v;
    };
    // constant curvature -4 case
    const BaseCurvatureModel real4 = make_base_model(BaseKind::RealHyperbolic4, 8);
    for (int it = 0; it < 50; ++it) {
        const VectorXd X = rand_vec(8), Y = rand_vec(8);
        const double gg = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
        CHECK(curvature_base_quartic(real4, X, Y) == doctest::Approx(-4.0 * gg).epsilon(1e-10));
    }
    // complex case: holomorphic planes reach -4, totally real planes -1
    const BaseCurvatureModel cx = make_base_model(BaseKind::ComplexHyperbolic, 6);
    const VectorXd X = rand_vec(6).normalized();
    CHECK(curvature_base_quartic(cx, X, cx.structures[0] * X) ==
          doctest::Approx(-4.0).epsilon(1e-10));
    // quaternionic case against the explicit sum
    const BaseCurvatureModel qh = make_base_model(BaseKind::QuaternionicHyperbolic, 8);
    for (int it = 0; it < 50; ++it) {
        const VectorXd A = rand_vec(8), B = rand_vec(8);
        double want = A.squaredNorm() * B.squaredNorm() - std::pow(A.dot(B), 2);
        for (const MatrixXd& S : qh.structures) want += 3.0 * std::pow((S * A).dot(B), 2);
        CHECK(curvature_base_quartic(qh, A, B) == doctest::Approx(-want).epsilon(1e-10));
    }
}

TEST_CASE("make_base_model validates dimensions") {
    CHECK_THROWS_AS(make_base_model(BaseKind::ComplexHyperbolic, 5), ConfigError);
    CHECK_THROWS_AS(make_base_model(BaseKind::QuaternionicHyperbolic, 6), ConfigError);
    CHECK_THROWS_AS(make_base_model(BaseKind::CayleyPlane, 8), ConfigError);
}
