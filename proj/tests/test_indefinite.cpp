#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phsub/indefinite.hpp"
#include "phsub/model_spaces.hpp"

using namespace phsub;

namespace {
constexpr int kIterations = 200;
constexpr unsigned kSeed = 42;

VectorXd random_vec(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
    return v;
}
} // namespace

TEST_CASE("scalar product basics") {
    const ScalarProduct g(4, 1);
    CHECK(g.ip(VectorXd::Unit(4, 0), VectorXd::Unit(4, 0)) == -1.0);
    CHECK(g.ip(VectorXd::Unit(4, 0), VectorXd::Unit(4, 1)) == 0.0);
    CHECK(g.ip(VectorXd::Unit(4, 3), VectorXd::Unit(4, 3)) == 1.0);
}

TEST_CASE("scalar product matches the ordered term summation bit for bit") {
    std::mt19937_64 rng(kSeed);
    const ScalarProduct g(7, 3);
    for (int it = 0; it < kIterations; ++it) {
        const VectorXd x = random_vec(7, rng), y = random_vec(7, rng);
        double oracle = 0.0;
        for (int i = 0; i < 7; ++i) oracle += (i < 3 ? -1.0 : 1.0) * x[i] * y[i];
        CHECK(g.ip(x, y) == oracle);
    }
}

TEST_CASE("scalar product is bilinear and symmetric") {
    std::mt19937_64 rng(kSeed);
    const ScalarProduct g(6, 2);
    for (int it = 0; it < kIterations; ++it) {
        const VectorXd x = random_vec(6, rng), y = random_vec(6, rng), z = random_vec(6, rng);
        const double a = std::normal_distribution<double>(0, 1)(rng);
        CHECK(g.ip(x, y) == doctest::Approx(g.ip(y, x)).epsilon(1e-14));
        CHECK(g.ip(x + a * z, y) ==
              doctest::Approx(g.ip(x, y) + a * g.ip(z, y)).epsilon(1e-12));
    }
}

TEST_CASE("ambient vectors reject mismatched contexts") {
    const AmbientVector a(VectorXd::Unit(3, 0), ScalarProduct(3, 1));
    const AmbientVector b(VectorXd::Unit(3, 0), ScalarProduct(3, 2));
    CHECK_THROWS_AS(scalar_product(a, b), ContextError);
}

TEST_CASE("gram_schmidt leaves an orthonormal spacelike pair unchanged") {
    const ScalarProduct g(4, 1);
    const PseudoFrame f = gram_schmidt({VectorXd::Unit(4, 1), VectorXd::Unit(4, 2)}, g);
    REQUIRE(f.size() == 2);
    CHECK((f.vectors[0] - VectorXd::Unit(4, 1)).norm() < 1e-14);
    CHECK((f.vectors[1] - VectorXd::Unit(4, 2)).norm() < 1e-14);
    CHECK(f.signs[0] == 1);
    CHECK(f.signs[1] == 1);
}

TEST_CASE("gram_schmidt on a timelike-leaning pair") {
    // {e0 + 0.5 e1, e1} with one negative direction: worked by hand,
    // the first output is timelike and the second spacelike.
    const ScalarProduct g(2, 1);
    VectorXd v0(2), v1(2);
    v0 << 1.0, 0.5;
    v1 << 0.0, 1.0;
    const PseudoFrame f = gram_schmidt({v0, v1}, g);
    REQUIRE(f.size() == 2);
    CHECK(f.signs[0] == -1);
    CHECK(f.signs[1] == 1);
    CHECK(g.ip(f.vectors[0], f.vectors[0]) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g.ip(f.vectors[1], f.vectors[1]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(g.ip(f.vectors[0], f.vectors[1])) < 1e-12);
    // hand value of the second vector before normalization: (2/3, 4/3)
    VectorXd expected(2);
    expected << 2.0 / 3.0, 4.0 / 3.0;
    expected /= std::sqrt(g.ip(expected, expected));
    CHECK((f.vectors[1] - expected).norm() < 1e-12);
}

TEST_CASE("gram_schmidt rejects duplicate inputs") {
    const ScalarProduct g(3, 1);
    const VectorXd v = VectorXd::Unit(3, 1);
    CHECK_THROWS_AS(gram_schmidt({v, v}, g), DegenerateSubspaceError);
}

TEST_CASE("pivoted gram_schmidt drops dependent tails instead of raising") {
    const ScalarProduct g(3, 0);
    const VectorXd v = VectorXd::Unit(3, 1);
    const PseudoFrame f = gram_schmidt({v, v, VectorXd::Unit(3, 0)}, g, 1e-9, true);
    CHECK(f.size() == 2);
}

TEST_CASE("gram_schmidt output Gram matrix is diagonal +-1") {
    std::mt19937_64 rng(kSeed);
    const ScalarProduct g(8, 3);
    for (int it = 0; it < 50; ++it) {
        std::vector<VectorXd> input;
        for (int i = 0; i < 5; ++i) input.push_back(random_vec(8, rng));
        const PseudoFrame f = gram_schmidt(input, g, 1e-9, true);
        for (int i = 0; i < f.size(); ++i)
            for (int j = 0; j < f.size(); ++j) {
                const double want = i == j ? static_cast<double>(f.signs[i]) : 0.0;
                CHECK(std::abs(g.ip(f.vectors[i], f.vectors[j]) - want) < 1e-10);
            }
    }
}

TEST_CASE("project_onto basics and idempotence") {
    std::mt19937_64 rng(kSeed);
    const ScalarProduct g(6, 2);
    const PseudoFrame empty;
    CHECK(project_onto(random_vec(6, rng), empty, g).norm() == 0.0);
    for (int it = 0; it < 50; ++it) {
        std::vector<VectorXd> input;
        for (int i = 0; i < 3; ++i) input.push_back(random_vec(6, rng));
        const PseudoFrame f = gram_schmidt(input, g, 1e-9, true);
        if (f.size() < 3) continue;
        const VectorXd u = f.vectors[1];
        CHECK((project_onto(u, f, g) - u).norm() < 1e-12);
        const VectorXd x = random_vec(6, rng);
        const VectorXd px = project_onto(x, f, g);
        // indefinite frames can be mildly ill conditioned, hence the slack
        CHECK((project_onto(px, f, g) - px).norm() < 1e-8);
        for (const VectorXd& b : f.vectors) CHECK(std::abs(g.ip(x - px, b)) < 1e-8);
    }
}

TEST_CASE("form_kernel counts null eigenvalues") {
    CHECK(form_kernel(MatrixXd::Zero(5, 5)).dimension == 5);
    CHECK(form_kernel(MatrixXd::Identity(4, 4)).dimension == 0);
}

TEST_CASE("form_kernel raises on eigenvalues straddling the tolerance") {
    MatrixXd q = MatrixXd::Identity(3, 3);
    q(2, 2) = 1e-9;
    CHECK_THROWS_AS(form_kernel(q, 1e-9), ToleranceAmbiguityError);
}

TEST_CASE("form_kernel agrees with integer-rank oracles") {
    MatrixXd q(4, 4);
    q << 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0; // rank 2 by row reduction
    CHECK(form_kernel(q).dimension == 2);
}

TEST_CASE("quartic deviation form on the quaternionic model has kernel dim 5") {
    // Q(Y) = R'(X,Y,X,Y) + g(X,X)g(Y,Y) - g(X,Y)^2 on the dim-8 quaternionic
    // model reduces to -3 sum_a g(S_a X, Y)^2; kernel dim 4k-3 = 5 at k=2.
    std::mt19937_64 rng(kSeed);
    const BaseCurvatureModel model = make_base_model(BaseKind::QuaternionicHyperbolic, 8);
    VectorXd x = random_vec(8, rng);
    x.normalize();
    MatrixXd q = MatrixXd::Zero(8, 8);
    for (const MatrixXd& s : model.structures) {
        const VectorXd sx = s * x;
        q -= 3.0 * sx * sx.transpose();
    }
    CHECK(form_kernel(q).dimension == 5);
}
