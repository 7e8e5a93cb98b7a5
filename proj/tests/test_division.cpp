#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phsub/division.hpp"
#include "phsub/indefinite.hpp"

using namespace phsub;

namespace {
constexpr unsigned kSeed = 42;

HyperNumber random_hyper(Algebra a, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd c(algebra_dim(a));
    for (int i = 0; i < c.size(); ++i) c[i] = gauss(rng);
    return HyperNumber(a, c);
}
} // namespace

TEST_CASE("quaternion multiplication table") {
    const HyperNumber i = HyperNumber::unit(Algebra::Quaternion, 1);
    const HyperNumber j = HyperNumber::unit(Algebra::Quaternion, 2);
    const HyperNumber k = HyperNumber::unit(Algebra::Quaternion, 3);
    CHECK((multiply(i, j).coords - k.coords).norm() < 1e-15);
    CHECK((multiply(j, i).coords + k.coords).norm() < 1e-15);
    CHECK((multiply(i, i).coords + HyperNumber::one(Algebra::Quaternion).coords).norm() < 1e-15);
    CHECK((multiply(j, k).coords - i.coords).norm() < 1e-15);
}

TEST_CASE("octonion units square to -1 and anticommute") {
    for (int a = 1; a < 8; ++a) {
        const HyperNumber ea = HyperNumber::unit(Algebra::Octonion, a);
        CHECK((multiply(ea, ea).coords + HyperNumber::one(Algebra::Octonion).coords).norm() <
              1e-15);
        for (int b = a + 1; b < 8; ++b) {
            const HyperNumber eb = HyperNumber::unit(Algebra::Octonion, b);
            CHECK((multiply(ea, eb).coords + multiply(eb, ea).coords).norm() < 1e-15);
        }
    }
}

TEST_CASE("norm composition |xy| = |x||y|") {
    std::mt19937_64 rng(kSeed);
    for (Algebra a : {Algebra::Complex, Algebra::Quaternion, Algebra::Octonion}) {
        for (int it = 0; it < 200; ++it) {
            const HyperNumber x = random_hyper(a, rng), y = random_hyper(a, rng);
            CHECK(multiply(x, y).norm() ==
                  doctest::Approx(x.norm() * y.norm()).epsilon(1e-12));
        }
    }
}

TEST_CASE("alternativity x(xy) = (xx)y, also for octonions") {
    std::mt19937_64 rng(kSeed);
    for (Algebra a : {Algebra::Complex, Algebra::Quaternion, Algebra::Octonion}) {
        for (int it = 0; it < 100; ++it) {
            const HyperNumber x = random_hyper(a, rng), y = random_hyper(a, rng);
            const VectorXd lhs = multiply(x, multiply(x, y)).coords;
            const VectorXd rhs = multiply(multiply(x, x), y).coords;
            CHECK((lhs - rhs).norm() < 1e-10);
            const VectorXd lhs2 = multiply(multiply(y, x), x).coords;
            const VectorXd rhs2 = multiply(y, multiply(x, x)).coords;
            CHECK((lhs2 - rhs2).norm() < 1e-10);
        }
    }
}

TEST_CASE("complex and quaternionic multiplication associate") {
    std::mt19937_64 rng(kSeed);
    for (Algebra a : {Algebra::Complex, Algebra::Quaternion}) {
        for (int it = 0; it < 100; ++it) {
            const HyperNumber x = random_hyper(a, rng), y = random_hyper(a, rng),
                              z = random_hyper(a, rng);
            const VectorXd lhs = multiply(multiply(x, y), z).coords;
            const VectorXd rhs = multiply(x, multiply(y, z)).coords;
            CHECK((lhs - rhs).norm() < 1e-10);
        }
    }
}

TEST_CASE("conjugation is an anti-homomorphism") {
    std::mt19937_64 rng(kSeed);
    for (Algebra a : {Algebra::Complex, Algebra::Quaternion, Algebra::Octonion}) {
        for (int it = 0; it < 100; ++it) {
            const HyperNumber x = random_hyper(a, rng), y = random_hyper(a, rng);
            const VectorXd lhs = conjugate(multiply(x, y)).coords;
            const VectorXd rhs = multiply(conjugate(y), conjugate(x)).coords;
            CHECK((lhs - rhs).norm() < 1e-12);
            const VectorXd xxbar = multiply(x, conjugate(x)).coords;
            CHECK(xxbar[0] == doctest::Approx(x.norm() * x.norm()).epsilon(1e-12));
            CHECK(xxbar.tail(xxbar.size() - 1).norm() < 1e-12);
        }
    }
}

TEST_CASE("left multiplication operators") {
    std::mt19937_64 rng(kSeed);
    for (Algebra a : {Algebra::Quaternion, Algebra::Octonion}) {
        const int d = algebra_dim(a);
        const MatrixXd id = MatrixXd::Identity(d, d);
        // unit imaginary elements give orthogonal skew square roots of -Id
        for (int axis = 1; axis < d; ++axis) {
            const MatrixXd L = left_mult_operator(HyperNumber::unit(a, axis));
            CHECK((L * L + id).norm() < 1e-12);
            CHECK((L + L.transpose()).norm() < 1e-12);
            CHECK((L * L.transpose() - id).norm() < 1e-12);
        }
        // the matrix really is the left product
        for (int it = 0; it < 50; ++it) {
            const HyperNumber u = random_hyper(a, rng), x = random_hyper(a, rng);
            CHECK((left_mult_operator(u) * x.coords - multiply(u, x).coords).norm() < 1e-12);
            CHECK((right_mult_operator(u) * x.coords - multiply(x, u).coords).norm() < 1e-12);
        }
    }
}

TEST_CASE("left multiplications by orthogonal imaginary units anticommute") {
    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int it = 0; it < 50; ++it) {
        VectorXd u = VectorXd::Zero(8), v = VectorXd::Zero(8);
        for (int i = 1; i < 8; ++i) {
            u[i] = gauss(rng);
            v[i] = gauss(rng);
        }
        v -= u * (u.dot(v) / u.squaredNorm());
        u.normalize();
        v.normalize();
        const MatrixXd Lu = left_mult_operator(HyperNumber(Algebra::Octonion, u));
        const MatrixXd Lv = left_mult_operator(HyperNumber(Algebra::Octonion, v));
        CHECK((Lu * Lv + Lv * Lu).norm() < 1e-10);
    }
}

TEST_CASE("hermitian form signature and supports") {
    // single entry z = w = 1 in the timelike slot: value -1
    const std::vector<HyperNumber> z = {HyperNumber::one(Algebra::Quaternion)};
    const HyperNumber val = hermitian_form(z, z, 1);
    CHECK(val.coords[0] == doctest::Approx(-1.0));
    CHECK(val.coords.tail(3).norm() < 1e-15);
    // disjoint supports pair to zero
    const std::vector<HyperNumber> a = {HyperNumber::one(Algebra::Complex),
                                        HyperNumber::zero(Algebra::Complex)};
    const std::vector<HyperNumber> b = {HyperNumber::zero(Algebra::Complex),
                                        HyperNumber::unit(Algebra::Complex, 1)};
    CHECK(hermitian_form(a, b, 1).coords.norm() < 1e-15);
}

TEST_CASE("real part of the hermitian form is the realified scalar product") {
    std::mt19937_64 rng(kSeed);
    for (Algebra alg : {Algebra::Complex, Algebra::Quaternion, Algebra::Octonion}) {
        const int d = algebra_dim(alg);
        for (int it = 0; it < 100; ++it) {
            std::vector<HyperNumber> z, w;
            for (int i = 0; i < 3; ++i) {
                z.push_back(random_hyper(alg, rng));
                w.push_back(random_hyper(alg, rng));
            }
            const ScalarProduct g(3 * d, d); // index-1 hermitian form realified
            const double re = hermitian_form(z, w, 1).real_part();
            CHECK(re == doctest::Approx(g.ip(realify(z), realify(w))).epsilon(1e-12));
        }
    }
}

TEST_CASE("realify round trips") {
    std::mt19937_64 rng(kSeed);
    std::vector<HyperNumber> z;
    for (int i = 0; i < 4; ++i) z.push_back(random_hyper(Algebra::Quaternion, rng));
    const std::vector<HyperNumber> back = unrealify(realify(z), Algebra::Quaternion);
    REQUIRE(back.size() == z.size());
    for (size_t i = 0; i < z.size(); ++i) CHECK((back[i].coords - z[i].coords).norm() == 0.0);
}
