#include "phsub/model_spaces.hpp"

#include <cmath>

namespace phsub {

PseudoHyperbolicSpace::PseudoHyperbolicSpace(int m_, int s_, double radius_sq_)
    : m(m_), s(s_), radius_sq(radius_sq_) {
    if (m < 1 || s < 0 || s > m) throw ConfigError("PseudoHyperbolicSpace: need 0 <= s <= m");
    if (radius_sq >= 0.0) throw ConfigError("PseudoHyperbolicSpace: radius_sq must be negative");
}

bool contains(const PseudoHyperbolicSpace& space, const VectorXd& p, double tol) {
    const ScalarProduct g = space.ambient();
    if (p.size() != g.dim) throw ContextError("contains: dimension mismatch");
    return std::abs(g.ip(p, p) - space.radius_sq) < tol;
}

VectorXd sample_point(const PseudoHyperbolicSpace& space, std::mt19937_64& rng) {
    const ScalarProduct g = space.ambient();
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        VectorXd p(g.dim);
        for (int i = 0; i < g.dim; ++i) p[i] = gauss(rng);
        const double space_sq = p.tail(g.dim - g.index).squaredNorm();
        const double time_sq = p.head(g.index).squaredNorm();
        const double need = space_sq - space.radius_sq; // > 0 always
        if (time_sq < 1e-12) continue;
        p.head(g.index) *= std::sqrt(need / time_sq);
        return p;
    }
    throw DomainError("sample_point: degenerate draws exhausted retry budget");
}

PseudoFrame tangent_basis(const PseudoHyperbolicSpace& space, const VectorXd& p) {
    const ScalarProduct g = space.ambient();
    if (!contains(space, p, 1e-8)) throw DomainError("tangent_basis: point not on quadric");
    const double c = space.radius_sq;
    std::vector<VectorXd> candidates;
    for (int i = 0; i < g.dim; ++i) {
        VectorXd e = VectorXd::Unit(g.dim, i);
        candidates.push_back(e - (g.ip(e, p) / c) * p);
    }
    PseudoFrame frame = gram_schmidt(candidates, g, 1e-9, /*pivot=*/true);
    if (frame.size() != space.m)
        throw DegenerateSubspaceError("tangent_basis: expected rank " + std::to_string(space.m));
    return frame;
}

VectorXd geodesic(const PseudoHyperbolicSpace& space, const VectorXd& p, const VectorXd& v,
                  double t) {
    const ScalarProduct g = space.ambient();
    if (!contains(space, p, 1e-8)) throw DomainError("geodesic: point not on quadric");
    if (std::abs(g.ip(p, v)) > 1e-8) throw DomainError("geodesic: direction not tangent");
    const double vv = g.ip(v, v);
    if (std::abs(vv) < 1e-9) throw DomainError("geodesic: null directions unsupported");
    const double omega = std::sqrt(-1.0 / space.radius_sq);
    if (vv > 0.0) return std::cosh(omega * t) * p + (std::sinh(omega * t) / omega) * v;
    return std::cos(omega * t) * p + (std::sin(omega * t) / omega) * v;
}

namespace {
void require_tangent(const ScalarProduct& g, const VectorXd& p, const VectorXd& X, double tol) {
    if (std::abs(g.ip(p, X)) > tol) throw DomainError("curvature: argument not tangent at p");
}
} // namespace

double curvature_total(const PseudoHyperbolicSpace& space, const VectorXd& p, const VectorXd& X,
                       const VectorXd& Y, const VectorXd& Z, const VectorXd& W, double tol) {
    const ScalarProduct g = space.ambient();
    for (const VectorXd* a : {&X, &Y, &Z, &W}) require_tangent(g, p, *a, tol);
    const double c = space.curvature();
    return c * (g.ip(X, Z) * g.ip(Y, W) - g.ip(X, W) * g.ip(Y, Z));
}

ComplexPseudoHyperbolicSpace::ComplexPseudoHyperbolicSpace(int m_, int s_) : m(m_), s(s_) {
    if (m < 1 || s < 0 || s > m)
        throw ConfigError("ComplexPseudoHyperbolicSpace: need 0 <= s <= m");
}

MatrixXd ComplexPseudoHyperbolicSpace::complex_structure() const {
    const int n = 2 * m + 2;
    MatrixXd J = MatrixXd::Zero(n, n);
    for (int b = 0; b < n / 2; ++b) {
        J(2 * b, 2 * b + 1) = -1.0;
        J(2 * b + 1, 2 * b) = 1.0;
    }
    return J;
}

bool contains(const ComplexPseudoHyperbolicSpace& space, const VectorXd& z, double tol) {
    const ScalarProduct g = space.ambient();
    if (z.size() != g.dim) throw ContextError("contains: dimension mismatch");
    return std::abs(g.ip(z, z) + 1.0) < tol;
}

double curvature_complex(const ScalarProduct& g, const MatrixXd& J, const VectorXd& X,
                         const VectorXd& Y, const VectorXd& Z, const VectorXd& W) {
    const VectorXd JX = J * X, JY = J * Y, JZ = J * Z;
    return -(g.ip(X, Z) * g.ip(Y, W) - g.ip(X, W) * g.ip(Y, Z) + g.ip(JX, Z) * g.ip(JY, W) -
             g.ip(JX, W) * g.ip(JY, Z) + 2.0 * g.ip(JX, Y) * g.ip(JZ, W));
}

const char* base_kind_name(BaseKind kind) {
    switch (kind) {
        case BaseKind::RealHyperbolic4: return "real-hyperbolic";
        case BaseKind::ComplexHyperbolic: return "complex-hyperbolic";
        case BaseKind::QuaternionicHyperbolic: return "quaternionic-hyperbolic";
        case BaseKind::CayleyPlane: return "cayley-plane";
    }
    return "?";
}

namespace {
int expected_structures(BaseKind kind) {
    switch (kind) {
        case BaseKind::RealHyperbolic4: return 0;
        case BaseKind::ComplexHyperbolic: return 1;
        case BaseKind::QuaternionicHyperbolic: return 3;
        case BaseKind::CayleyPlane: return 7;
    }
    return -1;
}
} // namespace

BaseCurvatureModel::BaseCurvatureModel(BaseKind kind_, int dim_, std::vector<MatrixXd> structures_)
    : kind(kind_), dim(dim_), structures(std::move(structures_)) {
    if (static_cast<int>(structures.size()) != expected_structures(kind))
        throw ConfigError("BaseCurvatureModel: structure list length inconsistent with kind");
    for (const MatrixXd& S : structures)
        if (S.rows() != dim || S.cols() != dim)
            throw ConfigError("BaseCurvatureModel: structure dimension mismatch");
}

BaseCurvatureModel make_base_model(BaseKind kind, int dim) {
    std::vector<MatrixXd> structures;
    switch (kind) {
        case BaseKind::RealHyperbolic4:
            break;
        case BaseKind::ComplexHyperbolic: {
            if (dim % 2 != 0) throw ConfigError("make_base_model: complex model needs even dim");
            MatrixXd J = MatrixXd::Zero(dim, dim);
            for (int b = 0; b < dim / 2; ++b) {
                J(2 * b, 2 * b + 1) = -1.0;
                J(2 * b + 1, 2 * b) = 1.0;
            }
            structures.push_back(J);
            break;
        }
        case BaseKind::QuaternionicHyperbolic: {
            if (dim % 4 != 0) throw ConfigError("make_base_model: quaternionic model needs dim 4k");
            for (int axis = 1; axis <= 3; ++axis) {
                const MatrixXd R =
                    right_mult_operator(HyperNumber::unit(Algebra::Quaternion, axis));
                MatrixXd S = MatrixXd::Zero(dim, dim);
                for (int b = 0; b < dim / 4; ++b) S.block(4 * b, 4 * b, 4, 4) = R;
                structures.push_back(S);
            }
            break;
        }
        case BaseKind::CayleyPlane: {
            if (dim != 16) throw ConfigError("make_base_model: Cayley model lives on R^16");
            structures = cayley_structures();
            break;
        }
    }
    return BaseCurvatureModel(kind, dim, std::move(structures));
}

double curvature_base_quartic(const BaseCurvatureModel& model, const VectorXd& X,
                              const VectorXd& Y) {
    const ScalarProduct g(model.dim, 0);
    return curvature_base_quartic(model.kind, model.structures, g, X, Y);
}

double curvature_base_quartic(BaseKind kind, const std::vector<MatrixXd>& structures,
                              const ScalarProduct& g, const VectorXd& X, const VectorXd& Y) {
    if (static_cast<int>(structures.size()) != expected_structures(kind))
        throw ConfigError("curvature_base_quartic: structure list length inconsistent with kind");
    const double plane = g.ip(X, X) * g.ip(Y, Y) - g.ip(X, Y) * g.ip(X, Y);
    if (kind == BaseKind::RealHyperbolic4) return -4.0 * plane;
    double acc = plane;
    for (const MatrixXd& S : structures) {
        const double t = g.ip(S * X, Y);
        acc += 3.0 * t * t;
    }
    return -acc;
}

std::vector<MatrixXd> cayley_structures() {
    std::vector<MatrixXd> out;
    for (int axis = 1; axis <= 7; ++axis) {
        const MatrixXd L = left_mult_operator(HyperNumber::unit(Algebra::Octonion, axis));
        MatrixXd S = MatrixXd::Zero(16, 16);
        S.block(0, 0, 8, 8) = L;
        S.block(8, 8, 8, 8) = -L;
        out.push_back(S);
    }
    return out;
}

} // namespace phsub
