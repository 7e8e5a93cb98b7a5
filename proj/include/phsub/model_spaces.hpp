#pragma once

#include <random>
#include <vector>

#include "phsub/division.hpp"
#include "phsub/indefinite.hpp"

namespace phsub {

// The quadric <x,x> = radius_sq in R^{m+1} with index-(s+1) scalar product.
// Constant sectional curvature 1/radius_sq.
struct PseudoHyperbolicSpace {
    int m = 1;
    int s = 0;
    double radius_sq = -1.0;

    PseudoHyperbolicSpace(int m_, int s_, double radius_sq_ = -1.0);

    ScalarProduct ambient() const { return ScalarProduct(m + 1, s + 1); }
    double curvature() const { return 1.0 / radius_sq; }
};

bool contains(const PseudoHyperbolicSpace& space, const VectorXd& p, double tol = 1e-10);

// Deterministic point on the quadric: Gaussian draw, then the time block is
// rescaled to solve -|x_t|^2 + |x_s|^2 = radius_sq exactly.
VectorXd sample_point(const PseudoHyperbolicSpace& space, std::mt19937_64& rng);

// Pseudo-orthonormal frame of T_p = p^perp: exactly s timelike vectors.
PseudoFrame tangent_basis(const PseudoHyperbolicSpace& space, const VectorXd& p);

// cosh/cos flow along a unit tangent; null directions are unsupported.
VectorXd geodesic(const PseudoHyperbolicSpace& space, const VectorXd& p, const VectorXd& v,
                  double t);

// Constant-curvature tensor c(<X,Z><Y,W> - <X,W><Y,Z>); all four arguments
// must be tangent at p.
double curvature_total(const PseudoHyperbolicSpace& space, const VectorXd& p, const VectorXd& X,
                       const VectorXd& Y, const VectorXd& Z, const VectorXd& W,
                       double tol = 1e-8);

// The quotient {(z,z) = -1}/S^1 in C^{m+1} with complex index s+1, handled
// through representatives on the real quadric upstairs.
struct ComplexPseudoHyperbolicSpace {
    int m = 1;
    int s = 0;

    ComplexPseudoHyperbolicSpace(int m_, int s_);

    // Realified ambient: R^{2m+2} of index 2s+2.
    ScalarProduct ambient() const { return ScalarProduct(2 * m + 2, 2 * s + 2); }
    // Realified multiplication by i (the complex structure upstairs).
    MatrixXd complex_structure() const;
};

bool contains(const ComplexPseudoHyperbolicSpace& space, const VectorXd& z, double tol = 1e-10);

// Indefinite Kaehler curvature with holomorphic sectional curvature -4,
// polarized: -[<X,Z><Y,W> - <X,W><Y,Z> + <JX,Z><JY,W> - <JX,W><JY,Z>
//             + 2<JX,Y><JZ,W>].
double curvature_complex(const ScalarProduct& g, const MatrixXd& J, const VectorXd& X,
                         const VectorXd& Y, const VectorXd& Z, const VectorXd& W);

enum class BaseKind { RealHyperbolic4, ComplexHyperbolic, QuaternionicHyperbolic, CayleyPlane };

const char* base_kind_name(BaseKind kind);

// A rank-one curvature model on a positive-definite space: the closed-form
// quartic together with its 0, 1, 3 or 7 skew anticommuting structures.
struct BaseCurvatureModel {
    BaseKind kind = BaseKind::RealHyperbolic4;
    int dim = 0;
    std::vector<MatrixXd> structures;

    BaseCurvatureModel(BaseKind kind_, int dim_, std::vector<MatrixXd> structures_);
};

// Standard models: J on R^{2k}, right I/J/K on R^{4k}, the Cayley structures
// on R^16, or no structure for RealHyperbolic4.
BaseCurvatureModel make_base_model(BaseKind kind, int dim);

// Case-appropriate quartic R'(X,Y,X,Y):
//   RealHyperbolic4:  -4(g g - g^2)
//   otherwise:        -(g g - g^2 + 3 sum_a g(S_a X, Y)^2)
// evaluated in the Euclidean metric of the model space.
double curvature_base_quartic(const BaseCurvatureModel& model, const VectorXd& X,
                              const VectorXd& Y);

// Same quartic against an explicit metric (used when the model lives on a
// horizontal subspace carrying a restricted ambient form).
double curvature_base_quartic(BaseKind kind, const std::vector<MatrixXd>& structures,
                              const ScalarProduct& g, const VectorXd& X, const VectorXd& Y);

// Seven anticommuting skew complex structures on R^16, built as two-block
// left multiplications by the imaginary octonion units.
std::vector<MatrixXd> cayley_structures();

} // namespace phsub
