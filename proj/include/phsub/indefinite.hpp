#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phsub/errors.hpp"

namespace phsub {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Diagonal symmetric bilinear form diag(-1,...,-1,+1,...,+1) on R^dim with
// `index` leading negative directions.  Negative directions come first
// throughout the library.
struct ScalarProduct {
    int dim = 0;
    int index = 0;

    ScalarProduct() = default;
    ScalarProduct(int dim_, int index_);

    double ip(const VectorXd& x, const VectorXd& y) const;

    // G x, with G the Gram matrix of the form.
    VectorXd apply(const VectorXd& x) const;
    MatrixXd gram() const;

    bool operator==(const ScalarProduct& o) const { return dim == o.dim && index == o.index; }
    bool operator!=(const ScalarProduct& o) const { return !(*this == o); }
};

// A coordinate vector carrying its scalar-product context.
struct AmbientVector {
    VectorXd coords;
    ScalarProduct context;

    AmbientVector() = default;
    AmbientVector(VectorXd c, ScalarProduct ctx);
};

double scalar_product(const AmbientVector& x, const AmbientVector& y);

// A pseudo-orthonormal family: |<u_i,u_j>| = delta_ij, with the causal sign
// <u_i,u_i> in {-1,+1} recorded per vector.
struct PseudoFrame {
    std::vector<VectorXd> vectors;
    std::vector<int> signs;

    int size() const { return static_cast<int>(vectors.size()); }
    int count_timelike() const;
};

// Indefinite Gram-Schmidt.  With pivot=true the input order is relaxed and at
// each step the candidate with the largest remaining |<u,u>| is taken; inputs
// whose residual is numerically zero are dropped instead of raising.
PseudoFrame gram_schmidt(const std::vector<VectorXd>& vectors, const ScalarProduct& form,
                         double tol = 1e-9, bool pivot = false);

// Orthogonal projection onto span of a pseudo-orthonormal frame:
// P x = sum_i sign_i <x,u_i> u_i.
VectorXd project_onto(const VectorXd& x, const PseudoFrame& basis, const ScalarProduct& form);

struct KernelResult {
    int dimension = 0;
    MatrixXd basis; // columns: orthonormal eigenbasis of the near-null eigenspace
};

// Kernel of a symmetric form via eigen-decomposition: eigenvalues with
// |lambda| < tol count as null.  Raises ToleranceAmbiguityError when any
// |lambda| lands inside [tol/10, tol*10].
KernelResult form_kernel(const MatrixXd& symmetric, double tol = 1e-9);

} // namespace phsub
