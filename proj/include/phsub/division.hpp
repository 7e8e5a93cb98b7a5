#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phsub/errors.hpp"

namespace phsub {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class Algebra { Complex, Quaternion, Octonion };

int algebra_dim(Algebra a);

// An element of C, H or O over real coordinates.
//
// Basis convention (Cayley-Dickson doubling from C with the product
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) at every level):
//   quaternions: 1, i, j, k = ij          coords (x0,x1,x2,x3)
//   octonions:   1, e1=i, e2=j, e3=k, e4, e5=e1 e4, e6=e2 e4, e7=e3 e4
// Downstream code relies only on the composition-algebra identities, not on
// this particular table.
struct HyperNumber {
    Algebra algebra = Algebra::Complex;
    VectorXd coords;

    HyperNumber() : coords(VectorXd::Zero(2)) {}
    HyperNumber(Algebra a, VectorXd c);

    static HyperNumber zero(Algebra a);
    static HyperNumber one(Algebra a);
    static HyperNumber unit(Algebra a, int axis); // basis element e_axis
    static HyperNumber real(Algebra a, double t);

    double real_part() const { return coords[0]; }
    double norm() const { return coords.norm(); }
    int dim() const { return static_cast<int>(coords.size()); }
};

HyperNumber multiply(const HyperNumber& a, const HyperNumber& b);
HyperNumber conjugate(const HyperNumber& a);
HyperNumber add(const HyperNumber& a, const HyperNumber& b);
HyperNumber scale(const HyperNumber& a, double t);

// Matrix of x -> u*x on R^{2,4,8}.
MatrixXd left_mult_operator(const HyperNumber& u);
// Matrix of x -> x*u.
MatrixXd right_mult_operator(const HyperNumber& u);

// -sum_{i<index} z_i conj(w_i) + sum_{i>=index} z_i conj(w_i).
// Conjugation sits on the second argument.
HyperNumber hermitian_form(const std::vector<HyperNumber>& z,
                           const std::vector<HyperNumber>& w, int index);

// Realification: concatenated coordinate blocks, one block per entry, so an
// index-(s+1) hermitian form realifies to the index-d(s+1) scalar product.
VectorXd realify(const std::vector<HyperNumber>& z);
std::vector<HyperNumber> unrealify(const VectorXd& v, Algebra a);

} // namespace phsub
