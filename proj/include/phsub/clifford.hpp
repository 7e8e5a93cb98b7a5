#pragma once

#include <random>
#include <string>
#include <vector>

#include "phsub/submersion.hpp"

namespace phsub {

// Cl_{p,q}: p generators squaring to +1, q squaring to -1.
struct CliffordSignature {
    int p = 0;
    int q = 0;
};

enum class BaseField { Real, Complex, Quaternion };

// Isomorphism class of Cl_{p,q}: `summands` copies of size x size matrices
// over `field`, with summands * size^2 * dim(field) = 2^{p+q}.
struct AlgebraClass {
    BaseField field = BaseField::Real;
    int size = 1;
    int summands = 1;

    std::string to_string() const;
};

AlgebraClass classify(const CliffordSignature& sig);

// Real dimension of an irreducible Cl_{0,q} module.
int irreducible_dimension(const CliffordSignature& sig);

// Skew orthogonal generators on R^n with phi_a phi_b + phi_b phi_a =
// -2 delta_ab Id, i.e. a Cl_{0,s} module structure.
struct CliffordAction {
    std::vector<MatrixXd> generators;
    CliffordSignature signature;
    int dim = 0;
};

// Validates the anticommutation and skewness invariants.
CliffordAction make_action(std::vector<MatrixXd> generators);

// Generators phi_a = A_. v_a of the horizontal space at p, expressed in the
// orthonormal horizontal frame of split_frame.
CliffordAction action_from_submersion(const SubmersionModel& model, const VectorXd& p,
                                      bool orient = true);

enum class VolumeSign { PlusId, MinusId, Other };

struct VolumeResult {
    VolumeSign sign = VolumeSign::Other;
    MatrixXd op; // the composed product phi_1 ... phi_s
};

// Classifies the product of all generators against +-Id; s must be odd.
VolumeResult volume_action(const CliffordAction& action);

// Orthogonal decomposition into invariant subspaces of irreducible
// dimension; each entry holds an orthonormal basis as columns.
std::vector<MatrixXd> decompose(const CliffordAction& action, std::mt19937_64& rng);

struct IntertwinerResult {
    bool equivalent = false;
    MatrixXd map; // orthogonal L with L phi1_a = phi2_a L, when equivalent
};

// Equivariant orthogonal map between two actions, or inequivalence.  The
// inequivalent verdict is issued only on the volume-sign multiplicity
// criterion; numerical breakdown raises instead.
IntertwinerResult find_intertwiner(const CliffordAction& a1, const CliffordAction& a2,
                                   std::mt19937_64& rng);

struct Obstruction {
    bool admissible = false;
    std::string reason; // empty when admissible
};

// Whether a submersion with totally geodesic fibres of dimension s over an
// n-dimensional base of the given curvature kind can exist.  With
// complex_fibres=true, s is the real fibre dimension of a complex fibre.
Obstruction existence_obstruction(int s, int n, BaseKind base, bool complex_fibres = false);

} // namespace phsub
