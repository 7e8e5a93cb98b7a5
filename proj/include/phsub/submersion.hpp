#pragma once

#include <random>
#include <string>
#include <vector>

#include "phsub/model_spaces.hpp"

namespace phsub {

// The five canonical submersions, all realized on real quadrics upstairs:
//   ThetaCircle(m,s):          H^{2m+1}_{2s+1} -> CH^m_s
//   ComplexHopf(k):            H^{2k+1}_1      -> CH^k
//   QuaternionicHopf(k):       H^{4k+3}_3      -> HH^k
//   OctonionicHopf:            H^15_7          -> H^8(-4)
//   ComplexToQuaternionic(k):  CH^{2k+1}_1     -> HH^k, computed entirely in
//                              H^{4k+3}_3 through the circle submersion theta.
enum class SubmersionKind {
    ThetaCircle,
    ComplexHopf,
    QuaternionicHopf,
    OctonionicHopf,
    ComplexToQuaternionic,
};

struct SubmersionModel {
    SubmersionKind kind = SubmersionKind::ComplexHopf;
    int m = 0; // ThetaCircle only
    int s = 0; // ThetaCircle only
    int k = 1; // Hopf parameter

    static SubmersionModel theta_circle(int m, int s);
    static SubmersionModel complex_hopf(int k);
    static SubmersionModel quaternionic_hopf(int k);
    static SubmersionModel octonionic_hopf();
    static SubmersionModel complex_to_quaternionic(int k);

    int total_dim() const;   // dim of the total space M
    int total_index() const; // metric index of M
    int fibre_dim() const;   // r
    int base_dim() const;    // n
    bool riemannian_base() const;

    // The real quadric carrying the computation (for ComplexToQuaternionic
    // this is H^{4k+3}_3 upstairs, not the total space itself).
    ScalarProduct ambient() const;
    ScalarProduct base_ambient() const;

    std::string name() const;
    std::string params() const;
};

struct SplitFrame {
    VectorXd point;
    PseudoFrame vertical;   // r vectors, squared norm -1 each
    PseudoFrame horizontal; // n vectors
};

struct BasePoint {
    SubmersionKind kind = SubmersionKind::ComplexHopf;
    VectorXd rep;
};

bool on_total(const SubmersionModel& model, const VectorXd& p, double tol = 1e-8);
VectorXd sample_total_point(const SubmersionModel& model, std::mt19937_64& rng);

BasePoint project(const SubmersionModel& model, const VectorXd& p);
bool base_points_equal(const SubmersionModel& model, const BasePoint& a, const BasePoint& b,
                       double tol = 1e-9);

// Pushforward: exact Jacobian for the octonionic polynomial map, gauge-fixed
// horizontal transport for the quotient models.
VectorXd differential(const SubmersionModel& model, const VectorXd& p, const VectorXd& w);

SplitFrame split_frame(const SubmersionModel& model, const VectorXd& p);

// O'Neill A on horizontal pairs: the vertical part of the ambient derivative
// of the horizontal-projector extension of Y along X.
VectorXd a_tensor(const SubmersionModel& model, const VectorXd& p, const VectorXd& X,
                  const VectorXd& Y);

// A_X V: horizontal part of the derivative of the horizontal-projector
// extension of X along the vertical direction V.
VectorXd a_tensor_adjoint(const SubmersionModel& model, const VectorXd& p, const VectorXd& X,
                          const VectorXd& V);

// Second fundamental form of the fibre; vanishes for all five models.
VectorXd t_tensor(const SubmersionModel& model, const VectorXd& p, const VectorXd& U,
                  const VectorXd& V);

// One skew structure phi_a = A_. v_a of the horizontal space per unit
// timelike vertical direction, as ambient matrices supported on the
// horizontal subspace.  With orient=true and odd fibre dimension >= 3 the
// last vertical vector is negated if needed so the volume product acts by
// +Id.
std::vector<MatrixXd> base_structures(const SubmersionModel& model, const VectorXd& p,
                                      bool orient = true);

struct HolonomyTransport {
    VectorXd moved_point;
    MatrixXd map; // ambient isometry carrying H_p onto H_{p(t)}
};

// Fibre motion under the structure group: circle angle t, or rotation by
// exp(t e_axis) for the quaternionic kinds.  Unsupported for the octonionic
// model.
HolonomyTransport holonomy_transport(const SubmersionModel& model, const VectorXd& p, double t,
                                     int axis = 1);

// Curvature of the total space at p (constant curvature -1, or the
// holomorphic -4 tensor for the ComplexToQuaternionic total space).
double total_curvature(const SubmersionModel& model, const VectorXd& p, const VectorXd& X,
                       const VectorXd& Y, const VectorXd& Z, const VectorXd& W);

// Intrinsic curvature quartic of the fibre through p, from the fibre's own
// closed form (H^r_r, or the complex fibre for ComplexToQuaternionic).
double fibre_curvature_quartic(const SubmersionModel& model, const VectorXd& p, const VectorXd& U,
                               const VectorXd& V);

// A recomputed with a different admissible horizontal extension: the constant
// vector Y is replaced by Y + extra with extra in the vertical/normal
// complement at p.  Used by the tensoriality check.
VectorXd a_tensor_extended(const SubmersionModel& model, const VectorXd& p, const VectorXd& X,
                           const VectorXd& Y, const VectorXd& extra);

// Finite-difference oracle for a_tensor: central differences at step h with
// one Richardson level, built from pointwise frames rather than the analytic
// projector derivative.
VectorXd a_tensor_fd(const SubmersionModel& model, const VectorXd& p, const VectorXd& X,
                     const VectorXd& Y, double h = 1e-5);

// || v (nabla_Z A)_X Y || estimated by finite differences; zero for the
// constant-curvature total spaces.
double nabla_a_vertical_fd(const SubmersionModel& model, const VectorXd& p, const VectorXd& Z,
                           const VectorXd& X, const VectorXd& Y, double h = 1e-5);

namespace testhooks {
// Rescales the projector-derivative term inside a_tensor (and the adjoint to
// match).  Exists only so the verification suite can prove it detects seeded
// faults; a pure sign flip would be invisible to the quadratic identities.
extern bool corrupt_a_tensor;
} // namespace testhooks

} // namespace phsub
