#include "phsub/clifford.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace phsub {

namespace {

const char* field_name(BaseField f) {
    switch (f) {
        case BaseField::Real: return "R";
        case BaseField::Complex: return "C";
        case BaseField::Quaternion: return "H";
    }
    return "?";
}

int field_dim(BaseField f) {
    switch (f) {
        case BaseField::Real: return 1;
        case BaseField::Complex: return 2;
        case BaseField::Quaternion: return 4;
    }
    return 0;
}

void check_signature(const CliffordSignature& sig) {
    if (sig.p < 0 || sig.q < 0 || sig.p + sig.q > 12)
        throw ConfigError("CliffordSignature: need p, q >= 0 and p + q <= 12");
}

} // namespace

std::string AlgebraClass::to_string() const {
    const std::string one =
        size == 1 ? field_name(field)
                  : "M(" + std::to_string(size) + "," + field_name(field) + ")";
    return summands == 2 ? one + " + " + one : one;
}

AlgebraClass classify(const CliffordSignature& sig) {
    check_signature(sig);
    const int r = ((sig.p - sig.q) % 8 + 8) % 8;
    AlgebraClass out;
    switch (r) {
        case 0:
        case 2: out = {BaseField::Real, 0, 1}; break;
        case 1: out = {BaseField::Real, 0, 2}; break;
        case 3:
        case 7: out = {BaseField::Complex, 0, 1}; break;
        case 4:
        case 6: out = {BaseField::Quaternion, 0, 1}; break;
        case 5: out = {BaseField::Quaternion, 0, 2}; break;
    }
    const double total = std::pow(2.0, sig.p + sig.q);
    out.size = static_cast<int>(std::lround(std::sqrt(total / (out.summands * field_dim(out.field)))));
    return out;
}

int irreducible_dimension(const CliffordSignature& sig) {
    if (sig.p != 0) throw ConfigError("irreducible_dimension: defined for p = 0 signatures");
    const AlgebraClass cls = classify(sig);
    return cls.size * field_dim(cls.field);
}

CliffordAction make_action(std::vector<MatrixXd> generators) {
    if (generators.empty()) throw ConfigError("make_action: need at least one generator");
    CliffordAction action;
    action.dim = static_cast<int>(generators[0].rows());
    action.signature = {0, static_cast<int>(generators.size())};
    check_signature(action.signature);
    const MatrixXd id = MatrixXd::Identity(action.dim, action.dim);
    for (size_t a = 0; a < generators.size(); ++a) {
        const MatrixXd& A = generators[a];
        if (A.rows() != action.dim || A.cols() != action.dim)
            throw ConfigError("make_action: generator dimension mismatch");
        if ((A + A.transpose()).norm() > 1e-10)
            throw DomainError("make_action: generator " + std::to_string(a) + " is not skew");
        for (size_t b = 0; b <= a; ++b) {
            const MatrixXd anti = A * generators[b] + generators[b] * A;
            const MatrixXd want = (a == b) ? MatrixXd(-2.0 * id) : MatrixXd::Zero(action.dim, action.dim);
            if ((anti - want).norm() > 1e-8)
                throw DomainError("make_action: anticommutation relation fails for generators " +
                                  std::to_string(a) + "," + std::to_string(b));
        }
    }
    action.generators = std::move(generators);
    return action;
}

CliffordAction action_from_submersion(const SubmersionModel& model, const VectorXd& p,
                                      bool orient) {
    if (!model.riemannian_base())
        throw ConfigError("action_from_submersion: needs a positive-definite horizontal space");
    const ScalarProduct g = model.ambient();
    const SplitFrame frame = split_frame(model, p);
    const std::vector<MatrixXd> phis = base_structures(model, p, orient);
    const int n = frame.horizontal.size();
    std::vector<MatrixXd> gens;
    for (const MatrixXd& phi : phis) {
        MatrixXd gen(n, n);
        for (int j = 0; j < n; ++j) {
            const VectorXd col = phi * frame.horizontal.vectors[j];
            for (int i = 0; i < n; ++i) gen(i, j) = g.ip(col, frame.horizontal.vectors[i]);
        }
        gens.push_back(gen);
    }
    return make_action(std::move(gens));
}

VolumeResult volume_action(const CliffordAction& action) {
    const int s = action.signature.q;
    if (s % 2 == 0) throw ConfigError("volume_action: volume element only classified for odd s");
    VolumeResult out;
    out.op = action.generators[0];
    for (int a = 1; a < s; ++a) out.op = out.op * action.generators[a];
    const MatrixXd id = MatrixXd::Identity(action.dim, action.dim);
    if ((out.op - id).norm() < 1e-8) out.sign = VolumeSign::PlusId;
    else if ((out.op + id).norm() < 1e-8) out.sign = VolumeSign::MinusId;
    else out.sign = VolumeSign::Other;
    return out;
}

namespace {

// Apply the ordered generator product indexed by the bitmask to v.
VectorXd orbit_vector(const CliffordAction& action, unsigned mask, const VectorXd& v) {
    VectorXd w = v;
    for (int a = 0; a < action.signature.q; ++a)
        if (mask & (1u << a)) w = action.generators[a] * w;
    return w;
}

} // namespace

std::vector<MatrixXd> decompose(const CliffordAction& action, std::mt19937_64& rng) {
    const int irr = irreducible_dimension(action.signature);
    if (action.dim % irr != 0)
        throw DegenerateSubspaceError("decompose: dimension not a multiple of the irreducible size");
    std::normal_distribution<double> gauss(0.0, 1.0);
    const unsigned subsets = 1u << action.signature.q;
    std::vector<MatrixXd> out;
    MatrixXd found(action.dim, 0);
    while (found.cols() < action.dim) {
        VectorXd v(action.dim);
        for (int i = 0; i < action.dim; ++i) v[i] = gauss(rng);
        if (found.cols() > 0) v -= found * (found.transpose() * v);
        if (v.norm() < 1e-6) continue;
        MatrixXd summand(action.dim, 0);
        for (unsigned mask = 0; mask < subsets; ++mask) {
            VectorXd w = orbit_vector(action, mask, v);
            if (found.cols() > 0) w -= found * (found.transpose() * w);
            if (summand.cols() > 0) w -= summand * (summand.transpose() * w);
            if (w.norm() > 1e-8) {
                summand.conservativeResize(Eigen::NoChange, summand.cols() + 1);
                summand.col(summand.cols() - 1) = w / w.norm();
            }
        }
        if (summand.cols() != irr)
            throw DegenerateSubspaceError("decompose: orbit dimension " +
                                          std::to_string(summand.cols()) +
                                          " does not match the irreducible size " +
                                          std::to_string(irr));
        for (const MatrixXd& gen : action.generators) {
            const MatrixXd img = gen * summand;
            if ((img - summand * (summand.transpose() * img)).norm() > 1e-8)
                throw DegenerateSubspaceError("decompose: summand not invariant");
        }
        out.push_back(summand);
        found.conservativeResize(Eigen::NoChange, found.cols() + irr);
        found.rightCols(irr) = summand;
    }
    return out;
}

namespace {

// Multiplicities of the +Id / -Id volume signs across the irreducible
// summands; only meaningful when the volume element squares to +Id.
std::pair<int, int> volume_multiplicities(const CliffordAction& action, std::mt19937_64& rng) {
    const MatrixXd vol = volume_action(action).op;
    int plus = 0, minus = 0;
    for (const MatrixXd& summand : decompose(action, rng)) {
        const MatrixXd restricted = summand.transpose() * vol * summand;
        const MatrixXd id = MatrixXd::Identity(restricted.rows(), restricted.cols());
        if ((restricted - id).norm() < 1e-8) ++plus;
        else if ((restricted + id).norm() < 1e-8) ++minus;
        else throw DegenerateSubspaceError("find_intertwiner: volume not scalar on a summand");
    }
    return {plus, minus};
}

} // namespace

IntertwinerResult find_intertwiner(const CliffordAction& a1, const CliffordAction& a2,
                                   std::mt19937_64& rng) {
    if (a1.signature.q != a2.signature.q || a1.dim != a2.dim)
        throw ConfigError("find_intertwiner: actions must share generator count and dimension");
    const int s = a1.signature.q;
    if (s % 4 == 3) {
        // omega^2 = +Id here, so the per-summand sign is the complete
        // equivalence invariant.
        if (volume_multiplicities(a1, rng) != volume_multiplicities(a2, rng))
            return {false, MatrixXd()};
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    const unsigned subsets = 1u << s;
    const int n = a1.dim;
    double best_residual = 1.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        MatrixXd F(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) F(i, j) = gauss(rng);
        // Group averaging over the finite group generated by the e_a; the
        // generators are orthogonal so inverse = transpose.
        MatrixXd L = MatrixXd::Zero(n, n);
        for (unsigned mask = 0; mask < subsets; ++mask) {
            MatrixXd r1 = MatrixXd::Identity(n, n), r2 = MatrixXd::Identity(n, n);
            for (int a = 0; a < s; ++a)
                if (mask & (1u << a)) {
                    r1 = a1.generators[a] * r1;
                    r2 = a2.generators[a] * r2;
                }
            L += r2 * F * r1.transpose();
        }
        Eigen::JacobiSVD<MatrixXd> svd(L, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues()(n - 1) < 1e-8 * svd.singularValues()(0)) continue;
        const MatrixXd U = svd.matrixU() * svd.matrixV().transpose();
        double residual = 0.0;
        for (int a = 0; a < s; ++a)
            residual = std::max(residual, (U * a1.generators[a] - a2.generators[a] * U).norm());
        best_residual = std::min(best_residual, residual);
        if (residual < 1e-8) return {true, U};
    }
    throw DegenerateSubspaceError(
        "find_intertwiner: averaging failed numerically (best residual " +
        std::to_string(best_residual) + "), not an inequivalence verdict");
}

Obstruction existence_obstruction(int s, int n, BaseKind base, bool complex_fibres) {
    auto obstructed = [](std::string why) { return Obstruction{false, std::move(why)}; };
    if (complex_fibres) {
        if (base == BaseKind::RealHyperbolic4 && n == 8)
            return obstructed(
                "the rank-9 index-1 Clifford algebra splits into two simple factors of real "
                "dimension 256, and a unital homomorphism into the 128-dimensional algebra of "
                "complex 8x8 matrices cannot exist");
        if (s == 2 && base == BaseKind::QuaternionicHyperbolic && n > 0 && n % 4 == 0)
            return {true, ""};
        return obstructed(
            "complex fibres: only real fibre dimension 2 over a quaternionic base of dimension "
            "4k is admissible");
    }
    if (s != 1 && s != 3 && s != 7)
        return obstructed("a fibre sphere of dimension " + std::to_string(s) +
                          " is not parallelizable; the fibre dimension must be 1, 3 or 7");
    const int irr = irreducible_dimension({0, s});
    if (n <= 0 || n % irr != 0)
        return obstructed("the irreducible module dimension " + std::to_string(irr) +
                          " does not divide the horizontal dimension " + std::to_string(n));
    switch (s) {
        case 1:
            if (base == BaseKind::ComplexHyperbolic) return {true, ""};
            return obstructed("fibre dimension 1 forces a complex-hyperbolic base");
        case 3:
            if (base == BaseKind::QuaternionicHyperbolic) return {true, ""};
            return obstructed("fibre dimension 3 forces a quaternionic-hyperbolic base");
        default:
            if (n == 8 && base == BaseKind::RealHyperbolic4) return {true, ""};
            if (n == 16 && base == BaseKind::CayleyPlane)
                return obstructed(
                    "the 16-dimensional horizontal space splits into simple 8-dimensional "
                    "modules, which is inconsistent with a fibre of dimension at least 4");
            return obstructed(
                "fibre dimension 7 forces an 8-dimensional base of constant curvature");
    }
}

} // namespace phsub
