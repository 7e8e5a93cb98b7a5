#include "phsub/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace phsub {

namespace {

constexpr const char* kVersion = "1.0.0";

std::normal_distribution<double> gauss(0.0, 1.0);

VectorXd combo(const PseudoFrame& f, std::mt19937_64& rng) {
    VectorXd v = VectorXd::Zero(f.vectors[0].size());
    for (const VectorXd& u : f.vectors) v += gauss(rng) * u;
    return v;
}

// Unit vector from the frame span; want = +1 / -1 pins the causal character,
// 0 accepts either.  Bounded redraws on degenerate (near-null) draws.
VectorXd unit_combo(const PseudoFrame& f, const ScalarProduct& g, std::mt19937_64& rng,
                    int want = 0) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        VectorXd v = combo(f, rng);
        const double q = g.ip(v, v);
        if (std::abs(q) < 1e-6) continue;
        if (want != 0 && (q > 0) != (want > 0)) continue;
        return v / std::sqrt(std::abs(q));
    }
    throw DegenerateSubspaceError("unit_combo: redraw budget exhausted");
}

BaseKind base_kind_of(const SubmersionModel& model) {
    switch (model.kind) {
        case SubmersionKind::ThetaCircle:
        case SubmersionKind::ComplexHopf: return BaseKind::ComplexHyperbolic;
        case SubmersionKind::QuaternionicHopf:
        case SubmersionKind::ComplexToQuaternionic: return BaseKind::QuaternionicHyperbolic;
        case SubmersionKind::OctonionicHopf: return BaseKind::RealHyperbolic4;
    }
    throw ConfigError("base_kind_of: unknown kind");
}

// The A-derived structure system at p, completed to a full curvature model:
// for ComplexToQuaternionic the third quaternionic structure is the total
// space's own complex structure, which A cannot see.
std::pair<BaseKind, std::vector<MatrixXd>> derived_quartic(const SubmersionModel& model,
                                                           const VectorXd& p) {
    std::vector<MatrixXd> structures = base_structures(model, p);
    if (model.kind == SubmersionKind::ComplexToQuaternionic) {
        const MatrixXd J = make_base_model(BaseKind::QuaternionicHyperbolic,
                                           model.ambient().dim)
                               .structures[0];
        structures.insert(structures.begin(), J);
    }
    BaseKind kind;
    switch (structures.size()) {
        case 0: kind = BaseKind::RealHyperbolic4; break;
        case 1: kind = BaseKind::ComplexHyperbolic; break;
        case 3: kind = BaseKind::QuaternionicHyperbolic; break;
        case 7: kind = BaseKind::CayleyPlane; break;
        default: throw ConfigError("derived_quartic: unexpected structure count");
    }
    return {kind, std::move(structures)};
}

int expected_kernel_dim(const SubmersionModel& model) {
    switch (model.kind) {
        case SubmersionKind::ThetaCircle: return 2 * model.m - 1;
        case SubmersionKind::ComplexHopf: return 2 * model.k - 1;
        case SubmersionKind::QuaternionicHopf: return 4 * model.k - 3;
        case SubmersionKind::OctonionicHopf: return 1;
        case SubmersionKind::ComplexToQuaternionic: return 4 * model.k - 2;
    }
    return -1;
}

using CheckFn = std::function<double(const SubmersionModel&, int, std::mt19937_64&)>;

double check_axiom_c(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    const ScalarProduct gb = model.base_ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        const VectorXd dX = differential(model, p, X), dY = differential(model, p, Y);
        worst = std::max(worst, std::abs(gb.ip(dX, dY) - g.ip(X, Y)));
        worst = std::max(worst, differential(model, p, combo(f.vertical, rng)).norm());
    }
    return worst;
}

double check_t_zero(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd U = combo(f.vertical, rng), V = combo(f.vertical, rng);
        worst = std::max(worst, t_tensor(model, p, U, V).norm());
        worst = std::max(worst, t_tensor(model, p, U, U).norm());
    }
    return worst;
}

double check_lemma3a(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd U = combo(f.vertical, rng), V = combo(f.vertical, rng);
        worst = std::max(worst, std::abs(fibre_curvature_quartic(model, p, U, V) -
                                         total_curvature(model, p, U, V, U, V)));
    }
    return worst;
}

double check_lemma3b(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = unit_combo(f.horizontal, g, rng);
        const VectorXd U = unit_combo(f.vertical, g, rng, -1);
        const VectorXd AXU = a_tensor_adjoint(model, p, X, U);
        const double q = g.ip(AXU, AXU);
        worst = std::max(worst, std::abs(total_curvature(model, p, X, U, X, U) - q));
        worst = std::max(worst, std::abs(q + g.ip(X, X) * g.ip(U, U)));
    }
    return worst;
}

double check_a_adjoint(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = unit_combo(f.horizontal, g, rng);
        const VectorXd Y = combo(f.horizontal, rng);
        const VectorXd V = unit_combo(f.vertical, g, rng, -1);
        const VectorXd W = unit_combo(f.vertical, g, rng, -1);
        const VectorXd AXV = a_tensor_adjoint(model, p, X, V);
        const VectorXd AXW = a_tensor_adjoint(model, p, X, W);
        worst = std::max(worst,
                         std::abs(g.ip(a_tensor(model, p, X, Y), V) + g.ip(Y, AXV)));
        worst = std::max(worst, (a_tensor(model, p, X, AXV) - g.ip(X, X) * V).norm());
        worst = std::max(worst, std::abs(g.ip(AXV, AXW) + g.ip(X, X) * g.ip(V, W)));
    }
    return worst;
}

double quartic_rhs(const SubmersionModel& model, const ScalarProduct& g, const VectorXd& p,
                   const VectorXd& X, const VectorXd& Y) {
    const VectorXd AXY = a_tensor(model, p, X, Y);
    return total_curvature(model, p, X, Y, X, Y) + 3.0 * g.ip(AXY, AXY);
}

double check_lemma3c(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const auto [kind, structures] = derived_quartic(model, p);
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        const double lhs = curvature_base_quartic(kind, structures, g, X, Y);
        worst = std::max(worst, std::abs(lhs - quartic_rhs(model, g, p, X, Y)));
    }
    return worst;
}

double check_oneill_vi(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    const ScalarProduct gb = model.base_ambient();
    const BaseKind kind = base_kind_of(model);
    // canonical structures at the base representative, independent of A
    std::vector<MatrixXd> structures;
    if (kind != BaseKind::RealHyperbolic4)
        structures = make_base_model(kind, gb.dim).structures;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        const VectorXd dX = differential(model, p, X), dY = differential(model, p, Y);
        double lhs;
        if (model.kind == SubmersionKind::OctonionicHopf)
            lhs = -4.0 * (gb.ip(dX, dX) * gb.ip(dY, dY) - gb.ip(dX, dY) * gb.ip(dX, dY));
        else
            lhs = curvature_base_quartic(kind, structures, gb, dX, dY);
        worst = std::max(worst, std::abs(lhs - quartic_rhs(model, g, p, X, Y)));
    }
    return worst;
}

double check_pinching(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const auto [kind, structures] = derived_quartic(model, p);
        const VectorXd X = unit_combo(f.horizontal, g, rng, +1);
        VectorXd Y = combo(f.horizontal, rng);
        Y -= g.ip(Y, X) * X;
        if (g.ip(Y, Y) < 1e-8) continue;
        Y /= std::sqrt(g.ip(Y, Y));
        const double K = curvature_base_quartic(kind, structures, g, X, Y);
        worst = std::max({worst, -4.0 - K, K + 1.0});
    }
    return std::max(0.0, worst);
}

double check_special_plane(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const auto [kind, structures] = derived_quartic(model, p);
        const VectorXd Z = unit_combo(f.horizontal, g, rng, +1);
        const VectorXd V = unit_combo(f.vertical, g, rng, -1);
        const VectorXd W = a_tensor_adjoint(model, p, Z, V); // unit since A_. V is orthogonal
        worst = std::max(worst,
                         std::abs(curvature_base_quartic(kind, structures, g, Z, W) + 4.0));
    }
    return worst;
}

double check_fibre_definite(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        VectorXd V = combo(f.vertical, rng);
        if (V.norm() < 1e-8) continue;
        V /= V.norm();
        worst = std::max(worst, g.ip(V, V));
    }
    return std::max(0.0, worst);
}

double check_clifford_horizontal(const SubmersionModel& model, int samples,
                                 std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd x = unit_combo(f.horizontal, g, rng);
        const VectorXd y = unit_combo(f.horizontal, g, rng);
        const VectorXd v = unit_combo(f.vertical, g, rng, -1);
        const VectorXd lhs = a_tensor(model, p, x, a_tensor_adjoint(model, p, y, v)) +
                             a_tensor(model, p, y, a_tensor_adjoint(model, p, x, v));
        worst = std::max(worst, (lhs - 2.0 * g.ip(x, y) * v).norm());
    }
    return worst;
}

double check_clifford_vertical(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd x = unit_combo(f.horizontal, g, rng);
        const VectorXd v = unit_combo(f.vertical, g, rng, -1);
        const VectorXd w = unit_combo(f.vertical, g, rng, -1);
        const VectorXd lhs =
            a_tensor_adjoint(model, p, a_tensor_adjoint(model, p, x, w), v) +
            a_tensor_adjoint(model, p, a_tensor_adjoint(model, p, x, v), w);
        // -2 gt(v,w) x with the positive-definite fibre metric gt = -g
        worst = std::max(worst, (lhs - 2.0 * g.ip(v, w) * x).norm());
    }
    return worst;
}

double check_clifford_action(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < std::max(1, samples / 10); ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const CliffordAction act = action_from_submersion(model, p);
        const MatrixXd id = MatrixXd::Identity(act.dim, act.dim);
        for (const MatrixXd& gen : act.generators)
            worst = std::max(worst, (gen.transpose() * gen - id).norm());
    }
    return worst;
}

double check_l_dim(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    const int expected = expected_kernel_dim(model);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const auto structures = base_structures(model, p);
        const VectorXd X = unit_combo(f.horizontal, g, rng, +1);
        const int n = f.horizontal.size();
        // rows of R: coefficients of the linear conditions g(phi_a X, Y) = 0
        MatrixXd R(static_cast<int>(structures.size()), n);
        for (size_t a = 0; a < structures.size(); ++a)
            for (int j = 0; j < n; ++j)
                R(static_cast<int>(a), j) = g.ip(structures[a] * X, f.horizontal.vectors[j]);
        const KernelResult ker = form_kernel(R.transpose() * R, 1e-9);
        worst = std::max(worst, std::abs(double(ker.dimension - expected)));
    }
    return worst;
}

double check_volume_sign(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < std::max(1, samples / 10); ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const CliffordAction act = action_from_submersion(model, p);
        const VolumeResult vol = volume_action(act);
        if (vol.sign != VolumeSign::PlusId) return 1.0;
        worst = std::max(worst, (vol.op - MatrixXd::Identity(act.dim, act.dim)).norm());
    }
    return worst;
}

double check_a_tensoriality(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        // an admissible perturbation of the extension: vanishes horizontally at p
        std::vector<VectorXd> normal;
        for (const VectorXd& v : f.vertical.vectors) normal.push_back(v);
        VectorXd extra = gauss(rng) * p;
        for (const VectorXd& v : normal) extra += gauss(rng) * v;
        if (model.kind == SubmersionKind::ComplexToQuaternionic) {
            // the full lifted vertical space is admissible here
            const SubmersionModel quat = SubmersionModel::quaternionic_hopf(model.k);
            const SplitFrame fq = split_frame(quat, p);
            for (const VectorXd& v : fq.vertical.vectors) extra += gauss(rng) * v;
        }
        worst = std::max(worst, (a_tensor(model, p, X, Y) -
                                 a_tensor_extended(model, p, X, Y, extra)).norm());
    }
    return worst;
}

double check_a_fd(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        worst = std::max(worst,
                         (a_tensor(model, p, X, Y) - a_tensor_fd(model, p, X, Y)).norm());
    }
    return worst;
}

double check_nabla_a_zero(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const VectorXd Z = unit_combo(f.horizontal, g, rng);
        const VectorXd X = unit_combo(f.horizontal, g, rng);
        const VectorXd Y = unit_combo(f.horizontal, g, rng);
        worst = std::max(worst, nabla_a_vertical_fd(model, p, Z, X, Y));
    }
    return worst;
}

double check_holonomy(const SubmersionModel& model, int samples, std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> pick_axis(1, 3);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        const int axis =
            model.kind == SubmersionKind::QuaternionicHopf ? pick_axis(rng) : 1;
        const HolonomyTransport tr = holonomy_transport(model, p, angle(rng), axis);
        if (!on_total(model, tr.moved_point)) return 1.0;
        if (!base_points_equal(model, project(model, p), project(model, tr.moved_point), 1e-8))
            return 1.0;
        const VectorXd X = combo(f.horizontal, rng), Y = combo(f.horizontal, rng);
        worst = std::max(worst,
                         std::abs(g.ip(tr.map * X, tr.map * Y) - g.ip(X, Y)));
        // the transported vector projects to the same base vector
        worst = std::max(worst, (differential(model, tr.moved_point, tr.map * X) -
                                 differential(model, p, X)).norm());
    }
    return worst;
}

double check_project_invariance(const SubmersionModel& model, int samples,
                                std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        VectorXd moved;
        if (model.kind == SubmersionKind::OctonionicHopf) {
            // fibres are totally geodesic, so a vertical geodesic stays inside
            const SplitFrame f = split_frame(model, p);
            const VectorXd v = unit_combo(f.vertical, model.ambient(), rng, -1);
            const double t = angle(rng);
            moved = std::cos(t) * p + std::sin(t) * v;
        } else {
            moved = holonomy_transport(model, p, angle(rng),
                                       model.kind == SubmersionKind::QuaternionicHopf ? 2 : 1)
                        .moved_point;
        }
        if (!base_points_equal(model, project(model, p), project(model, moved), 1e-8))
            worst = std::max(worst, 1.0);
    }
    return worst;
}

double check_curvature_symmetries(const SubmersionModel& model, int samples,
                                  std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        PseudoFrame all = f.vertical;
        for (size_t j = 0; j < f.horizontal.vectors.size(); ++j) {
            all.vectors.push_back(f.horizontal.vectors[j]);
            all.signs.push_back(f.horizontal.signs[j]);
        }
        const VectorXd X = combo(all, rng), Y = combo(all, rng), Z = combo(all, rng),
                       W = combo(all, rng);
        auto R = [&](const VectorXd& a, const VectorXd& b, const VectorXd& c,
                     const VectorXd& d) { return total_curvature(model, p, a, b, c, d); };
        worst = std::max(worst, std::abs(R(X, Y, Z, W) + R(Y, X, Z, W)));
        worst = std::max(worst, std::abs(R(X, Y, Z, W) + R(X, Y, W, Z)));
        worst = std::max(worst, std::abs(R(X, Y, Z, W) - R(Z, W, X, Y)));
        worst = std::max(worst,
                         std::abs(R(X, Y, Z, W) + R(Y, Z, X, W) + R(Z, X, Y, W)));
    }
    return worst;
}

double check_sectional_minus_one(const SubmersionModel& model, int samples,
                                 std::mt19937_64& rng) {
    const ScalarProduct g = model.ambient();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const VectorXd p = sample_total_point(model, rng);
        const SplitFrame f = split_frame(model, p);
        PseudoFrame all = f.vertical;
        for (size_t j = 0; j < f.horizontal.vectors.size(); ++j) {
            all.vectors.push_back(f.horizontal.vectors[j]);
            all.signs.push_back(f.horizontal.signs[j]);
        }
        const VectorXd X = combo(all, rng), Y = combo(all, rng);
        const double denom = g.ip(X, X) * g.ip(Y, Y) - g.ip(X, Y) * g.ip(X, Y);
        if (std::abs(denom) < 1e-6) continue;
        worst = std::max(worst,
                         std::abs(total_curvature(model, p, X, Y, X, Y) / denom + 1.0));
    }
    return worst;
}

// ---- global checks ----

double check_classify_table(const SubmersionModel&, int, std::mt19937_64&) {
    double bad = 0.0;
    auto fdim = [](BaseField f) { return f == BaseField::Real ? 1 : f == BaseField::Complex ? 2 : 4; };
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; p + q <= 12; ++q) {
            const AlgebraClass cls = classify({p, q});
            const long long total = 1LL << (p + q);
            if (static_cast<long long>(cls.summands) * cls.size * cls.size * fdim(cls.field) !=
                total)
                bad += 1.0;
        }
    const AlgebraClass c18 = classify({1, 8});
    if (!(c18.field == BaseField::Real && c18.size == 16 && c18.summands == 2)) bad += 1.0;
    const AlgebraClass c03 = classify({0, 3});
    if (!(c03.field == BaseField::Quaternion && c03.size == 1 && c03.summands == 2)) bad += 1.0;
    const AlgebraClass c00 = classify({0, 0});
    if (!(c00.field == BaseField::Real && c00.size == 1 && c00.summands == 1)) bad += 1.0;
    if (irreducible_dimension({0, 7}) != 8) bad += 1.0;
    if (irreducible_dimension({0, 3}) != 4) bad += 1.0;
    if (irreducible_dimension({0, 1}) != 2) bad += 1.0;
    return bad;
}

double check_obstruction_table(const SubmersionModel&, int, std::mt19937_64&) {
    double bad = 0.0;
    const BaseKind kinds[] = {BaseKind::RealHyperbolic4, BaseKind::ComplexHyperbolic,
                              BaseKind::QuaternionicHyperbolic, BaseKind::CayleyPlane};
    for (int s = 1; s <= 8; ++s)
        for (int n = 1; n <= 16; ++n)
            for (BaseKind base : kinds) {
                const bool expect =
                    (s == 1 && base == BaseKind::ComplexHyperbolic && n % 2 == 0) ||
                    (s == 3 && base == BaseKind::QuaternionicHyperbolic && n % 4 == 0) ||
                    (s == 7 && base == BaseKind::RealHyperbolic4 && n == 8);
                if (existence_obstruction(s, n, base).admissible != expect) bad += 1.0;
            }
    if (existence_obstruction(7, 16, BaseKind::CayleyPlane).reason.empty()) bad += 1.0;
    const Obstruction cplx =
        existence_obstruction(6, 8, BaseKind::RealHyperbolic4, /*complex_fibres=*/true);
    if (cplx.admissible || cplx.reason.find("256") == std::string::npos) bad += 1.0;
    if (!existence_obstruction(2, 8, BaseKind::QuaternionicHyperbolic, true).admissible)
        bad += 1.0;
    return bad;
}

CliffordAction quaternionic_test_action(int n, bool flip) {
    std::vector<MatrixXd> gens;
    for (int axis = 1; axis <= 3; ++axis) {
        const MatrixXd R = right_mult_operator(HyperNumber::unit(Algebra::Quaternion, axis));
        MatrixXd S = MatrixXd::Zero(n, n);
        for (int b = 0; b < n / 4; ++b) S.block(4 * b, 4 * b, 4, 4) = R;
        if (flip && axis == 3) S = -S;
        gens.push_back(S);
    }
    return make_action(std::move(gens));
}

MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
    MatrixXd F(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) F(i, j) = gauss(rng);
    const Eigen::HouseholderQR<MatrixXd> qr(F);
    return qr.householderQ();
}

CliffordAction conjugated(const CliffordAction& act, const MatrixXd& Q) {
    std::vector<MatrixXd> gens;
    for (const MatrixXd& gen : act.generators) gens.push_back(Q * gen * Q.transpose());
    return make_action(std::move(gens));
}

double check_intertwiner(const SubmersionModel&, int samples, std::mt19937_64& rng) {
    const int n = 8;
    const CliffordAction base = quaternionic_test_action(n, false);
    const CliffordAction flipped = quaternionic_test_action(n, true);
    double worst = 0.0;
    for (int i = 0; i < std::max(1, samples / 10); ++i) {
        const MatrixXd Q = random_orthogonal(n, rng);
        const CliffordAction other = conjugated(base, Q);
        const IntertwinerResult res = find_intertwiner(base, other, rng);
        if (!res.equivalent) return 1.0;
        for (int a = 0; a < 3; ++a)
            worst = std::max(worst, (res.map * base.generators[a] -
                                     other.generators[a] * res.map).norm());
        if (find_intertwiner(base, conjugated(flipped, Q), rng).equivalent) return 1.0;
    }
    // the identity intertwines an action with itself
    if (!find_intertwiner(base, base, rng).equivalent) return 1.0;
    return worst;
}

double check_volume_conjugation(const SubmersionModel&, int samples, std::mt19937_64& rng) {
    const CliffordAction base = quaternionic_test_action(8, false);
    const VolumeResult v0 = volume_action(base);
    double worst = 0.0;
    for (int i = 0; i < std::max(1, samples / 10); ++i) {
        const MatrixXd Q = random_orthogonal(8, rng);
        const VolumeResult v1 = volume_action(conjugated(base, Q));
        if (v1.sign != v0.sign) return 1.0;
        worst = std::max(worst, (Q * v0.op * Q.transpose() - v1.op).norm());
    }
    return worst;
}

double check_base_pinching(const SubmersionModel&, int samples, std::mt19937_64& rng) {
    const std::pair<BaseKind, int> cases[] = {{BaseKind::RealHyperbolic4, 8},
                                              {BaseKind::ComplexHyperbolic, 6},
                                              {BaseKind::QuaternionicHyperbolic, 8},
                                              {BaseKind::CayleyPlane, 16}};
    double worst = 0.0;
    for (const auto& [kind, dim] : cases) {
        const BaseCurvatureModel model = make_base_model(kind, dim);
        for (int i = 0; i < samples; ++i) {
            VectorXd X(dim), Y(dim);
            for (int j = 0; j < dim; ++j) {
                X[j] = gauss(rng);
                Y[j] = gauss(rng);
            }
            X.normalize();
            Y -= Y.dot(X) * X;
            if (Y.norm() < 1e-6) continue;
            Y.normalize();
            const double K = curvature_base_quartic(model, X, Y);
            worst = std::max({worst, -4.0 - K, K + 1.0});
        }
    }
    return std::max(0.0, worst);
}

double check_base_l_dim(const SubmersionModel&, int samples, std::mt19937_64& rng) {
    const std::pair<BaseKind, int> cases[] = {{BaseKind::ComplexHyperbolic, 6},
                                              {BaseKind::QuaternionicHyperbolic, 8},
                                              {BaseKind::CayleyPlane, 16}};
    double worst = 0.0;
    for (const auto& [kind, dim] : cases) {
        const BaseCurvatureModel model = make_base_model(kind, dim);
        const int expected = dim - static_cast<int>(model.structures.size());
        for (int i = 0; i < std::max(1, samples / 4); ++i) {
            VectorXd X(dim);
            for (int j = 0; j < dim; ++j) X[j] = gauss(rng);
            X.normalize();
            MatrixXd R(static_cast<int>(model.structures.size()), dim);
            for (size_t a = 0; a < model.structures.size(); ++a)
                R.row(static_cast<int>(a)) = (model.structures[a] * X).transpose();
            const KernelResult ker = form_kernel(R.transpose() * R, 1e-9);
            worst = std::max(worst, std::abs(double(ker.dimension - expected)));
        }
    }
    return worst;
}

struct CheckEntry {
    std::string anchor;
    bool global = false;
    std::function<bool(const SubmersionModel&)> supported;
    CheckFn fn;
};

bool any_model(const SubmersionModel&) { return true; }
bool riemannian(const SubmersionModel& m) { return m.riemannian_base(); }

const std::vector<std::pair<std::string, CheckEntry>>& registry() {
    static const std::vector<std::pair<std::string, CheckEntry>> reg = {
        {"axiom_c",
         {"the differential preserves scalar products of horizontal vectors and kills "
          "vertical ones",
          false, any_model, check_axiom_c}},
        {"t_zero",
         {"the second fundamental form of the fibres vanishes", false, any_model,
          check_t_zero}},
        {"lemma3a",
         {"intrinsic fibre curvature equals ambient curvature on vertical pairs", false,
          any_model, check_lemma3a}},
        {"lemma3b",
         {"R(X,U,X,U) = g(A_X U, A_X U) = -g(X,X) g(U,U) for horizontal X, vertical U", false,
          any_model, check_lemma3b}},
        {"a_adjoint",
         {"g(A_X Y, V) = -g(Y, A_X V), A_X A_X V = g(X,X) V and g(A_X V, A_X W) = "
          "-g(X,X) g(V,W)",
          false, any_model, check_a_adjoint}},
        {"lemma3c",
         {"the base quartic built from the A-derived structures equals R(X,Y,X,Y) + "
          "3 g(A_X Y, A_X Y)",
          false, any_model, check_lemma3c}},
        {"oneill_vi",
         {"the base quartic evaluated downstairs through the projection equals R(X,Y,X,Y) + "
          "3 g(A_X Y, A_X Y)",
          false, any_model, check_oneill_vi}},
        {"pinching",
         {"base sectional curvature lies in [-4, -1] on orthonormal horizontal pairs", false,
          riemannian, check_pinching}},
        {"special_plane",
         {"the plane spanned by Z and A_Z V has base sectional curvature -4", false,
          riemannian, check_special_plane}},
        {"fibre_definite",
         {"the fibre metric is negative definite", false, riemannian, check_fibre_definite}},
        {"clifford_horizontal",
         {"A_x A_y v + A_y A_x v = 2 g(x,y) v", false, any_model, check_clifford_horizontal}},
        {"clifford_vertical",
         {"A^v A^w + A^w A^v = -2 gt(v,w) Id on the horizontal space", false, any_model,
          check_clifford_vertical}},
        {"clifford_action",
         {"the A-derived generators are skew, orthogonal and anticommute", false, riemannian,
          check_clifford_action}},
        {"l_dim",
         {"the kernel of Y -> A_X Y on the horizontal space has the model's dimension", false,
          any_model, check_l_dim}},
        {"volume_sign",
         {"the product of the oriented generators acts as +Id", false,
          [](const SubmersionModel& m) {
              return m.riemannian_base() && m.fibre_dim() >= 3 && m.fibre_dim() % 2 == 1;
          },
          check_volume_sign}},
        {"a_tensoriality",
         {"A_X Y is unchanged under admissible perturbations of the extension of Y", false,
          any_model, check_a_tensoriality}},
        {"a_fd",
         {"the exact A-tensor matches the finite-difference connection oracle", false,
          any_model, check_a_fd}},
        {"nabla_A_zero",
         {"the vertical part of (nabla_Z A)_X Y vanishes", false, any_model,
          check_nabla_a_zero}},
        {"holonomy",
         {"fibre transport is an isometry commuting with the projection", false,
          [](const SubmersionModel& m) { return m.kind != SubmersionKind::OctonionicHopf; },
          check_holonomy}},
        {"project_invariance",
         {"points moved within a fibre project to equal base points", false, any_model,
          check_project_invariance}},
        {"curvature_symmetries",
         {"the curvature tensor has the algebraic symmetries and the first Bianchi identity",
          false, any_model, check_curvature_symmetries}},
        {"sectional_minus_one",
         {"every nondegenerate tangent plane of the total space has curvature -1", false,
          [](const SubmersionModel& m) {
              return m.kind != SubmersionKind::ComplexToQuaternionic;
          },
          check_sectional_minus_one}},
        {"classify_table",
         {"the mod-8 classification satisfies the dimension identity and the pinned instances",
          true, any_model, check_classify_table}},
        {"obstruction_table",
         {"exactly the canonical parameter triples are admissible", true, any_model,
          check_obstruction_table}},
        {"intertwiner",
         {"conjugated actions are recovered by an orthogonal intertwiner; opposite volume "
          "signs are inequivalent",
          true, any_model, check_intertwiner}},
        {"volume_conjugation",
         {"the volume classification is invariant under orthogonal conjugation", true,
          any_model, check_volume_conjugation}},
        {"base_pinching",
         {"each rank-one curvature model is pinched between -4 and -1", true, any_model,
          check_base_pinching}},
        {"base_l_dim",
         {"the structure-form kernel has the expected dimension for each curvature model",
          true, any_model, check_base_l_dim}},
    };
    return reg;
}

const CheckEntry& find_entry(const std::string& name) {
    for (const auto& [key, entry] : registry())
        if (key == name) return entry;
    std::string known;
    for (const auto& [key, entry] : registry()) known += (known.empty() ? "" : ", ") + key;
    throw ConfigError("unknown check '" + name + "'; known checks: " + known);
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [key, entry] : registry()) names.push_back(key);
    return names;
}

bool check_is_global(const std::string& name) { return find_entry(name).global; }

bool check_supported(const std::string& name, const SubmersionModel& model) {
    const CheckEntry& entry = find_entry(name);
    return entry.global || entry.supported(model);
}

std::string check_anchor(const std::string& name) { return find_entry(name).anchor; }

CheckRecord run_check(const CheckSpec& spec) {
    if (spec.samples < 1 || spec.tol <= 0.0)
        throw ConfigError("run_check: need samples >= 1 and tol > 0");
    const CheckEntry& entry = find_entry(spec.name);
    if (!entry.global && !entry.supported(spec.model))
        throw ConfigError("check '" + spec.name + "' is unsupported for model " +
                          spec.model.name() + "(" + spec.model.params() + ")" +
                          (spec.model.riemannian_base()
                               ? ""
                               : ": the base metric is indefinite"));
    CheckRecord rec;
    rec.name = spec.name;
    rec.model = entry.global ? "-" : spec.model.name();
    rec.params = entry.global ? "-" : spec.model.params();
    rec.samples = spec.samples;
    rec.tol = spec.tol;
    rec.anchor = entry.anchor;
    std::mt19937_64 rng(spec.seed);
    rec.max_residual = entry.fn(spec.model, spec.samples, rng);
    rec.pass = rec.max_residual < spec.tol;
    return rec;
}

VerificationReport run_suite(const std::vector<CheckSpec>& specs) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.version = kVersion;
    report.seed = specs.empty() ? 42 : specs.front().seed;
    report.pass = true;
    for (const CheckSpec& spec : specs) {
        CheckRecord rec;
        try {
            rec = run_check(spec);
        } catch (const std::exception& e) {
            rec.name = spec.name;
            rec.model = spec.model.name();
            rec.params = spec.model.params();
            rec.samples = spec.samples;
            rec.tol = spec.tol;
            rec.pass = false;
            rec.error = e.what();
        }
        report.pass = report.pass && rec.pass;
        report.records.push_back(std::move(rec));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CheckSpec> make_suite(const std::vector<SubmersionModel>& models, int samples,
                                  double tol, std::uint64_t seed) {
    std::vector<CheckSpec> specs;
    for (const auto& [name, entry] : registry()) {
        // finite-difference oracles run at their own looser tolerance
        const double check_tol =
            (name == "a_fd" || name == "nabla_A_zero") ? std::max(tol, 1e-4) : tol;
        if (entry.global) {
            specs.push_back({name, SubmersionModel::complex_hopf(1), samples, check_tol, seed});
            continue;
        }
        for (const SubmersionModel& model : models)
            if (entry.supported(model)) specs.push_back({name, model, samples, check_tol, seed});
    }
    return specs;
}

std::vector<CheckSpec> default_suite(int samples, double tol, std::uint64_t seed) {
    return make_suite({SubmersionModel::theta_circle(3, 0), SubmersionModel::theta_circle(2, 1),
                       SubmersionModel::complex_hopf(2), SubmersionModel::quaternionic_hopf(2),
                       SubmersionModel::octonionic_hopf(),
                       SubmersionModel::complex_to_quaternionic(2)},
                      samples, tol, seed);
}

std::string report_json(const VerificationReport& report) {
    nlohmann::json j;
    j["suite"] = "phsub";
    j["version"] = report.version;
    j["seed"] = report.seed;
    j["wall_seconds"] = report.wall_seconds;
    j["pass"] = report.pass;
    j["checks"] = nlohmann::json::array();
    for (const CheckRecord& rec : report.records) {
        nlohmann::json c;
        c["name"] = rec.name;
        c["model"] = rec.model;
        c["params"] = rec.params;
        c["samples"] = rec.samples;
        c["max_residual"] = rec.max_residual;
        c["tol"] = rec.tol;
        c["pass"] = rec.pass;
        c["paper_anchor"] = rec.anchor;
        if (!rec.error.empty()) c["error"] = rec.error;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2);
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-22s %-24s %-12s %8s %13s %9s  %s\n", "check", "model",
                  "params", "samples", "max_residual", "tol", "result");
    out << line;
    out << std::string(100, '-') << "\n";
    for (const CheckRecord& rec : report.records) {
        const std::string result =
            rec.error.empty() ? (rec.pass ? "pass" : "FAIL") : "ERROR " + rec.error;
        std::snprintf(line, sizeof(line), "%-22s %-24s %-12s %8d %13.3e %9.1e  %s\n",
                      rec.name.c_str(), rec.model.c_str(), rec.params.c_str(), rec.samples,
                      rec.max_residual, rec.tol, result.c_str());
        out << line;
    }
    out << std::string(100, '-') << "\n";
    std::snprintf(line, sizeof(line), "suite %s  (%zu checks, %.1f s, seed %llu)\n",
                  report.pass ? "PASS" : "FAIL", report.records.size(), report.wall_seconds,
                  static_cast<unsigned long long>(report.seed));
    out << line;
    return out.str();
}

} // namespace phsub
