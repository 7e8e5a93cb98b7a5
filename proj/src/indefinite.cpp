#include "phsub/indefinite.hpp"

#include <cmath>
#include <numeric>

namespace phsub {

ScalarProduct::ScalarProduct(int dim_, int index_) : dim(dim_), index(index_) {
    if (dim < 0 || index < 0 || index > dim)
        throw ContextError("ScalarProduct: need 0 <= index <= dim");
}

double ScalarProduct::ip(const VectorXd& x, const VectorXd& y) const {
    if (x.size() != dim || y.size() != dim)
        throw ContextError("scalar product: dimension mismatch");
    // Plain accumulation in coordinate order; tests pin this against a
    // term-by-term oracle bit for bit.
    double acc = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double t = x[i] * y[i];
        acc += (i < index) ? -t : t;
    }
    return acc;
}

VectorXd ScalarProduct::apply(const VectorXd& x) const {
    if (x.size() != dim) throw ContextError("ScalarProduct::apply: dimension mismatch");
    VectorXd y = x;
    y.head(index) *= -1.0;
    return y;
}

MatrixXd ScalarProduct::gram() const {
    VectorXd d = VectorXd::Ones(dim);
    d.head(index).setConstant(-1.0);
    return d.asDiagonal();
}

AmbientVector::AmbientVector(VectorXd c, ScalarProduct ctx) : coords(std::move(c)), context(ctx) {
    if (coords.size() != context.dim)
        throw ContextError("AmbientVector: coords length does not match context dim");
}

double scalar_product(const AmbientVector& x, const AmbientVector& y) {
    if (x.context != y.context)
        throw ContextError("scalar_product: vectors carry different contexts");
    return x.context.ip(x.coords, y.coords);
}

int PseudoFrame::count_timelike() const {
    int n = 0;
    for (int s : signs) n += (s < 0);
    return n;
}

PseudoFrame gram_schmidt(const std::vector<VectorXd>& vectors, const ScalarProduct& form,
                         double tol, bool pivot) {
    PseudoFrame out;
    std::vector<VectorXd> pending = vectors;
    const int count = static_cast<int>(pending.size());
    for (int step = 0; step < count; ++step) {
        // Orthogonalize every pending vector against the frame so far, then
        // either take the next one (strict mode) or the best pivot.
        int pick = -1;
        double best = -1.0;
        for (int i = 0; i < static_cast<int>(pending.size()); ++i) {
            VectorXd r = pending[i] - project_onto(pending[i], out, form);
            pending[i] = r;
            const double q = std::abs(form.ip(r, r));
            if (q > best) { best = q; pick = i; }
            if (!pivot) break; // strict mode inspects only the head
        }
        if (!pivot) pick = 0;
        VectorXd u = pending[pick];
        const double nn = form.ip(u, u);
        if (std::abs(nn) < tol) {
            if (pivot) break; // remaining candidates are numerically dependent
            throw DegenerateSubspaceError("gram_schmidt: degenerate pivot at step " +
                                          std::to_string(step) + ", |<u,u>| = " +
                                          std::to_string(std::abs(nn)));
        }
        const int sign = nn < 0 ? -1 : 1;
        out.vectors.push_back(u / std::sqrt(std::abs(nn)));
        out.signs.push_back(sign);
        pending.erase(pending.begin() + pick);
    }
    return out;
}

VectorXd project_onto(const VectorXd& x, const PseudoFrame& basis, const ScalarProduct& form) {
    VectorXd acc = VectorXd::Zero(x.size());
    for (int i = 0; i < basis.size(); ++i)
        acc += basis.signs[i] * form.ip(x, basis.vectors[i]) * basis.vectors[i];
    return acc;
}

KernelResult form_kernel(const MatrixXd& symmetric, double tol) {
    if (symmetric.rows() != symmetric.cols())
        throw ContextError("form_kernel: matrix must be square");
    const MatrixXd sym = 0.5 * (symmetric + symmetric.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym);
    const VectorXd& ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        const double a = std::abs(ev[i]);
        if (a >= tol / 10.0 && a <= tol * 10.0)
            throw ToleranceAmbiguityError("form_kernel: eigenvalue " + std::to_string(ev[i]) +
                                          " straddles tolerance " + std::to_string(tol));
    }
    KernelResult res;
    std::vector<int> null_idx;
    for (int i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i]) < tol) null_idx.push_back(i);
    res.dimension = static_cast<int>(null_idx.size());
    res.basis.resize(sym.rows(), res.dimension);
    for (int j = 0; j < res.dimension; ++j)
        res.basis.col(j) = es.eigenvectors().col(null_idx[j]);
    return res;
}

} // namespace phsub
