#include "phsub/division.hpp"

namespace phsub {
namespace {

// One Cayley-Dickson level: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
// n is the real dimension of the operands; n = 1 bottoms out in R.
void cd_conj(const double* a, double* out, int n) {
    out[0] = a[0];
    for (int i = 1; i < n; ++i) out[i] = -a[i];
}

void cd_mul(const double* a, const double* b, double* out, int n) {
    if (n == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    const int h = n / 2;
    std::vector<double> t1(h), t2(h), cj(h);
    // first half: a1*b1 - conj(b2)*a2
    cd_mul(a, b, t1.data(), h);
    cd_conj(b + h, cj.data(), h);
    cd_mul(cj.data(), a + h, t2.data(), h);
    for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
    // second half: b2*a1 + a2*conj(b1)
    cd_mul(b + h, a, t1.data(), h);
    cd_conj(b, cj.data(), h);
    cd_mul(a + h, cj.data(), t2.data(), h);
    for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

void check_same(const HyperNumber& a, const HyperNumber& b) {
    if (a.algebra != b.algebra) throw ContextError("HyperNumber: algebra mismatch");
}

} // namespace

int algebra_dim(Algebra a) {
    switch (a) {
        case Algebra::Complex: return 2;
        case Algebra::Quaternion: return 4;
        case Algebra::Octonion: return 8;
    }
    return 0;
}

HyperNumber::HyperNumber(Algebra a, VectorXd c) : algebra(a), coords(std::move(c)) {
    if (coords.size() != algebra_dim(a))
        throw ContextError("HyperNumber: coords length does not match algebra");
}

HyperNumber HyperNumber::zero(Algebra a) {
    return HyperNumber(a, VectorXd::Zero(algebra_dim(a)));
}

HyperNumber HyperNumber::one(Algebra a) { return unit(a, 0); }

HyperNumber HyperNumber::unit(Algebra a, int axis) {
    VectorXd c = VectorXd::Zero(algebra_dim(a));
    if (axis < 0 || axis >= c.size()) throw ContextError("HyperNumber::unit: axis out of range");
    c[axis] = 1.0;
    return HyperNumber(a, std::move(c));
}

HyperNumber HyperNumber::real(Algebra a, double t) {
    VectorXd c = VectorXd::Zero(algebra_dim(a));
    c[0] = t;
    return HyperNumber(a, std::move(c));
}

HyperNumber multiply(const HyperNumber& a, const HyperNumber& b) {
    check_same(a, b);
    HyperNumber out = HyperNumber::zero(a.algebra);
    cd_mul(a.coords.data(), b.coords.data(), out.coords.data(), a.dim());
    return out;
}

HyperNumber conjugate(const HyperNumber& a) {
    HyperNumber out = a;
    out.coords.tail(a.dim() - 1) *= -1.0;
    return out;
}

HyperNumber add(const HyperNumber& a, const HyperNumber& b) {
    check_same(a, b);
    return HyperNumber(a.algebra, a.coords + b.coords);
}

HyperNumber scale(const HyperNumber& a, double t) {
    return HyperNumber(a.algebra, a.coords * t);
}

MatrixXd left_mult_operator(const HyperNumber& u) {
    const int n = u.dim();
    MatrixXd m(n, n);
    for (int j = 0; j < n; ++j)
        m.col(j) = multiply(u, HyperNumber::unit(u.algebra, j)).coords;
    return m;
}

MatrixXd right_mult_operator(const HyperNumber& u) {
    const int n = u.dim();
    MatrixXd m(n, n);
    for (int j = 0; j < n; ++j)
        m.col(j) = multiply(HyperNumber::unit(u.algebra, j), u).coords;
    return m;
}

HyperNumber hermitian_form(const std::vector<HyperNumber>& z,
                           const std::vector<HyperNumber>& w, int index) {
    if (z.size() != w.size()) throw ContextError("hermitian_form: length mismatch");
    if (index < 0 || index > static_cast<int>(z.size()))
        throw ContextError("hermitian_form: index out of range");
    if (z.empty()) throw ContextError("hermitian_form: empty input");
    HyperNumber acc = HyperNumber::zero(z[0].algebra);
    for (int i = 0; i < static_cast<int>(z.size()); ++i) {
        HyperNumber term = multiply(z[i], conjugate(w[i]));
        acc = add(acc, scale(term, i < index ? -1.0 : 1.0));
    }
    return acc;
}

VectorXd realify(const std::vector<HyperNumber>& z) {
    if (z.empty()) return VectorXd();
    const int d = z[0].dim();
    VectorXd v(d * static_cast<int>(z.size()));
    for (int i = 0; i < static_cast<int>(z.size()); ++i) v.segment(i * d, d) = z[i].coords;
    return v;
}

std::vector<HyperNumber> unrealify(const VectorXd& v, Algebra a) {
    const int d = algebra_dim(a);
    if (v.size() % d != 0) throw ContextError("unrealify: length not a multiple of algebra dim");
    std::vector<HyperNumber> out;
    for (int i = 0; i < v.size() / d; ++i) out.emplace_back(a, v.segment(i * d, d));
    return out;
}

} // namespace phsub
