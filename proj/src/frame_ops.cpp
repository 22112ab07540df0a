#include "qframe/frame_ops.hpp"

#include <algorithm>
#include <cmath>

namespace qframe {

namespace {

constexpr double kKernelInclusionTol = 1e-9;

Frame apply(const QMatrix &l, const Frame &f)
{
    if (l.cols() != f.dim()) {
        throw DimensionMismatch("operator has " + std::to_string(l.cols()) +
                                " columns, frame lives in H^" + std::to_string(f.dim()));
    }
    std::vector<QVector> out;
    out.reserve(f.size());
    for (const auto &u : f.vectors()) {
        out.push_back(matvec(l, u));
    }
    return Frame(l.rows(), std::move(out));
}

void require_same_index_count(const Frame &f, const Frame &g)
{
    if (f.size() != g.size()) {
        throw DimensionMismatch("index-count mismatch: " + std::to_string(f.size()) + " vs " +
                                std::to_string(g.size()) + " vectors");
    }
}

/// Component of x orthogonal to the span of the orthonormal columns of k.
QVector residual_off(const QMatrix &k, const QVector &x)
{
    QVector r = x;
    for (std::size_t c = 0; c < k.cols(); ++c) {
        const QVector col = k.column(c);
        r -= col * inner(col, r);
    }
    return r;
}

struct Inclusion
{
    bool holds = true;
    std::optional<QVector> witness;
};

/// Tests span(k_from) inside span(k_to), both given by orthonormal columns.
Inclusion kernel_inclusion(const QMatrix &k_from, const QMatrix &k_to)
{
    Inclusion out;
    double worst = 0.0;
    for (std::size_t c = 0; c < k_from.cols(); ++c) {
        const QVector x = k_from.column(c);
        const double off = norm(residual_off(k_to, x));
        if (off > kKernelInclusionTol * norm(x) && off > worst) {
            worst = off;
            out.holds = false;
            out.witness = x;
        }
    }
    return out;
}

double intertwining_residual(const QMatrix &l, const Frame &f, const Frame &g)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        worst = std::max(worst, norm(matvec(l, f[i]) - g[i]));
    }
    return worst;
}

} // namespace

MappedFrame map_frame(const QMatrix &l, const Frame &f)
{
    Frame image = apply(l, f);
    MappedFrame out{image, frame_report(image)};
    const QSvd s = svd(l);
    const std::size_t r = rank(s, l.rows(), l.cols());
    out.operator_surjective = r == l.rows();
    out.operator_norm = s.all_values.empty() ? 0.0 : s.all_values.front();
    out.min_singular_value = r == 0 ? 0.0 : s.all_values[r - 1];
    if (image.is_frame()) {
        const QMatrix lsl = l * f.frame_operator() * adjoint(l);
        out.frame_operator_residual = operator_norm(image.frame_operator() - lsl) / operator_norm(lsl);
    }
    return out;
}

UnitaryInvariance unitary_invariance_check(const QMatrix &u, const Frame &f)
{
    if (!is_unitary(u)) {
        throw NotOrthonormal("unitary_invariance_check: operator is not unitary");
    }
    UnitaryInvariance out;
    out.original = optimal_bounds(f);
    out.mapped = optimal_bounds(apply(u, f));
    out.residual = std::max(std::abs(out.mapped.lower - out.original.lower) / out.original.lower,
                            std::abs(out.mapped.upper - out.original.upper) / out.original.upper);
    return out;
}

ProjectedFrame project_frame(const QMatrix &b, const Frame &f)
{
    if (b.rows() != f.dim()) {
        throw DimensionMismatch("project_frame: basis vectors have length " + std::to_string(b.rows()) +
                                ", frame lives in H^" + std::to_string(f.dim()));
    }
    if (b.cols() == 0 || !has_orthonormal_columns(b)) {
        throw NotOrthonormal("project_frame: subspace basis is not orthonormal");
    }
    Frame coords = apply(adjoint(b), f);
    const FrameBounds inherited = optimal_bounds(f);
    const FrameBounds optimal = optimal_bounds(coords);
    return {std::move(coords), inherited, optimal};
}

Frame ambient_projection(const QMatrix &b, const Frame &f) { return apply(orthogonal_projector(b), f); }

Intertwiner intertwiner(const Frame &f, const Frame &g)
{
    require_same_index_count(f, g);
    const QMatrix &t1 = f.synthesis();
    const QMatrix &t2 = g.synthesis();
    const Inclusion inc = kernel_inclusion(kernel_basis(t1), kernel_basis(t2));
    Intertwiner out;
    if (!inc.holds) {
        out.witness = inc.witness;
        return out;
    }
    QMatrix l = t2 * pinv(t1);
    out.residual = intertwining_residual(l, f, g);
    out.op = std::move(l);
    return out;
}

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::equivalent:
        return "equivalent";
    case Relation::one_sided:
        return "one-sided";
    case Relation::none:
        return "none";
    }
    return "unknown";
}

EquivalenceResult are_equivalent(const Frame &f, const Frame &g)
{
    require_same_index_count(f, g);
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("are_equivalent: families live in H^" + std::to_string(f.dim()) +
                                " and H^" + std::to_string(g.dim()));
    }
    const QMatrix &t1 = f.synthesis();
    const QMatrix &t2 = g.synthesis();
    const QMatrix k1 = kernel_basis(t1);
    const QMatrix k2 = kernel_basis(t2);
    const Inclusion forward = kernel_inclusion(k1, k2);
    const Inclusion backward = kernel_inclusion(k2, k1);

    EquivalenceResult out;
    if (!forward.holds) {
        out.relation = Relation::none;
        out.witness = forward.witness;
        return out;
    }
    if (!backward.holds) {
        out.relation = Relation::one_sided;
        QMatrix l = t2 * pinv(t1);
        out.residual = intertwining_residual(l, f, g);
        out.intertwiner = std::move(l);
        out.witness = backward.witness;
        return out;
    }

    // Equal kernels. T2 T1^+ maps range(T1) onto range(T2); pairing the
    // orthogonal complements of the ranges makes it invertible on all of H^n.
    const QMatrix c1 = kernel_basis(adjoint(t1));
    const QMatrix c2 = kernel_basis(adjoint(t2));
    if (c1.cols() != c2.cols()) {
        throw NumericalFailure("are_equivalent: equal kernels but ranges of different dimension");
    }
    const QMatrix l = t2 * pinv(t1) + c2 * adjoint(c1);
    const QMatrix back = t1 * pinv(t2) + c1 * adjoint(c2);
    const QMatrix id = QMatrix::identity(f.dim());
    out.inverse_residual = std::max(max_abs_diff(l * back, id), max_abs_diff(back * l, id));
    out.residual = intertwining_residual(l, f, g);
    if (!is_bounded_below(l)) {
        throw NumericalFailure("are_equivalent: constructed intertwiner is singular");
    }
    out.relation = Relation::equivalent;
    out.intertwiner = l;
    return out;
}

Frame frame_with_frame_operator(const QMatrix &l)
{
    if (l.rows() != l.cols() || l.rows() == 0) {
        throw DimensionMismatch("frame_with_frame_operator: operator must be square and non-empty");
    }
    if (!is_hermitian(l)) {
        throw NotHermitian("frame_with_frame_operator: operator is not Hermitian");
    }
    const HermEig eig = herm_eig(l);
    const double top = eig.eigenvalues.front();
    const double bottom = eig.eigenvalues.back();
    if (!(top > 0.0) || bottom <= static_cast<double>(l.rows()) * kFrameTol * top) {
        throw NotPositive("frame_with_frame_operator: operator is not positive definite");
    }
    return Frame::from_synthesis(spectral_apply(eig, [](double x) { return std::sqrt(x); }));
}

Frame bessel_from_operator(const QMatrix &l) { return Frame::from_synthesis(adjoint(l)); }

} // namespace qframe
