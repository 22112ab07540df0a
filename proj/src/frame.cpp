#include "qframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace qframe {

struct Frame::Cache
{
    std::once_flag base_once;
    QMatrix t;
    QMatrix s;
    HermEig eig;
    bool frame = false;

    std::once_flag inverse_once;
    QMatrix s_inv;
    QMatrix s_inv_sqrt;
};

Frame::Frame(std::size_t dim, std::vector<QVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)), cache_(std::make_shared<Cache>())
{
    if (dim_ == 0) {
        throw DimensionMismatch("frame dimension must be at least 1");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].size() != dim_) {
            throw DimensionMismatch("frame vector " + std::to_string(i) + " has length " +
                                    std::to_string(vectors_[i].size()) + ", expected " +
                                    std::to_string(dim_));
        }
    }
}

Frame Frame::from_synthesis(const QMatrix &t)
{
    std::vector<QVector> cols;
    cols.reserve(t.cols());
    for (std::size_t c = 0; c < t.cols(); ++c) {
        cols.push_back(t.column(c));
    }
    return Frame(t.rows(), std::move(cols));
}

namespace {

void build_base(const Frame &f, QMatrix &t, QMatrix &s, HermEig &eig, bool &frame)
{
    const std::size_t n = f.dim();
    t = QMatrix::from_columns(n, f.vectors());
    s = QMatrix(n, n);
    for (const auto &u : f.vectors()) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                s(r, c) += u[r] * conj(u[c]);
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        s(r, r) = Quaternion(s(r, r).a0);
        for (std::size_t c = r + 1; c < n; ++c) {
            const Quaternion avg = (s(r, c) + conj(s(c, r))) * 0.5;
            s(r, c) = avg;
            s(c, r) = conj(avg);
        }
    }
    eig = herm_eig(s);
    const double top = eig.eigenvalues.front();
    const double bottom = eig.eigenvalues.back();
    frame = top > 0.0 && bottom > static_cast<double>(n) * kFrameTol * top;
}

} // namespace

const QMatrix &Frame::synthesis() const
{
    std::call_once(cache_->base_once, [this] { build_base(*this, cache_->t, cache_->s, cache_->eig, cache_->frame); });
    return cache_->t;
}

const QMatrix &Frame::frame_operator() const
{
    synthesis();
    return cache_->s;
}

const HermEig &Frame::spectrum() const
{
    synthesis();
    return cache_->eig;
}

bool Frame::is_frame() const
{
    synthesis();
    return cache_->frame;
}

const QMatrix &Frame::inverse_frame_operator() const
{
    if (!is_frame()) {
        throw RankDeficient("family of " + std::to_string(size()) + " vectors does not span H^" +
                            std::to_string(dim_));
    }
    std::call_once(cache_->inverse_once, [this] {
        cache_->s_inv = spectral_apply(cache_->eig, [](double x) { return 1.0 / x; });
        cache_->s_inv_sqrt = spectral_apply(cache_->eig, [](double x) { return 1.0 / std::sqrt(x); });
    });
    return cache_->s_inv;
}

const QMatrix &Frame::inverse_sqrt_frame_operator() const
{
    inverse_frame_operator();
    return cache_->s_inv_sqrt;
}

std::string to_string(FrameStatus s)
{
    switch (s) {
    case FrameStatus::frame:
        return "frame";
    case FrameStatus::rank_deficient:
        return "rank-deficient";
    }
    return "unknown";
}

QMatrix synthesis(const Frame &f) { return f.synthesis(); }

QVector analysis(const Frame &f, const QVector &u)
{
    if (u.size() != f.dim()) {
        throw DimensionMismatch("analysis: vector has length " + std::to_string(u.size()) +
                                ", frame lives in H^" + std::to_string(f.dim()));
    }
    QVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = inner(f[i], u);
    }
    return out;
}

QMatrix frame_operator(const Frame &f) { return f.frame_operator(); }

bool is_frame(const Frame &f) { return f.is_frame(); }

FrameBounds optimal_bounds(const Frame &f)
{
    if (!f.is_frame()) {
        throw RankDeficient("optimal_bounds: family is not a frame");
    }
    const auto &ev = f.spectrum().eigenvalues;
    return {ev.back(), ev.front()};
}

BoundFormulas bound_formulas(const Frame &f)
{
    const FrameBounds b = optimal_bounds(f);
    BoundFormulas out;
    out.lower_eig = b.lower;
    out.upper_eig = b.upper;
    out.lower_inv_norm = 1.0 / operator_norm(f.inverse_frame_operator());
    const double pinv_norm = operator_norm(pinv(f.synthesis()));
    out.lower_pinv = 1.0 / (pinv_norm * pinv_norm);
    out.upper_norm_s = operator_norm(f.frame_operator());
    const double t_norm = operator_norm(f.synthesis());
    out.upper_norm_t = t_norm * t_norm;
    return out;
}

QVector frame_coefficients(const Frame &f, const QVector &u)
{
    if (u.size() != f.dim()) {
        throw DimensionMismatch("frame_coefficients: vector has length " + std::to_string(u.size()) +
                                ", frame lives in H^" + std::to_string(f.dim()));
    }
    const QVector su = matvec(f.inverse_frame_operator(), u);
    return analysis(f, su);
}

QVector reconstruct(const Frame &f, const QVector &c)
{
    if (c.size() != f.size()) {
        throw DimensionMismatch("reconstruct: " + std::to_string(c.size()) + " coefficients for " +
                                std::to_string(f.size()) + " frame vectors");
    }
    QVector out(f.dim());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out += f[i] * c[i];
    }
    return out;
}

NaturalRepresentation natural_representation(const Frame &f, const QVector &u)
{
    const QVector primal = reconstruct(f, frame_coefficients(f, u));
    const QMatrix &s_inv = f.inverse_frame_operator();
    QVector dual_side(f.dim());
    for (std::size_t i = 0; i < f.size(); ++i) {
        dual_side += matvec(s_inv, f[i]) * inner(f[i], u);
    }
    const double gap = norm(primal - dual_side);
    return {primal, dual_side, gap};
}

PythagorasCheck pythagoras_check(const Frame &f, const QVector &u, const QVector &q)
{
    const QVector rebuilt = reconstruct(f, q);
    if (norm(rebuilt - u) > 1e-8 * norm(u)) {
        throw NotARepresentation("pythagoras_check: coefficients do not reconstruct the vector");
    }
    const QVector c = frame_coefficients(f, u);
    PythagorasCheck out;
    double c_sq = 0.0;
    double diff_sq = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out.lhs += norm_sq(q[i]);
        c_sq += norm_sq(c[i]);
        diff_sq += norm_sq(c[i] - q[i]);
    }
    out.rhs = c_sq + diff_sq;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

namespace {

Frame map_vectors(const QMatrix &m, const Frame &f)
{
    std::vector<QVector> out;
    out.reserve(f.size());
    for (const auto &u : f.vectors()) {
        out.push_back(matvec(m, u));
    }
    return Frame(m.rows(), std::move(out));
}

} // namespace

Frame canonical_dual(const Frame &f) { return map_vectors(f.inverse_frame_operator(), f); }

Frame parseval_normalize(const Frame &f) { return map_vectors(f.inverse_sqrt_frame_operator(), f); }

QMatrix lambda_operator(const Frame &f, const QMatrix &r)
{
    if (r.rows() != f.dim() || r.cols() != f.dim()) {
        throw DimensionMismatch("lambda_operator: operator is " + std::to_string(r.rows()) + "x" +
                                std::to_string(r.cols()) + ", frame lives in H^" +
                                std::to_string(f.dim()));
    }
    const QMatrix &s_inv = f.inverse_frame_operator();
    const std::size_t m = f.size();
    std::vector<QVector> dual;
    std::vector<QVector> image;
    dual.reserve(m);
    image.reserve(m);
    for (const auto &u : f.vectors()) {
        dual.push_back(matvec(s_inv, u));
        image.push_back(matvec(r, u));
    }
    QMatrix out(m, m);
    for (std::size_t n = 0; n < m; ++n) {
        for (std::size_t i = 0; i < m; ++i) {
            out(n, i) = inner(dual[n], image[i]);
        }
    }
    return out;
}

FrameReport frame_report(const Frame &f)
{
    FrameReport report;
    const auto &ev = f.spectrum().eigenvalues;
    report.spectrum = ev;
    report.bounds = {ev.back(), ev.front()};
    if (!f.is_frame()) {
        report.status = FrameStatus::rank_deficient;
        return report;
    }
    report.status = FrameStatus::frame;

    const BoundFormulas b = bound_formulas(f);
    auto rel = [](double x, double ref) { return std::abs(x - ref) / std::abs(ref); };
    report.residuals["lower_inverse_norm"] = rel(b.lower_inv_norm, b.lower_eig);
    report.residuals["lower_pseudo_inverse"] = rel(b.lower_pinv, b.lower_eig);
    report.residuals["upper_norm_S"] = rel(b.upper_norm_s, b.upper_eig);
    report.residuals["upper_norm_T_squared"] = rel(b.upper_norm_t, b.upper_eig);

    double recon = 0.0;
    double duality = 0.0;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        const QVector e = QVector::basis(f.dim(), i);
        const NaturalRepresentation nr = natural_representation(f, e);
        recon = std::max(recon, norm(nr.primal - e));
        duality = std::max(duality, nr.discrepancy);
    }
    report.residuals["reconstruction"] = recon;
    report.residuals["duality"] = duality;
    report.residuals["parseval"] =
        max_abs_diff(parseval_normalize(f).frame_operator(), QMatrix::identity(f.dim()));
    return report;
}

} // namespace qframe
