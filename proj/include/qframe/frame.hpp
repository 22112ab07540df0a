#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qframe/qlinalg.hpp"

namespace qframe {

/// Relative spectral threshold: a family is a frame for H^n when
/// lambda_min(S) > n * kFrameTol * lambda_max(S).
inline constexpr double kFrameTol = 1e-10;

/// A finite indexed family {u_1..u_m} in H^n. Immutable; synthesis matrix,
/// frame operator and its spectral data are computed on first use and shared
/// between copies.
class Frame
{
  public:
    /// Throws DimensionMismatch naming the first vector whose length is not dim.
    Frame(std::size_t dim, std::vector<QVector> vectors);

    /// Family made of the columns of t.
    static Frame from_synthesis(const QMatrix &t);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<QVector> &vectors() const { return vectors_; }
    const QVector &operator[](std::size_t i) const { return vectors_[i]; }

    /// n x m matrix whose i-th column is u_i.
    const QMatrix &synthesis() const;
    /// S = sum_i u_i u_i*, exactly Hermitian.
    const QMatrix &frame_operator() const;
    const HermEig &spectrum() const;

    bool is_frame() const;

    /// S^-1 and S^-1/2; throw RankDeficient when the family is not a frame.
    const QMatrix &inverse_frame_operator() const;
    const QMatrix &inverse_sqrt_frame_operator() const;

  private:
    struct Cache;

    std::size_t dim_;
    std::vector<QVector> vectors_;
    std::shared_ptr<Cache> cache_;
};

struct FrameBounds
{
    double lower = 0.0;
    double upper = 0.0;
};

/// Each optimal bound computed three ways.
struct BoundFormulas
{
    double lower_eig = 0.0;       // lambda_min(S)
    double lower_inv_norm = 0.0;  // 1 / ||S^-1||
    double lower_pinv = 0.0;      // 1 / ||T^+||^2
    double upper_eig = 0.0;       // lambda_max(S)
    double upper_norm_s = 0.0;    // ||S||
    double upper_norm_t = 0.0;    // ||T||^2
};

enum class FrameStatus
{
    frame,
    rank_deficient,
};

std::string to_string(FrameStatus s);

struct FrameReport
{
    FrameStatus status = FrameStatus::rank_deficient;
    /// lambda_min(S), lambda_max(S); the optimal bounds when status is frame.
    FrameBounds bounds;
    std::vector<double> spectrum;
    std::map<std::string, double> residuals;
};

QMatrix synthesis(const Frame &f);
/// theta u = {<u_i, u>}_i = T* u.
QVector analysis(const Frame &f, const QVector &u);
QMatrix frame_operator(const Frame &f);

bool is_frame(const Frame &f);
/// Throws RankDeficient when f is not a frame.
FrameBounds optimal_bounds(const Frame &f);
BoundFormulas bound_formulas(const Frame &f);

/// c_i = <u_i, S^-1 u>, the minimal-norm representation of u.
QVector frame_coefficients(const Frame &f, const QVector &u);
/// sum_i u_i c_i.
QVector reconstruct(const Frame &f, const QVector &c);

struct NaturalRepresentation
{
    QVector primal;      // sum_i u_i <S^-1 u_i, u>
    QVector dual_side;   // sum_i S^-1 u_i <u_i, u>
    double discrepancy;  // ||primal - dual_side||
};

NaturalRepresentation natural_representation(const Frame &f, const QVector &u);

struct PythagorasCheck
{
    double lhs = 0.0;       // sum |q_i|^2
    double rhs = 0.0;       // sum |c_i|^2 + sum |c_i - q_i|^2
    double residual = 0.0;  // |lhs - rhs|
};

/// Verifies the minimal-norm identity for an alternative representation q
/// of u. Throws NotARepresentation when sum u_i q_i differs from u.
PythagorasCheck pythagoras_check(const Frame &f, const QVector &u, const QVector &q);

Frame canonical_dual(const Frame &f);
Frame parseval_normalize(const Frame &f);

/// m x m matrix Lambda with entries <S^-1 u_n, R u_i>; carries the frame
/// coefficients of u onto those of R u.
QMatrix lambda_operator(const Frame &f, const QMatrix &r);

/// Status, bounds by every formula and the reconstruction, duality and
/// Parseval residuals measured on the standard basis.
FrameReport frame_report(const Frame &f);

} // namespace qframe
