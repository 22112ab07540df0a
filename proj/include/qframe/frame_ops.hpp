#pragma once

#include <optional>
#include <string>

#include "qframe/frame.hpp"

namespace qframe {

/// Image {L u_i} of a frame under an operator, with the surjectivity verdict
/// and the bound relations that hold when the image is a frame.
struct MappedFrame
{
    Frame frame;
    FrameReport report;
    bool operator_surjective = false;
    /// ||S_L - L S L*|| / ||L S L*||; zero when the image is not a frame.
    double frame_operator_residual = 0.0;
    /// sigma_min of L on (ker L)^perp; A * M^2 <= A' and B' <= B ||L||^2.
    double min_singular_value = 0.0;
    double operator_norm = 0.0;
};

MappedFrame map_frame(const QMatrix &l, const Frame &f);

struct UnitaryInvariance
{
    FrameBounds original;
    FrameBounds mapped;
    double residual = 0.0; // largest relative bound change
};

/// Throws NotOrthonormal when U is not unitary within 1e-10.
UnitaryInvariance unitary_invariance_check(const QMatrix &u, const Frame &f);

struct ProjectedFrame
{
    /// Coordinates B* u_i of P u_i in the subspace basis; a family in H^d.
    Frame frame;
    /// Optimal bounds of the input, which remain valid for the projection.
    FrameBounds inherited;
    /// Optimal bounds recomputed on the subspace.
    FrameBounds optimal;
};

/// Frame of P(H) where P = B B*. Throws NotOrthonormal for bad B.
ProjectedFrame project_frame(const QMatrix &b, const Frame &f);

/// Ambient form B B* u_i of a projected frame.
Frame ambient_projection(const QMatrix &b, const Frame &f);

struct Intertwiner
{
    std::optional<QMatrix> op;      // L with L u_i = v_i
    std::optional<QVector> witness; // unit vector in ker T1 not annihilated by T2
    double residual = 0.0;          // max_i ||L u_i - v_i||
};

/// L = T2 T1^+ when ker T1 is contained in ker T2, else a witness.
Intertwiner intertwiner(const Frame &f, const Frame &g);

enum class Relation
{
    equivalent,
    one_sided, // ker T1 inside ker T2 only
    none,
};

std::string to_string(Relation r);

struct EquivalenceResult
{
    Relation relation = Relation::none;
    std::optional<QMatrix> intertwiner;
    double residual = 0.0;
    std::optional<QVector> witness;
    /// max(|L1 L2 - I|, |L2 L1 - I|) entrywise when equivalent.
    double inverse_residual = 0.0;
};

EquivalenceResult are_equivalent(const Frame &f, const Frame &g);

/// {L^1/2 e_i}; its frame operator is L. L must be Hermitian positive definite.
Frame frame_with_frame_operator(const QMatrix &l);

/// {L* v_i} for the standard basis v_i of H^m; the analysis operator of the
/// result is exactly L.
Frame bessel_from_operator(const QMatrix &l);

} // namespace qframe
