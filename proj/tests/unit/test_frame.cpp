#include <doctest.h>

#include <cmath>
#include <thread>

#include "qframe/frame.hpp"
#include "qframe/random.hpp"
#include "test_util.hpp"

using namespace qframe;
using qframe::testing::check_close;
using qframe::testing::e;
using qframe::testing::random_frame;

namespace {

Frame e1e1e2() { return Frame(2, {e(2, 0), e(2, 0), e(2, 1)}); }

double sum_sq(const QVector &c)
{
    double s = 0.0;
    for (const auto &q : c) {
        s += norm_sq(q);
    }
    return s;
}

QVector kernel_noise(const QMatrix &k, Rng &rng)
{
    QVector x(k.rows());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        x += k.column(j) * random_quaternion(rng);
    }
    return x;
}

} // namespace

TEST_CASE("construction")
{
    CHECK_THROWS_AS(Frame(0, {}), DimensionMismatch);
    CHECK_THROWS_WITH_AS(Frame(2, {e(2, 0), e(3, 0)}), "frame vector 1 has length 3, expected 2", DimensionMismatch);

    // empty family and too few vectors are rank-deficient, not errors
    CHECK_FALSE(Frame(2, {}).is_frame());
    CHECK_FALSE(Frame(2, {e(2, 0)}).is_frame());
    CHECK_THROWS_AS(optimal_bounds(Frame(2, {e(2, 0)})), RankDeficient);
    CHECK_THROWS_AS(frame_coefficients(Frame(2, {e(2, 0), e(2, 0)}), e(2, 0)), RankDeficient);

    // zero vectors are admitted
    const Frame with_zero(2, {e(2, 0), QVector(2), e(2, 1)});
    CHECK(with_zero.is_frame());
    CHECK(optimal_bounds(with_zero).lower == doctest::Approx(1.0));
}

TEST_CASE("synthesis and analysis")
{
    CHECK(synthesis(Frame(2, {e(2, 0), e(2, 1)})) == QMatrix::identity(2));

    const Quaternion q{0.5, -1, 2, 3};
    const QVector a = analysis(e1e1e2(), e(2, 0) * q);
    CHECK(a == QVector{q, q, 0.0});
    CHECK_THROWS_AS(analysis(e1e1e2(), e(3, 0)), DimensionMismatch);

    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        const Frame f = random_frame(3, 5, rng);
        const QVector u = random_vector(3, rng);
        CHECK(norm(analysis(f, u) - adjoint(f.synthesis()) * u) <= 1e-13 * norm(u));
        const double tu = norm(adjoint(f.synthesis()) * u);
        const double su = inner(f.frame_operator() * u, u).a0;
        CHECK(std::abs(su - tu * tu) <= 1e-12 * tu * tu);
    }
}

TEST_CASE("frame operator")
{
    CHECK(max_abs_diff(frame_operator(e1e1e2()), QMatrix::diagonal({2.0, 1.0})) == 0.0);

    Rng rng(22);
    const QMatrix u = random_unitary(4, rng);
    const Frame onb = Frame::from_synthesis(u);
    CHECK(max_abs_diff(onb.frame_operator(), QMatrix::identity(4)) <= 1e-12);

    for (int t = 0; t < 30; ++t) {
        const Frame f = random_frame(4, 6, rng);
        const QMatrix &s = f.frame_operator();
        CHECK(max_abs_diff(s, f.synthesis() * adjoint(f.synthesis())) <= 1e-12 * s.max_abs());
        CHECK(is_hermitian(s, 0.0));
        CHECK(herm_eig(s).eigenvalues.back() > 0.0);
    }
}

TEST_CASE("optimal bounds")
{
    const FrameBounds b = optimal_bounds(e1e1e2());
    CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.upper == doctest::Approx(2.0).epsilon(1e-14));

    Rng rng(23);
    const FrameBounds onb = optimal_bounds(Frame::from_synthesis(random_unitary(3, rng)));
    CHECK(onb.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(onb.upper == doctest::Approx(1.0).epsilon(1e-12));

    // S = diag(1, 1/4); the lower bound also equals 1 / ||S^-1||
    const Frame half(2, {e(2, 0), e(2, 1) * Quaternion(0.5)});
    const FrameBounds hb = optimal_bounds(half);
    CHECK(hb.lower == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(hb.upper == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(1.0 / operator_norm(half.inverse_frame_operator()) == doctest::Approx(0.25).epsilon(1e-13));

    for (int t = 0; t < 30; ++t) {
        const Frame f = random_frame(3, 7, rng);
        const BoundFormulas bf = bound_formulas(f);
        CHECK(bf.lower_eig <= bf.upper_eig);
        CHECK(bf.lower_inv_norm == doctest::Approx(bf.lower_eig).epsilon(1e-9));
        CHECK(bf.lower_pinv == doctest::Approx(bf.lower_eig).epsilon(1e-9));
        CHECK(bf.upper_norm_s == doctest::Approx(bf.upper_eig).epsilon(1e-9));
        CHECK(bf.upper_norm_t == doctest::Approx(bf.upper_eig).epsilon(1e-9));
    }
}

TEST_CASE("frame inequality is satisfied and attained")
{
    Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        const Frame f = random_frame(4, 6, rng);
        const FrameBounds b = optimal_bounds(f);
        for (int s = 0; s < 50; ++s) {
            QVector u = random_vector(4, rng);
            u = u * Quaternion(1.0 / norm(u));
            const double sum = sum_sq(analysis(f, u));
            CHECK(sum >= b.lower * (1.0 - 1e-9));
            CHECK(sum <= b.upper * (1.0 + 1e-9));
        }
        const QMatrix &u = f.spectrum().eigenvectors;
        CHECK(sum_sq(analysis(f, u.column(0))) == doctest::Approx(b.upper).epsilon(1e-6));
        CHECK(sum_sq(analysis(f, u.column(3))) == doctest::Approx(b.lower).epsilon(1e-6));
    }
}

TEST_CASE("frame coefficients")
{
    Rng rng(25);
    const QMatrix basis = random_unitary(2, rng);
    const QVector v1 = basis.column(0);
    const QVector v2 = basis.column(1);
    const Frame f(2, {v1, v1, v2});
    const QVector c = frame_coefficients(f, v1 * Quaternion(2.0));
    check_close(c[0], 1.0, 1e-12);
    check_close(c[1], 1.0, 1e-12);
    check_close(c[2], 0.0, 1e-12);

    const Frame onb = Frame::from_synthesis(basis);
    const QVector u = random_vector(2, rng);
    const QVector co = frame_coefficients(onb, u);
    check_close(co[0], inner(v1, u), 1e-12 * norm(u));
    check_close(co[1], inner(v2, u), 1e-12 * norm(u));

    for (int t = 0; t < 30; ++t) {
        const Frame g = random_frame(3, 6, rng);
        const QVector x = random_vector(3, rng);
        const QVector cx = frame_coefficients(g, x);
        const QVector via_pinv = pinv(g.synthesis()) * x;
        for (std::size_t i = 0; i < cx.size(); ++i) {
            check_close(cx[i], via_pinv[i], 1e-10 * norm(via_pinv));
        }
        CHECK(norm(reconstruct(g, cx) - x) <= 1e-9 * norm(x));
        CHECK(norm(cx - solve_min_norm(g.synthesis(), x)) <= 1e-9 * norm(cx));
    }
}

TEST_CASE("reconstruction and the natural representation")
{
    Rng rng(26);
    const QMatrix basis = random_unitary(2, rng);
    const QVector v1 = basis.column(0);
    const Frame f(2, {v1, v1, basis.column(1)});
    const QVector target = v1 * Quaternion(2.0);
    CHECK(norm(reconstruct(f, QVector{2.0, 0.0, 0.0}) - target) <= 1e-15);
    CHECK(norm(reconstruct(f, QVector{1.0, 1.0, 0.0}) - target) <= 1e-15);
    CHECK_THROWS_AS(reconstruct(f, QVector(2)), DimensionMismatch);

    for (int t = 0; t < 50; ++t) {
        const Frame g = random_frame(4, 7, rng);
        const QVector u = random_vector(4, rng);
        const NaturalRepresentation nr = natural_representation(g, u);
        CHECK(norm(nr.primal - u) <= 1e-9 * norm(u));
        CHECK(norm(nr.dual_side - u) <= 1e-9 * norm(u));
        CHECK(nr.discrepancy <= 1e-9 * norm(u));
    }
}

TEST_CASE("minimal-norm identity")
{
    Rng rng(27);
    const QMatrix basis = random_unitary(2, rng);
    const QVector v1 = basis.column(0);
    const Frame f(2, {v1, v1, basis.column(1)});
    const QVector u = v1 * Quaternion(2.0);

    const PythagorasCheck p = pythagoras_check(f, u, QVector{2.0, 0.0, 0.0});
    CHECK(p.lhs == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(p.rhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(p.residual <= 1e-12);

    const PythagorasCheck self = pythagoras_check(f, u, frame_coefficients(f, u));
    CHECK(self.residual <= 1e-14);
    CHECK(self.lhs == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(pythagoras_check(f, u, QVector{1.0, 0.0, 0.0}), NotARepresentation);

    for (int t = 0; t < 20; ++t) {
        const Frame g = random_frame(3, 6, rng);
        const QVector x = random_vector(3, rng);
        const QVector c = frame_coefficients(g, x);
        const QMatrix k = kernel_basis(g.synthesis());
        for (int s = 0; s < 10; ++s) {
            const QVector q = c + kernel_noise(k, rng);
            const PythagorasCheck pc = pythagoras_check(g, x, q);
            CHECK(pc.residual <= 1e-9 * pc.lhs);
            CHECK(sum_sq(c) < sum_sq(q));
        }
    }
}

TEST_CASE("canonical dual and Parseval normalization")
{
    const Frame d = canonical_dual(e1e1e2());
    REQUIRE(d.size() == 3);
    CHECK(norm(d[0] - e(2, 0) * Quaternion(0.5)) <= 1e-15);
    CHECK(norm(d[1] - e(2, 0) * Quaternion(0.5)) <= 1e-15);
    CHECK(norm(d[2] - e(2, 1)) <= 1e-15);
    const FrameBounds db = optimal_bounds(d);
    CHECK(db.lower == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(db.upper == doctest::Approx(1.0).epsilon(1e-14));

    Rng rng(28);
    const Frame onb = Frame::from_synthesis(random_unitary(3, rng));
    const Frame od = canonical_dual(onb);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(norm(od[i] - onb[i]) <= 1e-12);
    }

    const Frame p = parseval_normalize(e1e1e2());
    CHECK(norm(p[0] - e(2, 0) * Quaternion(1.0 / std::sqrt(2.0))) <= 1e-15);
    CHECK(norm(p[1] - e(2, 0) * Quaternion(1.0 / std::sqrt(2.0))) <= 1e-15);
    CHECK(norm(p[2] - e(2, 1)) <= 1e-15);
    CHECK(max_abs_diff(p.frame_operator(), QMatrix::identity(2)) <= 1e-15);

    for (int t = 0; t < 30; ++t) {
        const Frame f = random_frame(4, 6, rng);
        const FrameBounds b = optimal_bounds(f);
        const Frame fd = canonical_dual(f);
        const FrameBounds fb = optimal_bounds(fd);
        CHECK(fb.lower == doctest::Approx(1.0 / b.upper).epsilon(1e-9));
        CHECK(fb.upper == doctest::Approx(1.0 / b.lower).epsilon(1e-9));
        const Frame back = canonical_dual(fd);
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(max_abs(back[i] - f[i]) <= 1e-9 * std::max(1.0, max_abs(f[i])));
        }
        CHECK(max_abs_diff(parseval_normalize(f).frame_operator(), QMatrix::identity(4)) <= 1e-9);
    }
}

TEST_CASE("coefficient transport operator")
{
    Rng rng(29);
    const QMatrix r = random_matrix(3, 3, rng);
    const QMatrix lam = lambda_operator(Frame(3, {e(3, 0), e(3, 1), e(3, 2)}), r);
    CHECK(max_abs_diff(lam, r) <= 1e-15);

    const Frame f = random_frame(3, 5, rng);
    const QMatrix id_lam = lambda_operator(f, QMatrix::identity(3));
    for (int s = 0; s < 20; ++s) {
        const QVector u = random_vector(3, rng);
        const QVector c = frame_coefficients(f, u);
        CHECK(norm(id_lam * c - c) <= 1e-9 * norm(c));
    }

    for (int t = 0; t < 30; ++t) {
        const Frame g = random_frame(3, 6, rng);
        const QMatrix rr = random_matrix(3, 3, rng);
        const QMatrix l = lambda_operator(g, rr);
        const FrameBounds b = optimal_bounds(g);
        CHECK(operator_norm(l) <= b.upper * operator_norm(rr) / b.lower * (1.0 + 1e-9));
        for (int s = 0; s < 5; ++s) {
            const QVector u = random_vector(3, rng);
            const QVector want = frame_coefficients(g, rr * u);
            CHECK(norm(l * frame_coefficients(g, u) - want) <= 1e-9 * norm(want));
        }
    }
    CHECK_THROWS_AS(lambda_operator(f, QMatrix::identity(2)), DimensionMismatch);
    CHECK_THROWS_AS(lambda_operator(Frame(2, {e(2, 0)}), QMatrix::identity(2)), RankDeficient);
}

TEST_CASE("frame report")
{
    const FrameReport ok = frame_report(e1e1e2());
    CHECK(ok.status == FrameStatus::frame);
    CHECK(ok.bounds.lower == doctest::Approx(1.0));
    CHECK(ok.bounds.upper == doctest::Approx(2.0));
    CHECK(ok.spectrum.size() == 2);
    for (const auto &[name, value] : ok.residuals) {
        INFO(name);
        CHECK(value >= 0.0);
        CHECK(value <= 1e-9);
    }
    CHECK(ok.residuals.count("reconstruction") == 1);
    CHECK(ok.residuals.count("duality") == 1);
    CHECK(ok.residuals.count("parseval") == 1);

    const FrameReport bad = frame_report(Frame(2, {e(2, 0), e(2, 0)}));
    CHECK(bad.status == FrameStatus::rank_deficient);
    CHECK(bad.bounds.lower <= 2.0 * kFrameTol * bad.bounds.upper);
    CHECK(to_string(bad.status) == "rank-deficient");
}

TEST_CASE("concurrent readers share one cache")
{
    Rng rng(30);
    const Frame f = random_frame(5, 9, rng);
    const Frame copy = f;
    std::vector<std::thread> pool;
    std::vector<double> lows(8);
    for (std::size_t i = 0; i < lows.size(); ++i) {
        pool.emplace_back([&, i] {
            const Frame &g = (i % 2 == 0) ? f : copy;
            lows[i] = 1.0 / operator_norm(g.inverse_frame_operator());
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (double x : lows) {
        CHECK(x == lows.front());
    }
    CHECK(&f.frame_operator() == &copy.frame_operator());
}
