#include "qframe/checks.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <functional>

#include "qframe/frame_ops.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

struct Context
{
    Rng rng;
    std::size_t n;
    std::size_t m;
    std::size_t trials;
};

using CaseFn = std::function<double(Context &)>;

struct CaseDef
{
    const char *theorem;
    const char *check;
    double tolerance;
    CaseFn run;
};

/// Tolerance for cases whose residual counts misclassifications.
constexpr double kCountTol = 0.5;

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

double rel_vec(const QVector &x, const QVector &ref) { return norm(x - ref) / std::max(norm(ref), 1e-300); }

double rel_mat(const QMatrix &x, const QMatrix &ref) { return max_abs_diff(x, ref) / std::max(ref.max_abs(), 1e-300); }

Frame random_frame(Context &c)
{
    std::vector<QVector> vs;
    vs.reserve(c.m);
    for (std::size_t i = 0; i < c.m; ++i) {
        vs.push_back(random_vector(c.n, c.rng));
    }
    return Frame(c.n, std::move(vs));
}

QVector kernel_sample(const QMatrix &k, Context &c)
{
    QVector x(k.rows());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        x += k.column(j) * random_quaternion(c.rng);
    }
    return x;
}

double quaternion_axioms(Context &c)
{
    const Quaternion units[] = {1.0, Quaternion::i(), Quaternion::j(), Quaternion::k()};
    double worst = 0.0;
    // closure of {+-1, +-i, +-j, +-k} and i j = k, j k = i, k i = j
    for (const auto &p : units) {
        for (const auto &q : units) {
            const Quaternion r = p * q;
            int hits = 0;
            for (const auto &u : units) {
                hits += (r == u || r == -u) ? 1 : 0;
            }
            worst = std::max(worst, hits == 1 ? 0.0 : 1.0);
        }
    }
    worst = std::max(worst, modulus(Quaternion::i() * Quaternion::j() - Quaternion::k()));
    worst = std::max(worst, modulus(Quaternion::j() * Quaternion::k() - Quaternion::i()));
    worst = std::max(worst, modulus(Quaternion::k() * Quaternion::i() - Quaternion::j()));
    for (std::size_t t = 0; t < 50 * c.trials; ++t) {
        const Quaternion p = random_quaternion(c.rng);
        const Quaternion q = random_quaternion(c.rng);
        worst = std::max(worst, rel(modulus(p * q), modulus(p) * modulus(q)));
    }
    return worst;
}

double conjugation(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < 50 * c.trials; ++t) {
        const Quaternion p = random_quaternion(c.rng);
        const Quaternion q = random_quaternion(c.rng);
        worst = std::max(worst, modulus(conj(p * q) - conj(q) * conj(p)) / (modulus(p) * modulus(q)));
        const Quaternion inv = inverse(q);
        worst = std::max(worst, modulus(q * inv - Quaternion(1.0)));
    }
    return worst;
}

double cauchy_schwarz(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < 50 * c.trials; ++t) {
        const QVector u = random_vector(c.n, c.rng);
        const QVector v = random_vector(c.n, c.rng);
        const double bound = norm(u) * norm(v);
        worst = std::max(worst, std::max(0.0, modulus(inner(u, v)) - bound) / bound);
    }
    return worst;
}

double inner_product_axioms(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QVector u = random_vector(c.n, c.rng);
        const QVector v = random_vector(c.n, c.rng);
        const Quaternion q = random_quaternion(c.rng);
        const double scale = norm(u) * norm(v) * modulus(q);
        worst = std::max(worst, modulus(inner(u, v * q) - inner(u, v) * q) / scale);
        worst = std::max(worst, modulus(inner(u, v) - conj(inner(v, u))) / (norm(u) * norm(v)));
        const Quaternion self = inner(u, u);
        worst = std::max(worst, modulus(self - Quaternion(self.a0)) / self.a0);
        worst = std::max(worst, rel(norm(u * q), norm(u) * modulus(q)));
    }
    return worst;
}

double adjoint_identity(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix a = random_matrix(c.m, c.n, c.rng);
        const QVector u = random_vector(c.n, c.rng);
        const QVector v = random_vector(c.m, c.rng);
        const double scale = a.frobenius() * norm(u) * norm(v);
        worst = std::max(worst, modulus(inner(a * u, v) - inner(u, adjoint(a) * v)) / scale);
        worst = std::max(worst, adjoint(adjoint(a)) == a ? 0.0 : 1.0);
    }
    return worst;
}

double complex_adjoint_homomorphism(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix a = random_matrix(c.n, c.n, c.rng);
        const QMatrix b = random_matrix(c.n, c.n, c.rng);
        const CMatrix ca = complex_adjoint(a);
        const CMatrix cb = complex_adjoint(b);
        const double scale = a.max_abs() * b.max_abs() * static_cast<double>(c.n);
        worst = std::max(worst, (complex_adjoint(a * b) - ca * cb).max_abs() / scale);
        worst = std::max(worst, (complex_adjoint(a + b) - (ca + cb)).max_abs() / (a.max_abs() + b.max_abs()));
        worst = std::max(worst, (complex_adjoint(adjoint(a)) - ca.adjoint()).max_abs() / a.max_abs());
    }
    return worst;
}

double hermitian_spectrum(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix h = random_hermitian(c.n, c.rng);
        const HermEig e = herm_eig(h);
        QMatrix d(c.n, c.n);
        for (std::size_t i = 0; i < c.n; ++i) {
            d(i, i) = e.eigenvalues[i];
        }
        const double scale = operator_norm(h);
        const QMatrix &u = e.eigenvectors;
        worst = std::max(worst, operator_norm(h - u * d * adjoint(u)) / scale);
        worst = std::max(worst, max_abs_diff(adjoint(u) * u, QMatrix::identity(c.n)));
        const CEig ce = jacobi_hermitian_eig(complex_adjoint(h));
        for (std::size_t i = 0; i < c.n; ++i) {
            worst = std::max(worst, std::abs(ce.values[2 * i] - e.eigenvalues[i]) / scale);
            worst = std::max(worst, std::abs(ce.values[2 * i + 1] - e.eigenvalues[i]) / scale);
        }
    }
    return worst;
}

double square_root(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix x = random_matrix(c.n, c.n, c.rng);
        const QMatrix p = x * adjoint(x);
        const QMatrix r = sqrt_psd(p);
        const double scale = operator_norm(p);
        worst = std::max(worst, operator_norm(r * r - p) / scale);
        worst = std::max(worst, operator_norm(r * p - p * r) / (scale * std::sqrt(scale)));
        worst = std::max(worst, herm_eig(r).eigenvalues.back() < -1e-10 * std::sqrt(scale) ? 1.0 : 0.0);
    }
    return worst;
}

double penrose(Context &c)
{
    double worst = 0.0;
    const std::size_t top = std::min(c.n, c.m);
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::size_t r = t % (top + 1);
        const QMatrix a = random_matrix_of_rank(c.n, c.m, r, c.rng);
        const QMatrix p = pinv(a);
        const double sa = std::max(operator_norm(a), 1e-300);
        const double sp = std::max(operator_norm(p), 1e-300);
        worst = std::max(worst, operator_norm(a * p * a - a) / sa);
        worst = std::max(worst, operator_norm(p * a * p - p) / sp);
        const QMatrix ap = a * p;
        const QMatrix pa = p * a;
        worst = std::max(worst, operator_norm(adjoint(ap) - ap));
        worst = std::max(worst, operator_norm(adjoint(pa) - pa));
    }
    return worst;
}

double minimal_norm_solution(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::size_t r = 1 + t % std::min(c.n, c.m);
        const QMatrix a = random_matrix_of_rank(c.n, c.m, r, c.rng);
        const QVector v = a * random_vector(c.m, c.rng);
        const QVector x = solve_min_norm(a, v);
        worst = std::max(worst, rel_vec(a * x, v));
        const QMatrix k = kernel_basis(a);
        for (int s = 0; s < 5; ++s) {
            const QVector kv = kernel_sample(k, c);
            const QVector y = x + kv;
            // Pythagoras: ||x + k||^2 = ||x||^2 + ||k||^2 and x is the shortest
            const double lhs = norm(y) * norm(y);
            const double rhs = norm(x) * norm(x) + norm(kv) * norm(kv);
            worst = std::max(worst, rel(lhs, rhs));
            worst = std::max(worst, norm(x) > norm(y) * (1.0 + 1e-12) ? 1.0 : 0.0);
        }
    }
    return worst;
}

double range_kernel_duality(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::size_t r = t % (std::min(c.n, c.m) + 1);
        const QMatrix a = random_matrix_of_rank(c.n, c.m, r, c.rng);
        const QMatrix k = kernel_basis(adjoint(a));
        worst = std::max(worst, k.cols() + r == c.n ? 0.0 : 1.0);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            const QVector y = a * random_vector(c.m, c.rng);
            worst = std::max(worst, modulus(inner(k.column(j), y)) / std::max(norm(y), 1e-300));
        }
    }
    return worst;
}

double surjectivity_duality(Context &c)
{
    double mismatches = 0.0;
    for (std::size_t t = 0; t < 5 * c.trials; ++t) {
        const std::size_t rows = 1 + t % (c.n + 1);
        const std::size_t cols = 1 + (t / 3) % (c.m);
        const std::size_t r = (t / 7) % (std::min(rows, cols) + 1);
        const QMatrix a = random_matrix_of_rank(rows, cols, r, c.rng);
        const bool surj = is_surjective(a);
        mismatches += (surj != is_bounded_below(adjoint(a))) ? 1.0 : 0.0;
        mismatches += (surj != (r == rows)) ? 1.0 : 0.0;
        mismatches += (kernel_basis(a).cols() + rank(a) != cols) ? 1.0 : 0.0;
    }
    return mismatches;
}

double frame_operator_quadratic_form(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QVector u = random_vector(c.n, c.rng);
        const double tu = norm(adjoint(f.synthesis()) * u);
        const Quaternion su = inner(f.frame_operator() * u, u);
        worst = std::max(worst, rel(su.a0, tu * tu));
        worst = std::max(worst, rel_mat(f.frame_operator(), f.synthesis() * adjoint(f.synthesis())));
        double sum = 0.0;
        for (const auto &q : analysis(f, u)) {
            sum += norm_sq(q);
        }
        worst = std::max(worst, rel(sum, tu * tu));
    }
    return worst;
}

double optimal_bound_formulas(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const BoundFormulas b = bound_formulas(random_frame(c));
        worst = std::max({worst, rel(b.lower_inv_norm, b.lower_eig), rel(b.lower_pinv, b.lower_eig),
                          rel(b.upper_norm_s, b.upper_eig), rel(b.upper_norm_t, b.upper_eig)});
    }
    return worst;
}

double frame_inequality(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const FrameBounds b = optimal_bounds(f);
        for (int s = 0; s < 20; ++s) {
            QVector u = random_vector(c.n, c.rng);
            u = u * Quaternion(1.0 / norm(u));
            double sum = 0.0;
            for (const auto &q : analysis(f, u)) {
                sum += norm_sq(q);
            }
            worst = std::max(worst, std::max(0.0, b.lower - sum) / b.lower);
            worst = std::max(worst, std::max(0.0, sum - b.upper) / b.upper);
        }
        const QMatrix &u = f.spectrum().eigenvectors;
        const QVector top = u.column(0);
        const QVector bottom = u.column(c.n - 1);
        worst = std::max(worst, rel(norm(adjoint(f.synthesis()) * top) * norm(adjoint(f.synthesis()) * top), b.upper));
        worst = std::max(worst, rel(norm(adjoint(f.synthesis()) * bottom) * norm(adjoint(f.synthesis()) * bottom), b.lower));
    }
    return worst;
}

double pseudo_inverse_lemma(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix p = pinv(f.synthesis());
        worst = std::max(worst, rel_mat(adjoint(f.synthesis()) * f.inverse_frame_operator(), p));
    }
    return worst;
}

double natural_representation_case(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        for (int s = 0; s < 5; ++s) {
            const QVector u = random_vector(c.n, c.rng);
            const NaturalRepresentation nr = natural_representation(f, u);
            worst = std::max({worst, rel_vec(nr.primal, u), rel_vec(nr.dual_side, u), nr.discrepancy / norm(u)});
        }
    }
    return worst;
}

double minimal_coefficients(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix k = kernel_basis(f.synthesis());
        const QVector u = random_vector(c.n, c.rng);
        const QVector coeffs = frame_coefficients(f, u);
        worst = std::max(worst, rel_vec(coeffs, solve_min_norm(f.synthesis(), u)));
        for (int s = 0; s < 5; ++s) {
            const QVector kv = kernel_sample(k, c);
            const QVector q = coeffs + kv;
            const PythagorasCheck p = pythagoras_check(f, u, q);
            worst = std::max(worst, p.residual / p.lhs);
            if (norm(kv) > 1e-6 && !(norm(coeffs) < norm(q))) {
                worst = std::max(worst, 1.0);
            }
        }
    }
    return worst;
}

double lambda_transport(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix r = random_matrix(c.n, c.n, c.rng);
        const QMatrix lam = lambda_operator(f, r);
        for (int s = 0; s < 5; ++s) {
            const QVector u = random_vector(c.n, c.rng);
            worst = std::max(worst, rel_vec(lam * frame_coefficients(f, u), frame_coefficients(f, r * u)));
        }
    }
    return worst;
}

double lambda_bound(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix r = random_matrix(c.n, c.n, c.rng);
        const FrameBounds b = optimal_bounds(f);
        const double bound = b.upper * operator_norm(r) / b.lower;
        worst = std::max(worst, std::max(0.0, operator_norm(lambda_operator(f, r)) / bound - 1.0));
    }
    return worst;
}

double surjectivity_criterion(Context &c)
{
    double mismatches = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix full = random_matrix(c.n, c.n, c.rng);
        const QMatrix deficient = random_matrix_of_rank(c.n, c.n, c.n - 1, c.rng);
        mismatches += map_frame(full, f).frame.is_frame() ? 0.0 : 1.0;
        mismatches += map_frame(deficient, f).frame.is_frame() ? 1.0 : 0.0;
        const MappedFrame mf = map_frame(full, f);
        mismatches += (mf.operator_surjective == mf.frame.is_frame()) ? 0.0 : 1.0;
    }
    return mismatches;
}

double image_frame_operator(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix l = random_matrix(c.n, c.n, c.rng);
        const MappedFrame mf = map_frame(l, f);
        worst = std::max(worst, mf.frame_operator_residual);
        const FrameBounds b = optimal_bounds(f);
        const FrameBounds bl = optimal_bounds(mf.frame);
        const double m2 = mf.min_singular_value * mf.min_singular_value;
        worst = std::max(worst, std::max(0.0, b.lower * m2 - bl.lower) / bl.lower);
        worst = std::max(worst, std::max(0.0, bl.upper - b.upper * mf.operator_norm * mf.operator_norm) / bl.upper);
    }
    return worst;
}

double canonical_dual_case(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const FrameBounds b = optimal_bounds(f);
        const Frame d = canonical_dual(f);
        const FrameBounds db = optimal_bounds(d);
        worst = std::max({worst, rel(db.lower, 1.0 / b.upper), rel(db.upper, 1.0 / b.lower)});
        const Frame dd = canonical_dual(d);
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst = std::max(worst, max_abs(dd[i] - f[i]) / std::max(max_abs(f[i]), 1e-300));
        }
        worst = std::max(worst, max_abs_diff(parseval_normalize(f).frame_operator(), QMatrix::identity(c.n)));
    }
    return worst;
}

double unitary_invariance(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        worst = std::max(worst, unitary_invariance_check(random_unitary(c.n, c.rng), f).residual);
    }
    return worst;
}

double projection_case(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const std::size_t d = 1 + t % c.n;
        const QMatrix u = random_unitary(c.n, c.rng);
        QMatrix b(c.n, d);
        for (std::size_t j = 0; j < d; ++j) {
            b.set_column(j, u.column(j));
        }
        const ProjectedFrame pf = project_frame(b, f);
        worst = std::max(worst, std::max(0.0, pf.inherited.lower - pf.optimal.lower) / pf.inherited.lower);
        worst = std::max(worst, std::max(0.0, pf.optimal.upper - pf.inherited.upper) / pf.inherited.upper);
        const ProjectedFrame pp = project_frame(b, parseval_normalize(f));
        worst = std::max(worst, max_abs_diff(pp.frame.frame_operator(), QMatrix::identity(d)));
    }
    return worst;
}

double intertwiner_case(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        // ker T1 inside ker T2 whenever G = M F for any operator M
        const QMatrix mop = random_matrix_of_rank(c.n, c.n, 1 + t % c.n, c.rng);
        std::vector<QVector> gv;
        for (const auto &u : f.vectors()) {
            gv.push_back(mop * u);
        }
        const Frame g(c.n, gv);
        const Intertwiner it = intertwiner(f, g);
        if (!it.op) {
            worst = std::max(worst, 1.0);
            continue;
        }
        double scale = 0.0;
        for (const auto &v : g.vectors()) {
            scale = std::max(scale, norm(v));
        }
        worst = std::max(worst, it.residual / std::max(scale, 1e-300));
    }
    // the two-sided negative case must produce a witness
    const Frame a(2, {QVector::basis(2, 0), QVector::basis(2, 0), QVector::basis(2, 1)});
    const Frame b(2, {QVector::basis(2, 0), QVector::basis(2, 1), QVector::basis(2, 1)});
    const Intertwiner neg = intertwiner(a, b);
    worst = std::max(worst, (neg.op || !neg.witness) ? 1.0 : 0.0);
    return worst;
}

double equivalence_case(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Frame f = random_frame(c);
        const QMatrix l1 = random_matrix(c.n, c.n, c.rng);
        const QMatrix l2 = random_matrix(c.n, c.n, c.rng);
        const Frame g = map_frame(l1, f).frame;
        const Frame h = map_frame(l2, g).frame;
        for (const auto &[x, y] : {std::pair{&f, &f}, std::pair{&f, &g}, std::pair{&g, &f},
                                   std::pair{&g, &h}, std::pair{&f, &h}}) {
            const EquivalenceResult r = are_equivalent(*x, *y);
            if (r.relation != Relation::equivalent) {
                worst = std::max(worst, 1.0);
                continue;
            }
            double scale = 0.0;
            for (const auto &v : y->vectors()) {
                scale = std::max(scale, norm(v));
            }
            worst = std::max({worst, r.residual / scale, r.inverse_residual});
        }
        const EquivalenceResult pars = are_equivalent(f, parseval_normalize(f));
        worst = std::max(worst, pars.relation == Relation::equivalent ? 0.0 : 1.0);
    }
    const Frame a(2, {QVector::basis(2, 0), QVector::basis(2, 0), QVector::basis(2, 1)});
    const Frame b(2, {QVector::basis(2, 0), QVector::basis(2, 1), QVector::basis(2, 1)});
    worst = std::max(worst, are_equivalent(a, b).relation == Relation::none ? 0.0 : 1.0);
    return worst;
}

double prescribed_frame_operator(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix x = random_matrix(c.n, c.n, c.rng);
        const QMatrix l = x * adjoint(x) + QMatrix::identity(c.n) * 0.1;
        const Frame f = frame_with_frame_operator(l);
        worst = std::max(worst, operator_norm(f.frame_operator() - l) / operator_norm(l));
        const auto &got = f.spectrum().eigenvalues;
        const auto want = herm_eig(l).eigenvalues;
        for (std::size_t i = 0; i < c.n; ++i) {
            worst = std::max(worst, std::abs(got[i] - want[i]) / want.front());
        }
    }
    return worst;
}

double bessel_bijection(Context &c)
{
    double worst = 0.0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const QMatrix l = random_matrix(c.m, c.n, c.rng);
        const Frame f = bessel_from_operator(l);
        worst = std::max(worst, max_abs_diff(adjoint(f.synthesis()), l));
        const QVector u = random_vector(c.n, c.rng);
        worst = std::max(worst, rel_vec(analysis(f, u), l * u));
    }
    return worst;
}

const std::vector<CaseDef> &case_table()
{
    static const std::vector<CaseDef> table = {
        {"Definition 1", "multiplication table closure and |pq| = |p||q|", 1e-13, quaternion_axioms},
        {"Definition 1", "conj(pq) = conj(q)conj(p) and q q^-1 = 1", 1e-13, conjugation},
        {"Theorem 1", "Cauchy-Schwarz |<u|v>| <= ||u|| ||v||", 1e-12, cauchy_schwarz},
        {"Definition 3", "Hermitian inner product axioms", 1e-12, inner_product_axioms},
        {"Adjoint operator", "<Mu, v> = <u, M* v> and M** = M", 1e-11, adjoint_identity},
        {"Complex adjoint", "star-homomorphism of the complex adjoint", 1e-12, complex_adjoint_homomorphism},
        {"Square root theorem", "Hermitian eigendecomposition and spectrum doubling", 1e-9, hermitian_spectrum},
        {"Square root theorem", "sqrt(P)^2 = P, commuting, positive", 1e-9, square_root},
        {"Pseudo-inverse", "Penrose conditions across ranks", 1e-9, penrose},
        {"Theorem 10", "minimal-norm solution and Pythagoras over the kernel", 1e-8, minimal_norm_solution},
        {"Proposition 1", "R(L)^perp = ker(L*)", 1e-9, range_kernel_duality},
        {"Proposition 4", "surjective iff adjoint bounded below; rank-nullity", kCountTol, surjectivity_duality},
        {"Frame operator remark", "<Su, u> = ||T* u||^2 and S = T T*", 1e-10, frame_operator_quadratic_form},
        {"Theorem 12", "optimal bounds by eigenvalues, norms and pseudo-inverse", 1e-8, optimal_bound_formulas},
        {"Theorem 12", "frame inequality holds and is attained", 1e-9, frame_inequality},
        {"Lemma (pseudo-inverse of T)", "T^+ = T* S^-1", 1e-9, pseudo_inverse_lemma},
        {"Natural representation", "u = sum u_i <S^-1 u_i, u> = sum S^-1 u_i <u_i, u>", 1e-9, natural_representation_case},
        {"Theorem 11", "frame coefficients have minimal norm", 1e-8, minimal_coefficients},
        {"Coefficient transport", "Lambda c(u) = c(Ru)", 1e-9, lambda_transport},
        {"Coefficient transport", "||Lambda|| <= B ||R|| / A", 1e-9, lambda_bound},
        {"Theorem 15", "{L u_i} is a frame iff L is surjective", kCountTol, surjectivity_criterion},
        {"Proposition 8", "frame operator of {L u_i} is L S L*", 1e-9, image_frame_operator},
        {"Corollary 1", "canonical dual bounds, dual of dual, Parseval normalization", 1e-9, canonical_dual_case},
        {"Unitary invariance", "unitary images keep the optimal bounds", 1e-9, unitary_invariance},
        {"Projection frames", "projected frames keep bounds; Parseval stays Parseval", 1e-9, projection_case},
        {"Theorem 16", "ker T1 in ker T2 gives L u_i = v_i", 1e-9, intertwiner_case},
        {"Frame equivalence", "equivalent iff ker T1 = ker T2; relation axioms", 1e-9, equivalence_case},
        {"Prescribed frame operator", "{L^1/2 e_i} has frame operator L", 1e-9, prescribed_frame_operator},
        {"Bessel sequences and operators", "analysis operator of {L* v_i} is L", 1e-14, bessel_bijection},
    };
    return table;
}

} // namespace

bool CheckReport::passed() const
{
    return std::all_of(cases.begin(), cases.end(), [](const CheckCase &c) { return c.passed; });
}

CheckReport run_checks(const CheckOptions &options)
{
    if (options.dim == 0 || options.count < options.dim) {
        throw DimensionMismatch("check: need 1 <= dim <= count");
    }
    CheckReport report;
    report.options = options;
    const auto &table = case_table();
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const CaseDef &def = table[idx];
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(idx)};
        Context ctx{Rng(seq), options.dim, options.count, options.trials};
        CheckCase out;
        out.theorem = def.theorem;
        out.check = def.check;
        out.tolerance = options.tolerance.value_or(def.tolerance);
        try {
            out.max_residual = def.run(ctx);
            out.passed = std::isfinite(out.max_residual) && out.max_residual <= out.tolerance;
        } catch (const std::exception &e) {
            out.max_residual = std::numeric_limits<double>::infinity();
            out.error = e.what();
            out.passed = false;
        }
        report.cases.push_back(std::move(out));
    }
    return report;
}

nlohmann::json check_report_to_json(const CheckReport &report)
{
    nlohmann::json cases = nlohmann::json::array();
    for (std::size_t i = 0; i < report.cases.size(); ++i) {
        const CheckCase &c = report.cases[i];
        nlohmann::json entry = {{"index", i},
                                {"theorem", c.theorem},
                                {"check", c.check},
                                {"max_residual", std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual)
                                                                               : nlohmann::json("inf")},
                                {"tolerance", c.tolerance},
                                {"passed", c.passed}};
        if (!c.error.empty()) {
            entry["error"] = c.error;
        }
        cases.push_back(std::move(entry));
    }
    return {{"seed", report.options.seed},
            {"dim", report.options.dim},
            {"count", report.options.count},
            {"trials", report.options.trials},
            {"passed", report.passed()},
            {"cases", cases}};
}

} // namespace qframe
