// qframe: command-line front end for quaternionic frame computations.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qframe/checks.hpp"
#include "qframe/frame.hpp"
#include "qframe/frame_ops.hpp"
#include "qframe/io.hpp"
#include "qframe/random.hpp"

namespace {

using namespace qframe;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Common
{
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::string out;
    bool json_only = false;
};

void emit(const Common &common, const json &j)
{
    const std::string text = io::dump(j);
    if (common.out.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(common.out, text);
    }
}

Frame load_frame(const std::string &path)
{
    try {
        return io::frame_from_json(io::read_json_file(path));
    } catch (const Error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

QMatrix load_operator(const std::string &path)
{
    try {
        return io::operator_from_json(io::read_json_file(path));
    } catch (const Error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

QVector load_vector(const std::string &path)
{
    try {
        return io::vector_from_json(io::read_json_file(path));
    } catch (const Error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

Frame with_vectors(std::size_t dim, std::size_t count, Rng &rng)
{
    std::vector<QVector> vs;
    vs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        vs.push_back(random_vector(dim, rng));
    }
    return Frame(dim, std::move(vs));
}

// ------------------------------------------------------------------ gen

struct GenArgs
{
    std::size_t n = 0;
    std::size_t m = 0;
    std::string kind = "generic";
    std::string op_path;
};

int cmd_gen(const GenArgs &a, const Common &common)
{
    Rng rng(common.seed);
    Frame result(1, {});
    if (a.kind == "with-operator") {
        if (a.op_path.empty()) {
            throw ParseError("gen --kind with-operator needs --operator <file>");
        }
        const QMatrix l = load_operator(a.op_path);
        const std::size_t n = l.rows();
        if (a.n != 0 && a.n != n) {
            throw ParseError("--n " + std::to_string(a.n) + " disagrees with the " + std::to_string(n) +
                             "x" + std::to_string(l.cols()) + " operator");
        }
        const std::size_t m = a.m == 0 ? n : a.m;
        if (m < n) {
            throw ParseError("need m >= n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
        }
        if (m == n) {
            result = frame_with_frame_operator(l);
        } else {
            // L^1/2 applied to a Parseval frame has frame operator L
            const Frame base = frame_with_frame_operator(l);
            const Frame parseval = parseval_normalize(with_vectors(n, m, rng));
            result = map_frame(base.synthesis(), parseval).frame;
        }
    } else {
        if (a.n == 0 || a.m < a.n) {
            throw ParseError("need 1 <= n <= m (got n=" + std::to_string(a.n) + ", m=" + std::to_string(a.m) + ")");
        }
        result = with_vectors(a.n, a.m, rng);
        if (a.kind == "parseval") {
            result = parseval_normalize(result);
        } else if (a.kind != "generic") {
            throw ParseError("unknown --kind " + a.kind);
        }
    }
    emit(common, io::frame_to_json(result));
    return kExitOk;
}

// ----------------------------------------------------------------- info

int cmd_info(const std::string &path, const Common &common)
{
    const Frame f = load_frame(path);
    const FrameReport report = frame_report(f);
    json j = io::report_to_json(report);
    j["dim"] = f.dim();
    j["count"] = f.size();
    if (report.status == FrameStatus::frame) {
        const BoundFormulas b = bound_formulas(f);
        j["bounds_by_formula"] = {
            {"lower", {{"lambda_min_S", b.lower_eig}, {"inverse_norm_S_inv", b.lower_inv_norm}, {"inverse_norm_pinv_T_squared", b.lower_pinv}}},
            {"upper", {{"lambda_max_S", b.upper_eig}, {"norm_S", b.upper_norm_s}, {"norm_T_squared", b.upper_norm_t}}},
        };
    }
    if (!common.json_only) {
        std::cout << "frame of " << f.size() << " vectors in H^" << f.dim() << "\n";
        std::cout << "status        " << to_string(report.status) << "\n";
        std::cout << "lower bound   " << fmt(report.bounds.lower) << "\n";
        std::cout << "upper bound   " << fmt(report.bounds.upper) << "\n";
        std::cout << "spectrum(S)  ";
        for (double x : report.spectrum) {
            std::cout << " " << fmt(x);
        }
        std::cout << "\n";
        for (const auto &[name, value] : report.residuals) {
            std::cout << "  " << std::left << std::setw(24) << name << fmt(value) << "\n";
        }
    }
    emit(common, j);
    return kExitOk;
}

// ------------------------------------------------------- dual/parseval

int cmd_dual(const std::string &path, const Common &common)
{
    const Frame f = load_frame(path);
    const Frame d = canonical_dual(f);
    const FrameBounds b = optimal_bounds(f);
    const FrameBounds db = optimal_bounds(d);
    const Frame dd = canonical_dual(d);
    double back = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        back = std::max(back, max_abs(dd[i] - f[i]));
    }
    json j = {{"theorem", "Corollary 1: the canonical dual frame {S^-1 u_i} has bounds (1/B, 1/A)"},
              {"bounds", {{"lower", b.lower}, {"upper", b.upper}}},
              {"dual_bounds", {{"lower", db.lower}, {"upper", db.upper}}},
              {"residuals",
               {{"dual_lower_vs_inverse_upper", std::abs(db.lower - 1.0 / b.upper)},
                {"dual_upper_vs_inverse_lower", std::abs(db.upper - 1.0 / b.lower)},
                {"dual_of_dual", back}}}};
    if (common.out.empty()) {
        j["frame"] = io::frame_to_json(d);
        std::cout << io::dump(j);
    } else {
        io::write_text_file(common.out, io::dump(io::frame_to_json(d)));
        std::cout << io::dump(j);
    }
    return kExitOk;
}

int cmd_parseval(const std::string &path, const Common &common)
{
    const Frame f = load_frame(path);
    const Frame p = parseval_normalize(f);
    const double resid = max_abs_diff(p.frame_operator(), QMatrix::identity(f.dim()));
    json j = {{"theorem", "Corollary 1: {S^-1/2 u_i} is a Parseval frame"},
              {"residuals", {{"frame_operator_minus_identity", resid}}}};
    if (common.out.empty()) {
        j["frame"] = io::frame_to_json(p);
        std::cout << io::dump(j);
    } else {
        io::write_text_file(common.out, io::dump(io::frame_to_json(p)));
        std::cout << io::dump(j);
    }
    return kExitOk;
}

// -------------------------------------------------- coeffs/reconstruct

int cmd_coeffs(const std::string &frame_path, const std::string &vector_path, const Common &common)
{
    const Frame f = load_frame(frame_path);
    const QVector u = load_vector(vector_path);
    const QVector c = frame_coefficients(f, u);
    const NaturalRepresentation nr = natural_representation(f, u);
    const QVector via_pinv = matvec(pinv(f.synthesis()), u);
    json j = {{"theorem", "Lemma: T^+ = T* S^-1; the frame coefficients are the minimal-norm representation"},
              {"coefficients", io::vector_entries(c)},
              {"residuals",
               {{"reconstruction", norm(reconstruct(f, c) - u)},
                {"dual_expansion", nr.discrepancy},
                {"pseudo_inverse", norm(via_pinv - c)}}}};
    emit(common, j);
    return kExitOk;
}

int cmd_reconstruct(const std::string &frame_path, const std::string &coeff_path, const Common &common)
{
    const Frame f = load_frame(frame_path);
    const QVector c = load_vector(coeff_path);
    const QVector u = reconstruct(f, c);
    json j = {{"vector", io::vector_entries(u)}};
    json residuals = json::object();
    if (f.is_frame()) {
        const QVector natural = frame_coefficients(f, u);
        residuals["natural_round_trip"] = norm(reconstruct(f, natural) - u);
        const PythagorasCheck p = pythagoras_check(f, u, c);
        residuals["minimal_norm_identity"] = p.residual;
        j["natural_coefficients"] = io::vector_entries(natural);
    }
    j["residuals"] = residuals;
    emit(common, j);
    return kExitOk;
}

// ------------------------------------------------------------------ map

int cmd_map(const std::string &op_path, const std::string &frame_path, const Common &common)
{
    const QMatrix l = load_operator(op_path);
    const Frame f = load_frame(frame_path);
    const MappedFrame mf = map_frame(l, f);
    const bool image_frame = mf.frame.is_frame();
    json j = {{"theorem", "Theorem 15: {L u_i} is a frame iff L is surjective"},
              {"operator_surjective", mf.operator_surjective},
              {"is_frame", image_frame},
              {"verdict", image_frame ? "frame" : "not a frame"},
              {"report", io::report_to_json(mf.report)}};
    if (image_frame) {
        j["proposition"] = "Proposition 8: the frame operator of {L u_i} is L S L*";
        j["residuals"] = {{"frame_operator_vs_LSLstar", mf.frame_operator_residual}};
    }
    if (common.out.empty()) {
        j["frame"] = io::frame_to_json(mf.frame);
    } else {
        io::write_text_file(common.out, io::dump(io::frame_to_json(mf.frame)));
    }
    std::cout << io::dump(j);
    return kExitOk;
}

// ---------------------------------------------------------------- equiv

int cmd_equiv(const std::string &a, const std::string &b, const Common &common)
{
    const Frame f = load_frame(a);
    const Frame g = load_frame(b);
    json j = io::equivalence_to_json(are_equivalent(f, g));
    j["theorem"] = "Frames are equivalent iff ker(T1) = ker(T2)";
    emit(common, j);
    return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs
{
    std::size_t dim = 4;
    std::size_t count = 7;
    std::size_t trials = 20;
};

int cmd_check(const CheckArgs &a, const Common &common)
{
    CheckOptions opts;
    opts.seed = common.seed;
    opts.dim = a.dim;
    opts.count = a.count;
    opts.trials = a.trials;
    opts.tolerance = common.tol;
    const CheckReport report = run_checks(opts);
    if (!common.json_only) {
        for (std::size_t i = 0; i < report.cases.size(); ++i) {
            const CheckCase &c = report.cases[i];
            std::cout << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(32) << c.theorem
                      << std::setw(14) << fmt(c.max_residual) << " tol " << fmt(c.tolerance) << "  "
                      << c.check;
            if (!c.error.empty()) {
                std::cout << "  [" << c.error << "]";
            }
            std::cout << "\n";
        }
    }
    emit(common, check_report_to_json(report));
    return report.passed() ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App *cmd, Common &common, bool with_seed, bool with_tol)
{
    if (with_seed) {
        cmd->add_option("--seed", common.seed, "random seed");
    }
    if (with_tol) {
        cmd->add_option("--tol", common.tol, "tolerance override");
    }
    cmd->add_option("--out", common.out, "output path");
    cmd->add_flag("--json", common.json_only, "suppress table output");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Frames on quaternionic Hilbert spaces"};
    app.require_subcommand(1);

    Common common;
    GenArgs gen_args;
    CheckArgs check_args;
    std::string path_a;
    std::string path_b;

    auto *gen = app.add_subcommand("gen", "generate a random frame");
    gen->add_option("--n", gen_args.n, "ambient dimension");
    gen->add_option("--m", gen_args.m, "number of vectors");
    gen->add_option("--kind", gen_args.kind, "generic | parseval | with-operator")
        ->check(CLI::IsMember({"generic", "parseval", "with-operator"}));
    gen->add_option("--operator", gen_args.op_path, "operator file for --kind with-operator");
    add_common(gen, common, true, false);

    auto *info = app.add_subcommand("info", "frame status, optimal bounds and spectrum");
    info->add_option("frame", path_a)->required();
    add_common(info, common, false, false);

    auto *dual = app.add_subcommand("dual", "canonical dual frame");
    dual->add_option("frame", path_a)->required();
    add_common(dual, common, false, false);

    auto *pars = app.add_subcommand("parseval", "Parseval normalization S^-1/2 u_i");
    pars->add_option("frame", path_a)->required();
    add_common(pars, common, false, false);

    auto *coeffs = app.add_subcommand("coeffs", "frame coefficients of a vector");
    coeffs->add_option("frame", path_a)->required();
    coeffs->add_option("vector", path_b)->required();
    add_common(coeffs, common, false, false);

    auto *recon = app.add_subcommand("reconstruct", "synthesize a vector from coefficients");
    recon->add_option("frame", path_a)->required();
    recon->add_option("coefficients", path_b)->required();
    add_common(recon, common, false, false);

    auto *map = app.add_subcommand("map", "image of a frame under an operator");
    map->add_option("operator", path_a)->required();
    map->add_option("frame", path_b)->required();
    add_common(map, common, false, false);

    auto *equiv = app.add_subcommand("equiv", "frame equivalence test");
    equiv->add_option("first", path_a)->required();
    equiv->add_option("second", path_b)->required();
    add_common(equiv, common, false, false);

    auto *check = app.add_subcommand("check", "run the numerical theorem checks");
    check->add_option("--dim", check_args.dim, "ambient dimension");
    check->add_option("--count", check_args.count, "frame size");
    check->add_option("--trials", check_args.trials, "random instances per check");
    add_common(check, common, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_args, common);
        }
        if (info->parsed()) {
            return cmd_info(path_a, common);
        }
        if (dual->parsed()) {
            return cmd_dual(path_a, common);
        }
        if (pars->parsed()) {
            return cmd_parseval(path_a, common);
        }
        if (coeffs->parsed()) {
            return cmd_coeffs(path_a, path_b, common);
        }
        if (recon->parsed()) {
            return cmd_reconstruct(path_a, path_b, common);
        }
        if (map->parsed()) {
            return cmd_map(path_a, path_b, common);
        }
        if (equiv->parsed()) {
            return cmd_equiv(path_a, path_b, common);
        }
        if (check->parsed()) {
            return cmd_check(check_args, common);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
