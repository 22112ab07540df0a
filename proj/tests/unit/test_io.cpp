#include <doctest.h>

#include <filesystem>
#include <string>

#include "qframe/io.hpp"
#include "qframe/random.hpp"
#include "test_util.hpp"

using namespace qframe;
using qframe::io::json;
using qframe::testing::e;
using qframe::testing::random_frame;

namespace {

std::string data(const char *name) { return std::string(QFRAME_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("quaternion encoding")
{
    CHECK(io::to_json(Quaternion{1, -2, 0.5, 3}) == json::parse("[1.0, -2.0, 0.5, 3.0]"));
    CHECK(io::quaternion_from_json(json::parse("[0, 1, 0, 0]")) == Quaternion::i());
    CHECK_THROWS_AS(io::quaternion_from_json(json::parse("[0, 1, 0]")), ParseError);
    CHECK_THROWS_AS(io::quaternion_from_json(json::parse("[0, \"x\", 0, 0]")), ParseError);
    CHECK_THROWS_AS(io::quaternion_from_json(json::parse("1.0")), ParseError);
}

TEST_CASE("frame round trip is lossless")
{
    Rng rng(51);
    for (int t = 0; t < 50; ++t) {
        const Frame f = random_frame(1 + t % 5, 6, rng);
        const std::string text = io::dump(io::frame_to_json(f));
        const Frame g = io::frame_from_json(json::parse(text));
        REQUIRE(g.dim() == f.dim());
        REQUIRE(g.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(g[i] == f[i]);
        }
        CHECK(io::dump(io::frame_to_json(g)) == text);
    }
    // extreme magnitudes and signed zero survive
    const Frame x(1, {QVector{Quaternion{1e-310, -0.0, 1.7976931348623157e308, 0.1}}});
    const Frame y = io::frame_from_json(json::parse(io::dump(io::frame_to_json(x))));
    CHECK(y[0] == x[0]);
    CHECK(std::signbit(y[0][0].a1));
}

TEST_CASE("operator and vector round trip")
{
    Rng rng(52);
    const QMatrix m = random_matrix(3, 5, rng);
    const QMatrix back = io::operator_from_json(json::parse(io::dump(io::operator_to_json(m))));
    CHECK(back == m);
    const QVector v = random_vector(4, rng);
    CHECK(io::vector_from_json(json::parse(io::dump(io::vector_to_json(v)))) == v);
    const json j = io::operator_to_json(m);
    CHECK(j.at("rows") == 3);
    CHECK(j.at("cols") == 5);
    CHECK(j.at("entries").size() == 3);
}

TEST_CASE("malformed input names the offending element")
{
    CHECK_THROWS_WITH_AS(io::frame_from_json(json::parse(R"({"vectors": []})")), doctest::Contains("\"dim\""),
                         ParseError);
    CHECK_THROWS_WITH_AS(io::frame_from_json(json::parse(R"({"dim": 0, "vectors": []})")),
                         doctest::Contains("at least 1"), ParseError);
    CHECK_THROWS_WITH_AS(io::frame_from_json(json::parse(R"({"dim": -1, "vectors": []})")),
                         doctest::Contains("non-negative"), ParseError);
    CHECK_THROWS_WITH_AS(
        io::frame_from_json(json::parse(R"({"dim": 2, "vectors": [[[1,0,0,0],[0,0,0,0]], [[1,0,0,0]]]})")),
        doctest::Contains("frame vector 1 has 1 entries, expected 2"), ParseError);
    CHECK_THROWS_WITH_AS(
        io::frame_from_json(json::parse(R"({"dim": 1, "vectors": [[[1,0,0,0]], [[1,0,0,0]], [[1,0]]]})")),
        doctest::Contains("frame vector 2, entry 0"), ParseError);
    CHECK_THROWS_WITH_AS(io::operator_from_json(json::parse(R"({"rows": 2, "cols": 1, "entries": [[[1,0,0,0]]]})")),
                         doctest::Contains("2 rows"), ParseError);
    CHECK_THROWS_WITH_AS(
        io::operator_from_json(json::parse(R"({"rows": 1, "cols": 2, "entries": [[[1,0,0,0]]]})")),
        doctest::Contains("operator row 0 has 1 entries, expected 2"), ParseError);
    CHECK_THROWS_AS(io::vector_from_json(json::parse(R"({"values": []})")), ParseError);
}

TEST_CASE("files")
{
    const Frame f = io::frame_from_json(io::read_json_file(data("e1e1e2.json")));
    CHECK(f.dim() == 2);
    CHECK(f.size() == 3);
    CHECK(f[2] == e(2, 1));

    CHECK_THROWS_WITH_AS(io::read_json_file(data("malformed.json")), doctest::Contains("malformed JSON"), ParseError);
    CHECK_THROWS_WITH_AS(io::read_json_file(data("no_such_file.json")), doctest::Contains("cannot open"), ParseError);

    const auto tmp = std::filesystem::temp_directory_path() / "qframe_io_test.json";
    io::write_text_file(tmp, io::dump(io::frame_to_json(f)));
    const Frame g = io::frame_from_json(io::read_json_file(tmp));
    CHECK(g[0] == f[0]);
    std::filesystem::remove(tmp);
}

TEST_CASE("report serialization")
{
    const Frame f(2, {e(2, 0), e(2, 0), e(2, 1)});
    const json r = io::report_to_json(frame_report(f));
    CHECK(r.at("status") == "frame");
    CHECK(r.at("bounds").at("lower").get<double>() == doctest::Approx(1.0));
    CHECK(r.at("bounds").at("upper").get<double>() == doctest::Approx(2.0));
    CHECK(r.at("spectrum").size() == 2);
    CHECK(r.at("residuals").contains("reconstruction"));

    const Frame g(2, {e(2, 0), e(2, 1), e(2, 1)});
    const json ne = io::equivalence_to_json(are_equivalent(f, g));
    CHECK(ne.at("relation") == "none");
    CHECK(ne.contains("witness"));
    CHECK_FALSE(ne.contains("intertwiner"));

    const json eq = io::equivalence_to_json(are_equivalent(f, f));
    CHECK(eq.at("relation") == "equivalent");
    CHECK(eq.at("intertwiner").at("rows") == 2);
    CHECK(eq.contains("inverse_residual"));
    CHECK(eq.contains("residual"));
}
