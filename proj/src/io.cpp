#include "qframe/io.hpp"

#include <fstream>
#include <sstream>

namespace qframe::io {

namespace {

[[noreturn]] void fail(const std::string &what) { throw ParseError(what); }

const json &field(const json &j, const char *name, const std::string &context)
{
    if (!j.is_object() || !j.contains(name)) {
        fail(context + ": missing field \"" + name + "\"");
    }
    return j.at(name);
}

std::size_t size_field(const json &j, const char *name, const std::string &context)
{
    const json &v = field(j, name, context);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(context + ": field \"" + name + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

QVector entries_from_json(const json &arr, const std::string &context)
{
    if (!arr.is_array()) {
        fail(context + ": expected an array of quaternions");
    }
    QVector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        try {
            v[i] = quaternion_from_json(arr[i]);
        } catch (const ParseError &e) {
            fail(context + ", entry " + std::to_string(i) + ": " + e.what());
        }
    }
    return v;
}

} // namespace

json to_json(const Quaternion &q) { return json::array({q.a0, q.a1, q.a2, q.a3}); }

Quaternion quaternion_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 4) {
        fail("quaternion must be an array of 4 numbers");
    }
    for (const auto &x : j) {
        if (!x.is_number()) {
            fail("quaternion component is not a number");
        }
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json vector_entries(const QVector &v)
{
    json arr = json::array();
    for (const auto &q : v) {
        arr.push_back(to_json(q));
    }
    return arr;
}

json matrix_entries(const QMatrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(vector_entries(m.row(r)));
    }
    return rows;
}

json frame_to_json(const Frame &f)
{
    json vectors = json::array();
    for (const auto &u : f.vectors()) {
        vectors.push_back(vector_entries(u));
    }
    return {{"dim", f.dim()}, {"vectors", vectors}};
}

Frame frame_from_json(const json &j)
{
    const std::size_t dim = size_field(j, "dim", "frame");
    if (dim == 0) {
        fail("frame: \"dim\" must be at least 1");
    }
    const json &arr = field(j, "vectors", "frame");
    if (!arr.is_array()) {
        fail("frame: \"vectors\" must be an array");
    }
    std::vector<QVector> vectors;
    vectors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        QVector v = entries_from_json(arr[i], "frame vector " + std::to_string(i));
        if (v.size() != dim) {
            fail("frame vector " + std::to_string(i) + " has " + std::to_string(v.size()) +
                 " entries, expected " + std::to_string(dim));
        }
        vectors.push_back(std::move(v));
    }
    return Frame(dim, std::move(vectors));
}

json operator_to_json(const QMatrix &m)
{
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_entries(m)}};
}

QMatrix operator_from_json(const json &j)
{
    const std::size_t rows = size_field(j, "rows", "operator");
    const std::size_t cols = size_field(j, "cols", "operator");
    const json &arr = field(j, "entries", "operator");
    if (!arr.is_array() || arr.size() != rows) {
        fail("operator: \"entries\" must hold " + std::to_string(rows) + " rows");
    }
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const QVector row = entries_from_json(arr[r], "operator row " + std::to_string(r));
        if (row.size() != cols) {
            fail("operator row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                 " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = row[c];
        }
    }
    return m;
}

json vector_to_json(const QVector &v) { return {{"entries", vector_entries(v)}}; }

QVector vector_from_json(const json &j) { return entries_from_json(field(j, "entries", "vector"), "vector"); }

json report_to_json(const FrameReport &r)
{
    json residuals = json::object();
    for (const auto &[name, value] : r.residuals) {
        residuals[name] = value;
    }
    return {{"status", to_string(r.status)},
            {"bounds", {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}}},
            {"spectrum", r.spectrum},
            {"residuals", residuals}};
}

json equivalence_to_json(const EquivalenceResult &r)
{
    json out = {{"relation", to_string(r.relation)}, {"residual", r.residual}};
    if (r.intertwiner) {
        out["intertwiner"] = operator_to_json(*r.intertwiner);
    }
    if (r.witness) {
        out["witness"] = vector_entries(*r.witness);
    }
    if (r.relation == Relation::equivalent) {
        out["inverse_residual"] = r.inverse_residual;
    }
    return out;
}

json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        fail(path.string() + ": malformed JSON (" + e.what() + ")");
    }
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
}

} // namespace qframe::io
