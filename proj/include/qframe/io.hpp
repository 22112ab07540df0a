#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qframe/frame.hpp"
#include "qframe/frame_ops.hpp"

namespace qframe::io {

using json = nlohmann::json;

json to_json(const Quaternion &q);
Quaternion quaternion_from_json(const json &j);

/// {"dim": n, "vectors": [[q, ...], ...]}
json frame_to_json(const Frame &f);
Frame frame_from_json(const json &j);

/// {"rows": r, "cols": c, "entries": [[q, ...], ...]}, row-major.
json operator_to_json(const QMatrix &m);
QMatrix operator_from_json(const json &j);

/// {"entries": [q, ...]}
json vector_to_json(const QVector &v);
QVector vector_from_json(const json &j);

/// Bare nested-array forms used inside reports.
json matrix_entries(const QMatrix &m);
json vector_entries(const QVector &v);

json report_to_json(const FrameReport &r);
json equivalence_to_json(const EquivalenceResult &r);

json read_json_file(const std::filesystem::path &path);
/// Serializes with two-space indentation and a trailing newline.
std::string dump(const json &j);
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace qframe::io
