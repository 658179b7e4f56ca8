#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "tistab/pauli.h"

namespace tistab {

/// CodeFile JSON:
///   {"name": str, "dim": int, "q_per_site": int, "css": bool,
///    "generators": [{"x_block": [poly, ...], "z_block": [poly, ...]}, ...],
///    "notes": str}
/// A poly is a list of exponent vectors, e.g. [[0,0],[1,0]] for 1 + x. For
/// CSS files the X-type generators come first.
nlohmann::json code_to_json(const CodeSpec &code);
/// Throws std::invalid_argument on malformed input.
CodeSpec code_from_json(const nlohmann::json &j);

nlohmann::json poly_to_json(const LaurentPoly &p);
LaurentPoly poly_from_json(const nlohmann::json &j, size_t dim);

std::string serialize_code(const CodeSpec &code);
CodeSpec parse_code(const std::string &text);

/// Throws std::runtime_error when the file cannot be read or written.
CodeSpec load_code(const std::filesystem::path &path);
void save_code(const CodeSpec &code, const std::filesystem::path &path);

}  // namespace tistab
