#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "whm/constructions.hpp"
#include "whm/linear_code.hpp"

namespace whm {

// Code file (JSON):
//   {"q": 2,
//    "blocks": [{"n": 4, "lambda": 1}, {"n": 4, "lambda": 2}],
//    "generator": [[1,0,0,0,0,1,1,1], ...]}
// "parity_check" may replace "generator"; exactly one of them must be present.
// Files written by `construct` also carry
//   "construction": {"family": "binary", "h1": [...], "h2": [...], "h3": [...]}

struct CodeFile {
  LinearCode code;
  std::optional<ConstructedCode> construction;
};

/// Throws MalformedInput on schema violations.
CodeFile parse_code_file(std::string_view json_text);
CodeFile read_code_file(const std::filesystem::path& path);

std::string code_file_json(const LinearCode& code);
std::string code_file_json(const ConstructedCode& cc);

/// Writes via a temporary file in the same directory and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace whm
