#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace golden {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every <name>.cmd in `dir` (one argument per whitespace-separated
/// token) through the CLI and compares stdout with <name>.jsonl byte for
/// byte. With `update`, rewrites the .jsonl files instead.
std::vector<CaseResult> run_cases(const std::filesystem::path& dir, bool update);

}  // namespace golden
