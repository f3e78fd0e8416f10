#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "catrep/category.hpp"
#include "catrep/field.hpp"

namespace catrep::cli {

enum ExitCode { kOk = 0, kParseError = 1, kInconclusive = 2, kViolation = 3 };

struct JobConfig {
  std::optional<Kind> kind;
  std::optional<std::string> group;
  std::optional<FieldSpec> field;
  std::optional<int> horizon;
  std::string format = "text";
  int depth = 3;
  int max_steps = 3;
  std::uint64_t seed = 1;
  std::size_t max_dim = 4000;  // resolution cap per degree
  // command specific
  std::string command;
  std::string path;
  bool emit_normalized = false;
  int count = 20;
  int N = 0;
  int hypothesis_bound = 3;
};

/// Runs one command, writing the report to out and diagnostics to err.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace catrep::cli
