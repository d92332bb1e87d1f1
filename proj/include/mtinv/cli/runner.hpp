#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtinv/cli/problem.hpp"
#include "mtinv/invariants/invariants.hpp"

namespace mtinv::cli {

enum class Mode {
  Compute,  // run the tasks of the file
  Verify,   // exactness suites for every module, ignoring the tasks
  Oracle,   // run the tasks with full-table H^1 everywhere
};
enum class Format { Text, Json };

struct RunOptions {
  Mode mode = Mode::Compute;
  Format format = Format::Text;
  // Replaces every task modulus (and the verify/corpus ladders) when set.
  std::optional<Integer> modulus;
  unsigned jobs = 1;
};

struct TaskSpec {
  std::string op;
  std::string module_name;
  const GammaModule* module = nullptr;
  std::optional<Integer> modulus;
};

// One rendered computation. `failed` marks a cross-check or exactness
// failure; `error` alone is an ordinary per-task error.
struct ReportBlock {
  std::size_t index = 0;
  std::string op;
  std::string module;
  std::optional<Integer> modulus;
  std::optional<std::string> theorem;
  std::optional<std::string> group;
  std::optional<std::size_t> divisible_rank;
  std::optional<std::string> value;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<CrossCheck> checks;
  std::optional<std::string> error;
  bool failed = false;
  std::optional<std::string> section;  // heading printed before the block
};

inline constexpr long kVerifyLadder[] = {1, 2, 3, 4, 6, 12};

ReportBlock execute(const TaskSpec& task, Mode mode);

struct RunOutcome {
  std::string report;
  int exit_code = 0;  // 0 all checks pass, 1 a cross-check or exactness failure
};

// 1 if any block failed a cross-check or exactness test, else 0.
int exit_status(const std::vector<ReportBlock>& blocks);

RunOutcome run(const ProblemFile& problem, const RunOptions& options);
RunOutcome run_corpus(const RunOptions& options);

std::string render_text(const std::vector<ReportBlock>& blocks);
std::string render_json(const std::vector<ReportBlock>& blocks);

}  // namespace mtinv::cli
