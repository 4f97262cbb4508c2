#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projsing/json_io.hpp"

namespace projsing {

// Exit codes: 0 ok, 1 internal failure, 2 validation, 3 hypothesis,
// 4 indeterminate over the field, 5 truncation cap.
int exit_code(ErrorKind k);

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify-series", "analyze-projection", "sample-stratum",
                                              "verify-bounds",   "enumerate-types",    "fuzz-key-lemma"};
  return names;
}

struct JobSpec {
  std::string command;
  FieldSpec field{false, 10007};
  std::uint64_t seed = 0;
  int truncation_cap = 64;
  Json params = Json::object();
  std::optional<std::string> output;
};

// Keys: command, field, seed, truncation_cap, params, output.
JobSpec job_from_json(const Json& j);
Json job_to_json(const JobSpec& job);

struct JobResult {
  int exit_code = 0;
  Json report;
};

JobResult run_job(const JobSpec& job);
std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render(const Json& j);

int cli_main(int argc, char** argv);

}  // namespace projsing
