#pragma once

#include <string>

namespace hsikit {

/// Outcome of one JSON job: an exit code (0 ok, 2 invalid input, 3 no
/// convergence / unknown, 4 internal) and the report or error body.
struct JobResult {
  int code = 0;
  std::string body;
};

/// Runs a job given as a JSON document {"command": ..., ...payload...}.
/// Never throws; failures are encoded in the result.  The HSIKIT_SEED
/// environment variable overrides any seed in the job options.
JobResult run_job_text(const std::string& job_json);

}  // namespace hsikit
