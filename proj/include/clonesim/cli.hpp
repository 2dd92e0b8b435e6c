// Copyright 2026 The clonesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clonesim/errors.hpp"
#include "clonesim/ion.hpp"
#include "clonesim/random.hpp"
#include "clonesim/report.hpp"
#include "clonesim/serialization.hpp"

namespace clonesim {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/** A bad command line or configuration. */
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command = "verify";
  std::size_t n = 2;
  std::size_t generations = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 100;
  std::optional<double> tolerance;
  std::string output_path;  // empty: standard output
  std::string format = "json";
  bool deterministic = false;
  std::optional<std::pair<std::size_t, std::size_t>> composite;
  RegisterKind kind = RegisterKind::kQubit;
  std::string program_path;         // compile: where to write the pulse program
  std::vector<std::string> inputs;  // report: prior report files

  double tol() const { return tolerance.value_or(kTolVerify); }
  /** Throws UsageError on an inconsistent configuration. */
  void validate() const;
};

struct RunResult {
  VerificationReport report;
  /** Command-specific data such as state matrices or the pulse program. */
  Json payload = Json::object();
};

RunResult run_verify(const RunConfig& config);
RunResult run_clone(const RunConfig& config);
RunResult run_compile(const RunConfig& config);
RunResult run_classify(const RunConfig& config);
RunResult run_tau_search(const RunConfig& config);
RunResult run_report(const RunConfig& config);

/** Validates the config and dispatches on config.command; records come back sorted. */
RunResult run_command(const RunConfig& config);

/** The full report document in the configured format. */
std::string render(const RunConfig& config, const RunResult& result);
Json report_to_json(const RunConfig& config, const RunResult& result);

/**
 * Command-line entry point. CLONESIM_SEED replaces the default seed; an
 * explicit --seed wins over both. Returns kExitPass, kExitCheckFailed or
 * kExitUsage.
 */
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clonesim
