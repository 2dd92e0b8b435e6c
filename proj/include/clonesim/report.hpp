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

#include <cstddef>
#include <string>
#include <vector>

namespace clonesim {

/** One checked identity: observed deviation against its tolerance. */
struct CheckRecord {
  std::string name;
  std::string anchor;  // which identity or table cell the check reproduces
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/** Builds a record with pass = (max_deviation <= tolerance). */
CheckRecord make_check(std::string name, std::string anchor, double max_deviation,
                       double tolerance, std::string note = {});

class VerificationReport {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void merge(const VerificationReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t passed() const;
  std::size_t failed() const { return records_.size() - passed(); }
  /** True iff every record passes (vacuously true when empty). */
  bool all_pass() const { return failed() == 0; }
  double max_deviation() const;

  /** Sorts records by name, stable in insertion order for equal names. */
  void sort_by_name();

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace clonesim
