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

#include "clonesim/report.hpp"

#include <algorithm>
#include <cmath>

namespace clonesim {

CheckRecord make_check(std::string name, std::string anchor, double max_deviation,
                       double tolerance, std::string note) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.max_deviation = max_deviation;
  r.tolerance = tolerance;
  r.pass = std::isfinite(max_deviation) && max_deviation <= tolerance;
  r.note = std::move(note);
  return r;
}

void VerificationReport::merge(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass; }));
}

double VerificationReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& r : records_) worst = std::max(worst, r.max_deviation);
  return worst;
}

void VerificationReport::sort_by_name() {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

}  // namespace clonesim
