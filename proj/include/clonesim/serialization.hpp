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
#include <string_view>

#include <json.hpp>

#include "clonesim/cloning.hpp"
#include "clonesim/ion.hpp"
#include "clonesim/matrix.hpp"
#include "clonesim/report.hpp"

namespace clonesim {

using Json = nlohmann::json;

// JSON forms used by the command-line tool and report files. Every reader
// throws FormatError on malformed input.

/** {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order. */
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/**
 * {"type": "translation", "n": n}, {"type": "composite", "k": k, "l": l} or
 * {"type": "pairwise", "m": m, "pairs": [[c, t], ...]}.
 */
Json recipe_to_json(const Recipe& r);
Recipe recipe_from_json(const Json& j);

Json program_to_json(const PulseProgram& p);
/** Rebuilds the program; stored counts must agree with the pulses. */
PulseProgram program_from_json(const Json& j);

Json record_to_json(const CheckRecord& r);
CheckRecord record_from_json(const Json& j);

/** Parses an antidiagonal pattern string ("1011", top-right entry first). */
std::uint32_t pattern_from_string(std::string_view s);

}  // namespace clonesim
