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


#include "clonesim/serialization.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "clonesim/errors.hpp"

namespace clonesim {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const Complex& z : m.entries()) entries.push_back({z.real(), z.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = field<std::size_t>(j, "rows");
  const auto cols = field<std::size_t>(j, "cols");
  const Json& entries = j.at("entries");
  if (!entries.is_array()) throw FormatError("'entries' must be an array");
  if (entries.size() != rows * cols)
    throw FormatError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  std::vector<Complex> data;
  data.reserve(entries.size());
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw FormatError("matrix entries must be [re, im] pairs");
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return ComplexMatrix(rows, cols, std::move(data));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

Json recipe_to_json(const Recipe& r) {
  if (const auto* t = std::get_if<TranslationRecipe>(&r))
    return {{"type", "translation"}, {"n", t->n}};
  if (const auto* c = std::get_if<CompositeRecipe>(&r))
    return {{"type", "composite"}, {"k", c->k}, {"l", c->l}};
  const auto& p = std::get<PairwiseRecipe>(r);
  Json pairs = Json::array();
  for (const auto& [c, t] : p.pairs) pairs.push_back({c, t});
  return {{"type", "pairwise"}, {"m", p.m}, {"pairs", std::move(pairs)}};
}

Recipe recipe_from_json(const Json& j) {
  const auto type = field<std::string>(j, "type");
  if (type == "translation") return TranslationRecipe{field<std::size_t>(j, "n")};
  if (type == "composite")
    return CompositeRecipe{field<std::size_t>(j, "k"), field<std::size_t>(j, "l")};
  if (type == "pairwise") {
    PairwiseRecipe p{field<std::size_t>(j, "m"), {}};
    for (const auto& pr : field<std::vector<std::vector<std::size_t>>>(j, "pairs")) {
      if (pr.size() != 2) throw FormatError("pairwise recipe pairs must have two entries");
      p.pairs.emplace_back(pr[0], pr[1]);
    }
    return p;
  }
  throw FormatError("unknown recipe type '" + type + "'");
}

Json program_to_json(const PulseProgram& p) {
  Json pulses = Json::array();
  for (const auto& pulse : p.pulses()) {
    if (const auto* c = std::get_if<Carrier>(&pulse)) {
      pulses.push_back({{"kind", "carrier"}, {"ion", c->ion}, {"theta", c->theta}, {"phi", c->phi}});
    } else if (const auto* ms = std::get_if<MolmerSorensen>(&pulse)) {
      pulses.push_back({{"kind", "ms"}, {"ions", {ms->ion_a, ms->ion_b}}});
    } else {
      pulses.push_back({{"kind", "phase"}, {"phi", std::get<GlobalPhase>(pulse).phi}});
    }
  }
  return {{"register", p.register_size()},
          {"pulses", std::move(pulses)},
          {"counts",
           {{"total", p.counts().total_gates}, {"two_qubit", p.counts().two_qubit_gates}}}};
}

PulseProgram program_from_json(const Json& j) {
  try {
    PulseProgram p(field<std::size_t>(j, "register"));
    for (const Json& pulse : j.at("pulses")) {
      const auto kind = field<std::string>(pulse, "kind");
      if (kind == "carrier") {
        p.add(Carrier{field<std::size_t>(pulse, "ion"), field<double>(pulse, "theta"),
                      field<double>(pulse, "phi")});
      } else if (kind == "ms") {
        const auto ions = field<std::vector<std::size_t>>(pulse, "ions");
        if (ions.size() != 2) throw FormatError("ms pulse needs two ions");
        p.add(MolmerSorensen{ions[0], ions[1]});
      } else if (kind == "phase") {
        p.add(GlobalPhase{field<double>(pulse, "phi")});
      } else {
        throw FormatError("unknown pulse kind '" + kind + "'");
      }
    }
    if (j.contains("counts")) {
      const GateCounts stored{field<std::size_t>(j["counts"], "total"),
                              field<std::size_t>(j["counts"], "two_qubit")};
      if (!(stored == p.counts())) throw FormatError("stored gate counts disagree with pulses");
    }
    return p;
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
}

Json record_to_json(const CheckRecord& r) {
  Json j{{"name", r.name},           {"anchor", r.anchor}, {"max_deviation", r.max_deviation},
         {"tolerance", r.tolerance}, {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckRecord record_from_json(const Json& j) {
  CheckRecord r;
  r.name = field<std::string>(j, "name");
  r.anchor = field<std::string>(j, "anchor");
  // Non-finite deviations are written as null.
  r.max_deviation = j.contains("max_deviation") && j["max_deviation"].is_number()
                        ? j["max_deviation"].get<double>()
                        : std::numeric_limits<double>::infinity();
  r.tolerance = field<double>(j, "tolerance");
  r.pass = field<bool>(j, "pass");
  if (j.contains("note")) r.note = field<std::string>(j, "note");
  return r;
}

std::uint32_t pattern_from_string(std::string_view s) {
  if (s.empty() || s.size() > 16) throw FormatError("pattern must have 1 to 16 characters");
  std::uint32_t bits = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1') {
      bits |= std::uint32_t{1} << k;
    } else if (s[k] != '0') {
      throw FormatError("pattern characters must be 0 or 1");
    }
  }
  return bits;
}

}  // namespace clonesim
