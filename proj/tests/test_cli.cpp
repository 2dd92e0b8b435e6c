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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clonesim/cli.hpp"

using namespace clonesim;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "clonesim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify passes for a small qubit run") {
  const Run r = run({"verify", "--n", "2", "--generations", "2", "--trials", "10", "--deterministic"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["summary"]["all_pass"] == true);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK_FALSE(doc.contains("timestamp"));
  // Records come out sorted by name.
  std::vector<std::string> names;
  for (const auto& rec : doc["records"]) names.push_back(rec["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("timestamps appear unless deterministic") {
  const Run r = run({"classify", "--n", "2"});
  CHECK(Json::parse(r.out).contains("timestamp"));
}

TEST_CASE("identical seeds give identical bytes") {
  const std::vector<std::string> args{"verify", "--n", "3", "--trials", "5", "--seed", "0x1234",
                                      "--deterministic"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> other = args;
  other[6] = "0x1235";
  CHECK(run(args).out != run(other).out);
}

TEST_CASE("zero trials is a vacuous pass") {
  const Run r = run({"verify", "--n", "2", "--trials", "0", "--deterministic"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["records"].empty());
  CHECK(doc["payload"]["note"] == "no trials");
}

TEST_CASE("composite runs") {
  const Run r = run({"verify", "--n", "6", "--composite", "2,3", "--trials", "5", "--deterministic"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("cloning.composite.k2l3") != std::string::npos);
  CHECK(run({"verify", "--n", "5", "--composite", "2,3"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "6", "--composite", "23"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"dance"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "1"}).code == kExitUsage);
  CHECK(run({"verify", "--tolerance", "-1"}).code == kExitUsage);
  CHECK(run({"verify", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "--seed", "banana"}).code == kExitUsage);
  CHECK(run({"compile", "--kind", "qutrit", "--generations", "3"}).code == kExitUsage);
  CHECK(run({"compile", "--kind", "ququart"}).code == kExitUsage);
  CHECK(run({"report"}).code == kExitUsage);
  CHECK(run({"verify", "--help"}).code == kExitPass);
}

TEST_CASE("capacity overflow is a failing record") {
  const Run r = run({"verify", "--n", "2", "--generations", "4", "--trials", "2", "--deterministic"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("exceeds 8 qubits") != std::string::npos);
}

TEST_CASE("a tight tolerance can fail a check") {
  RunConfig c;
  c.command = "compile";
  c.generations = 1;
  c.tolerance = 1e-300;
  const RunResult r = run_command(c);
  CHECK_FALSE(r.report.all_pass());
}

TEST_CASE("compile reports the table") {
  const Run r = run({"compile", "--kind", "qubit", "--generations", "3", "--deterministic"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["payload"]["program"]["counts"]["total"] == 133);
  CHECK(doc["payload"]["program"]["counts"]["two_qubit"] == 14);
  CHECK(doc["payload"]["program"]["register"] == 8);
  const Run q = run({"compile", "--kind", "qutrit", "--generations", "1", "--deterministic"});
  CHECK(Json::parse(q.out)["payload"]["program"]["counts"]["total"] == 38);
  const Run z = run({"compile", "--generations", "0", "--deterministic"});
  CHECK(Json::parse(z.out)["payload"]["program"]["register"] == 1);
}

TEST_CASE("csv and text formats") {
  const Run csv = run({"classify", "--n", "3", "--format", "csv"});
  CHECK(csv.out.rfind("name,anchor,max_deviation,tolerance,pass,note\n", 0) == 0);
  CHECK(csv.out.find("classify.ux,") != std::string::npos);
  const Run text = run({"classify", "--n", "3", "--format", "text"});
  CHECK(text.out.find("PASS classify.ux") != std::string::npos);
}

TEST_CASE("clone dumps every generation") {
  const Run r = run({"clone", "--n", "2", "--generations", "2", "--deterministic"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["payload"]["generations"].size() == 2);
  CHECK(doc["payload"]["generations"][1]["state"]["rows"] == 16);
  CHECK(run({"clone", "--n", "3", "--generations", "2"}).code == kExitUsage);
}

TEST_CASE("tau search lists patterns") {
  const Run r = run({"tau-search", "--n", "3", "--deterministic"});
  const Json doc = Json::parse(r.out);
  CHECK(doc["payload"]["candidates"].size() == 4);
}

TEST_CASE("report merges prior runs") {
  const std::string a = "cli_test_report_a.json", b = "cli_test_report_b.json";
  CHECK(run({"classify", "--n", "2", "--output", a}).code == kExitPass);
  CHECK(run({"compile", "--generations", "1", "--output", b}).code == kExitPass);
  const Run r = run({"report", a, b, "--deterministic"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["payload"]["sources"].size() == 2);
  CHECK(doc["records"].size() ==
        doc["payload"]["sources"][0]["records"].get<std::size_t>() +
            doc["payload"]["sources"][1]["records"].get<std::size_t>());
  std::ofstream("cli_test_report_bad.json") << "{";
  CHECK(run({"report", "cli_test_report_bad.json"}).code == kExitUsage);
  CHECK(run({"report", "no_such_file.json"}).code == kExitUsage);
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove("cli_test_report_bad.json");
}

TEST_CASE("CLONESIM_SEED replaces the default seed") {
  const std::vector<std::string> args{"clone", "--n", "2", "--deterministic"};
  const std::string base = run(args).out;
  ::setenv("CLONESIM_SEED", "77", 1);
  const std::string env = run(args).out;
  std::vector<std::string> explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "77"});
  ::unsetenv("CLONESIM_SEED");
  CHECK(env != base);
  CHECK(run(explicit_seed).out == env);
}
