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


#include "clonesim/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clonesim/classicality.hpp"
#include "clonesim/cloning.hpp"
#include "clonesim/observables.hpp"
#include "clonesim/rotation.hpp"
#include "clonesim/verify.hpp"

namespace clonesim {

namespace {

// Published resource counts: {total gates, two-qubit gates, ions}.
struct TableCell {
  std::size_t total;
  std::size_t two_qubit;
  std::size_t ions;
};
constexpr TableCell kQubitTable[] = {{0, 0, 1}, {19, 2, 2}, {57, 6, 4}, {133, 14, 8}};
constexpr TableCell kQutritTable[] = {{0, 0, 2}, {38, 4, 4}, {114, 12, 8}};

std::string sfx(std::size_t n) { return std::to_string(n); }

CheckRecord exact_check(std::string name, std::string anchor, std::size_t got,
                        std::size_t expected) {
  const double dev = std::abs(static_cast<double>(got) - static_cast<double>(expected));
  return make_check(std::move(name), std::move(anchor), dev, 0.0,
                    "got " + sfx(got) + ", expected " + sfx(expected));
}

CheckRecord bool_check(std::string name, std::string anchor, bool ok, std::string note = {}) {
  return make_check(std::move(name), std::move(anchor), ok ? 0.0 : 1.0, 0.0, std::move(note));
}

CheckRecord rename(CheckRecord r, const std::string& suffix) {
  r.name += "." + suffix;
  return r;
}

void add_rotation_checks(VerificationReport& report, const CloningUnitary& base,
                         const ObservablePair& pair, const UnitaryMatrix& r,
                         const std::string& label, const RunConfig& config, Rng& rng) {
  const RotatedCloningSetup setup = rotate_setup(base, pair, r);
  const VerificationReport transmission =
      verify_rotated_transmission(setup, config.trials, rng, config.tol());
  for (const auto& rec : transmission.records()) report.add(rename(rec, label));
  report.add(rename(verify_rotated_cloning(setup, config.trials, rng, config.tol()), label));
}

void add_classification(VerificationReport& report, Json& verdicts, const std::string& name,
                        const ComplexMatrix& u, bool expect_classical) {
  const ClassicalityVerdict v = classify_operation(u);
  Json entry{{"classical", v.is_classical}, {"pointer_basis", v.pointer_basis_note}};
  if (v.witness) entry["witness_column"] = *v.witness;
  verdicts[name] = std::move(entry);
  report.add(bool_check("classify." + name, "permutation-column criterion",
                        v.is_classical == expect_classical,
                        std::string("expected ") + (expect_classical ? "classical" : "quantum")));
}

Json channel_json(const CloningUnitary& u) {
  Json out = Json::object();
  for (const auto keep : {KeptIndividual::kFirst, KeptIndividual::kSecond}) {
    const KrausSet k = extract_reduced_channel(u, keep);
    const ChannelSummary s = summarize_channel(k);
    out[keep == KeptIndividual::kFirst ? "first" : "second"] = {
        {"raw_kraus_count", s.raw_kraus_count},
        {"nonzero_kraus_count", s.nonzero_kraus_count},
        {"transfer_rank", s.transfer_rank},
        {"fixed_point_dimension", s.fixed_point_dimension},
        {"completeness_deviation", completeness_deviation(k)}};
  }
  return out;
}

double diagonal_deviation(const GenerationState& gs, const DensityMatrix& rho0) {
  double worst = 0.0;
  for (std::size_t w = 0; w < gs.individuals(); ++w) {
    const DensityMatrix ind = gs.individual(w);
    for (std::size_t k = 0; k < rho0.dim(); ++k)
      worst = std::max(worst, std::abs(ind.matrix()(k, k) - rho0.matrix()(k, k)));
  }
  return worst;
}

std::string antidiagonal_string(const ComplexMatrix& tau) {
  std::string s;
  for (std::size_t k = 0; k < tau.rows(); ++k)
    s += std::abs(tau(k, tau.rows() - 1 - k)) > 0.5 ? '1' : '0';
  return s;
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

}  // namespace

void RunConfig::validate() const {
  static const char* const kCommands[] = {"verify", "clone", "compile",
                                          "classify", "tau-search", "report"};
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
    throw UsageError("unknown command '" + command + "'");
  if (format != "json" && format != "csv" && format != "text")
    throw UsageError("format must be json, csv or text");
  if (tolerance && !(*tolerance > 0.0 && std::isfinite(*tolerance)))
    throw UsageError("tolerance must be positive");
  if (n < 2 || n > 16) throw UsageError("n must lie in 2..16");
  if (composite) {
    const auto [k, l] = *composite;
    if (k < 2 || l < 2) throw UsageError("composite factors must be at least 2");
    if (k * l != n) throw UsageError("composite k*l must equal n");
  }
  if (command == "compile") {
    const std::size_t max_g = kind == RegisterKind::kQubit ? 3 : 2;
    if (generations > max_g)
      throw UsageError(std::string(to_string(kind)) + " generations must be at most " + sfx(max_g));
  }
  if (command == "clone") {
    if (n == 2 && generations > 3) throw UsageError("qubit cloning supports at most 3 generations");
    if (n > 2 && generations > 1) throw UsageError("qudit cloning supports a single generation");
  }
  if (command == "report" && inputs.empty()) throw UsageError("report needs input files");
}

RunResult run_verify(const RunConfig& config) {
  RunResult result;
  if (config.trials == 0) {
    result.payload["note"] = "no trials";
    return result;
  }
  Rng rng(config.seed);
  const double tol = config.tol();
  const std::size_t n = config.n;
  VerificationReport& report = result.report;

  const CloningUnitary un = build_un(n);
  const ComplexMatrix tau = exchange_tau(n);
  report.add(check_cloning(un, config.trials, rng, tol, "cloning.un.n" + sfx(n)));
  report.add(check_transmission(un, tau, config.trials, rng, tol, "transmission.un.n" + sfx(n)));
  result.payload["tau"] = antidiagonal_string(tau);

  if (config.composite) {
    const auto [k, l] = *config.composite;
    const CloningUnitary c = build_composite(k, l);
    const std::string label = "composite.k" + sfx(k) + "l" + sfx(l);
    report.add(check_cloning(c, config.trials, rng, tol, "cloning." + label));
    add_classification(report, result.payload["classification"], label, c.matrix(), true);
  }

  if (n == 2) {
    report.add(check_full_statistics(config.trials, rng, tol));
    for (std::size_t g = 1; g <= config.generations; ++g) {
      if (g > 3) {
        report.add(make_check("sequential.g" + sfx(g), "sequential generations",
                              std::numeric_limits<double>::infinity(), tol,
                              "capacity: generation " + sfx(g) + " exceeds 8 qubits"));
        continue;
      }
      report.add(check_sequential(g, config.trials, rng, tol));
    }
  }

  if (n % 2 == 0) {
    const TauSpectrumReport spectrum = lemma_spectrum_check(tau);
    report.add(bool_check("lemma.spectrum.n" + sfx(n), "spectrum of a transmitted observable",
                          spectrum.satisfies_lemma,
                          "lambda(+1, 0, -1) = (" + sfx(spectrum.lambda_plus) + ", " +
                              sfx(spectrum.lambda_zero) + ", " + sfx(spectrum.lambda_minus) + ")"));
    // A tau with both signs in its spectrum must split evenly.
    bool only_balanced = true;
    for (const auto& t : scan_degeneracy_solutions(static_cast<long>(n)))
      if (t.l1 > 0 && t.lm1 > 0 && !(t.l1 == t.lm1 && t.l0 == 0)) only_balanced = false;
    report.add(bool_check("lemma.degeneracy.d" + sfx(n), "degeneracy equations", only_balanced));
  }

  const ObservablePair pair(rng.diagonal_observable(n), tau);
  if (n == 2) {
    add_rotation_checks(report, un, pair, rotation_preset("identity", n), "identity", config, rng);
    add_rotation_checks(report, un, pair, rotation_preset("hadamard", n), "hadamard", config, rng);
  } else {
    add_rotation_checks(report, un, pair, rotation_preset("identity", n), "identity", config, rng);
    add_rotation_checks(report, un, pair, rotation_preset("fourier", n), "fourier", config, rng);
  }
  const UnitaryMatrix random_r = rng.unitary(n);
  add_rotation_checks(report, un, pair, random_r, "random", config, rng);

  add_classification(report, result.payload["classification"], "un.n" + sfx(n), un.matrix(), true);
  add_classification(report, result.payload["classification"], "ux", build_ux().matrix(), false);
  const KrausSet kraus = extract_reduced_channel(un, KeptIndividual::kFirst);
  report.add(make_check("channel.completeness.n" + sfx(n), "reduced cloning channel",
                        completeness_deviation(kraus), tol));
  return result;
}

RunResult run_clone(const RunConfig& config) {
  RunResult result;
  Rng rng(config.seed);
  const DensityMatrix rho0 = rng.density(config.n);
  result.payload["rho_0"] = matrix_to_json(rho0.matrix());
  Json gens = Json::array();
  GenerationState gs = GenerationState::initial(rho0);
  for (std::size_t g = 1; g <= config.generations; ++g) {
    gs = config.n == 2 ? next_generation(gs) : qudit_next_generation(gs, config.n);
    gens.push_back({{"generation", g}, {"individuals", gs.individuals()},
                    {"state", matrix_to_json(gs.state().matrix())}});
    result.report.add(make_check("clone.g" + sfx(g) + ".diagonal", "cloning identity",
                                 diagonal_deviation(gs, rho0), config.tol(),
                                 "every individual keeps the initial populations"));
  }
  result.payload["generations"] = std::move(gens);
  return result;
}

RunResult run_compile(const RunConfig& config) {
  RunResult result;
  VerificationReport& report = result.report;
  const std::size_t g = config.generations;
  const std::string kind(to_string(config.kind));
  const std::string prefix = "table1." + kind + ".g" + sfx(g);

  const GateLibrary& lib = gate_library();
  for (const GateExpansion* e : {&lib.p, &lib.p_inv, &lib.h, &lib.sigma_z, &lib.sigma_x})
    report.add(make_check("gates.expansion." + e->name, "single-ion gate expansion",
                          e->deviation, config.tol()));
  report.add(make_check("gates.cnot", "CNOT product formula",
                        lib.cnot_reading == CnotReading::kMatrixProduct
                            ? lib.cnot_deviation_matrix_product
                            : lib.cnot_deviation_time_ordered,
                        config.tol(), std::string(to_string(lib.ms_variant))));

  const PulseProgram program = compile_generation(g, config.kind);
  const TableCell cell = config.kind == RegisterKind::kQubit ? kQubitTable[g] : kQutritTable[g];
  report.add(exact_check(prefix + ".total_gates", "gate count table", program.counts().total_gates,
                         cell.total));
  report.add(exact_check(prefix + ".two_qubit_gates", "gate count table",
                         program.counts().two_qubit_gates, cell.two_qubit));
  report.add(exact_check(prefix + ".ions", "gate count table", program.register_size(), cell.ions));

  if (config.kind == RegisterKind::kQubit && g >= 1) {
    report.add(make_check("compile.qubit.g" + sfx(g) + ".equivalence",
                          "pulse program against the generation unitary",
                          max_abs_diff_up_to_phase(evaluate_program(program).matrix(),
                                                   generation_unitary(g).matrix()),
                          config.tol()));
  }
  if (config.kind == RegisterKind::kQutrit) {
    const QutritEmbeddingCheck qc = check_qutrit_embedding();
    report.add(bool_check("compile.qutrit.embedding", "qutrit embedding blocks",
                          qc.first_block_identity && qc.second_block_order != "none" &&
                              qc.third_block_order != "none" && qc.restriction_matches,
                          qc.second_block_order + " / " + qc.third_block_order));
  }

  Json table = Json::array();
  const std::size_t rows = config.kind == RegisterKind::kQubit ? 4 : 3;
  for (std::size_t gg = 0; gg < rows; ++gg) {
    const PulseProgram p = compile_generation(gg, config.kind);
    table.push_back({{"generation", gg}, {"total", p.counts().total_gates},
                     {"two_qubit", p.counts().two_qubit_gates}, {"ions", p.register_size()}});
  }
  result.payload["counts_table"] = std::move(table);
  result.payload["ms_variant"] = std::string(to_string(lib.ms_variant));
  result.payload["cnot_reading"] = std::string(to_string(lib.cnot_reading));

  Json pj = program_to_json(program);
  if (config.program_path.empty()) {
    result.payload["program"] = std::move(pj);
  } else {
    std::ofstream f(config.program_path);
    if (!f) throw UsageError("cannot write " + config.program_path);
    f << pj.dump(2) << '\n';
    result.payload["program_path"] = config.program_path;
  }
  return result;
}

RunResult run_classify(const RunConfig& config) {
  RunResult result;
  Json& verdicts = result.payload["classification"];
  const CloningUnitary un = build_un(config.n);
  add_classification(result.report, verdicts, "un.n" + sfx(config.n), un.matrix(), true);
  add_classification(result.report, verdicts, "cnot", pairwise_step(2).matrix(), true);
  add_classification(result.report, verdicts, "ux", build_ux().matrix(), false);
  if (config.composite) {
    const auto [k, l] = *config.composite;
    add_classification(result.report, verdicts, "composite.k" + sfx(k) + "l" + sfx(l),
                       build_composite(k, l).matrix(), true);
  }
  result.payload["channel"] = channel_json(un);
  return result;
}

RunResult run_tau_search(const RunConfig& config) {
  RunResult result;
  const CloningUnitary un = build_un(config.n);
  Json rows = Json::array();
  for (const auto& c : scan_tau_patterns(un, config.n, config.seed, config.tol())) {
    rows.push_back({{"pattern", c.pattern},
                    {"max_deviation", c.max_deviation},
                    {"passes", c.passes}});
  }
  result.payload["candidates"] = std::move(rows);
  if (config.trials > 0) {
    Rng rng(config.seed);
    result.report.add(check_transmission(un, exchange_tau(config.n), config.trials, rng,
                                         config.tol(), "tau.exchange.n" + sfx(config.n)));
  }
  return result;
}

RunResult run_report(const RunConfig& config) {
  RunResult result;
  Json sources = Json::array();
  for (const auto& path : config.inputs) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    Json doc;
    try {
      doc = Json::parse(f);
    } catch (const Json::exception& e) {
      throw FormatError(path + ": " + e.what());
    }
    if (!doc.contains("records") || !doc["records"].is_array())
      throw FormatError(path + ": not a report");
    for (const Json& r : doc["records"]) result.report.add(record_from_json(r));
    sources.push_back({{"path", path},
                       {"command", doc.value("command", "")},
                       {"records", doc["records"].size()}});
  }
  result.payload["sources"] = std::move(sources);
  return result;
}

RunResult run_command(const RunConfig& config) {
  config.validate();
  RunResult result;
  if (config.command == "verify") result = run_verify(config);
  else if (config.command == "clone") result = run_clone(config);
  else if (config.command == "compile") result = run_compile(config);
  else if (config.command == "classify") result = run_classify(config);
  else if (config.command == "tau-search") result = run_tau_search(config);
  else result = run_report(config);
  result.report.sort_by_name();
  return result;
}

Json report_to_json(const RunConfig& config, const RunResult& result) {
  Json records = Json::array();
  for (const auto& r : result.report.records()) records.push_back(record_to_json(r));
  Json cfg{{"n", config.n},
           {"generations", config.generations},
           {"seed", config.seed},
           {"trials", config.trials},
           {"tolerance", config.tol()},
           {"kind", std::string(to_string(config.kind))}};
  if (config.composite) cfg["composite"] = {config.composite->first, config.composite->second};
  Json doc{{"artifact", "clonesim"},
           {"version", kVersion},
           {"command", config.command},
           {"config", std::move(cfg)},
           {"records", std::move(records)},
           {"summary",
            {{"total", result.report.records().size()},
             {"passed", result.report.passed()},
             {"failed", result.report.failed()},
             {"all_pass", result.report.all_pass()}}},
           {"payload", result.payload}};
  if (!config.deterministic) doc["timestamp"] = timestamp_now();
  return doc;
}

std::string render(const RunConfig& config, const RunResult& result) {
  std::ostringstream os;
  if (config.format == "json") {
    os << report_to_json(config, result).dump(2) << '\n';
  } else if (config.format == "csv") {
    os << "name,anchor,max_deviation,tolerance,pass,note\n";
    for (const auto& r : result.report.records())
      os << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << format_double(r.max_deviation)
         << ',' << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << ','
         << csv_field(r.note) << '\n';
  } else {
    os << "clonesim " << kVersion << " " << config.command << "\n";
    for (const auto& r : result.report.records())
      os << (r.pass ? "PASS " : "FAIL ") << r.name << "  dev=" << format_double(r.max_deviation)
         << " tol=" << format_double(r.tolerance) << (r.note.empty() ? "" : "  " + r.note) << '\n';
    if (result.report.records().empty() && result.payload.contains("note"))
      os << result.payload["note"].get<std::string>() << '\n';
    os << result.report.passed() << " passed, " << result.report.failed() << " failed\n";
  }
  return os.str();
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("CLONESIM_SEED"); env && *env) {
    try {
      config.seed = std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      err << "error: CLONESIM_SEED is not an integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Partial cloning and transmission of quantum observables"};
  app.require_subcommand(1);
  std::string composite, kind = "qubit", seed_text;
  double tolerance = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Local dimension of one individual");
    sub->add_option("--generations,-g", config.generations, "Number of cloning generations");
    sub->add_option("--seed", seed_text, "64-bit seed (decimal or 0x hex)");
    sub->add_option("--trials", config.trials, "Random states per check");
    sub->add_option("--tolerance", tolerance, "Override the verification tolerance");
    sub->add_option("--output,-o", config.output_path, "Write the report here");
    sub->add_option("--format", config.format, "json, csv or text");
    sub->add_flag("--deterministic", config.deterministic, "Omit the timestamp");
    sub->add_option("--composite", composite, "Composite factors k,l with k*l = n");
    sub->add_option("--kind", kind, "qubit or qutrit register");
    sub->add_option("--program", config.program_path, "Pulse program output file");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"verify", "Run the invariant suite"},
      {"clone", "Dump the states of successive generations"},
      {"compile", "Compile generations to trapped-ion pulses"},
      {"classify", "Classical or quantum verdicts and channel summaries"},
      {"tau-search", "Scan antidiagonal transmitted observables"},
      {"report", "Merge prior JSON reports"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (std::string(name) == "report") sub->add_option("inputs", config.inputs, "Report files");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    if (!seed_text.empty()) {
      std::size_t used = 0;
      config.seed = std::stoull(seed_text, &used, 0);
      if (used != seed_text.size()) throw UsageError("seed is not an integer");
    }
    if (sub->count("--tolerance")) config.tolerance = tolerance;
    if (!composite.empty()) {
      const auto comma = composite.find(',');
      if (comma == std::string::npos) throw UsageError("--composite expects k,l");
      config.composite = {std::stoul(composite.substr(0, comma)),
                          std::stoul(composite.substr(comma + 1))};
    }
    if (kind == "qubit") config.kind = RegisterKind::kQubit;
    else if (kind == "qutrit") config.kind = RegisterKind::kQutrit;
    else throw UsageError("--kind must be qubit or qutrit");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // std::stoull / std::stoul
    err << "error: malformed number: " << e.what() << '\n';
    return kExitUsage;
  }

  RunResult result;
  try {
    result = run_command(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  const std::string text = render(config, result);
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(config.output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << config.output_path << '\n';
      return kExitUsage;
    }
    f << text;
  }
  return result.report.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace clonesim
