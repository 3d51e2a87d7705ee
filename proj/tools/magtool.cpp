// Command-line surface: gen / analyze / witness / batch over .magc files and
// JSON reports. Exit codes: 0 success, 1 verdict failure under
// --expect-random, 2 usage or format errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mag/codec.hpp"
#include "mag/generator.hpp"
#include "mag/report.hpp"
#include "mag/temporal.hpp"

namespace {

std::vector<std::uint32_t> parse_csv_u32(const std::string& s, const char* what) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || v > UINT32_MAX) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string("malformed ") + what + " value '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

mag::GenKind parse_kind(const std::string& s) {
  if (s == "uniform-half") return mag::GenKind::UniformHalf;
  if (s == "empty") return mag::GenKind::Empty;
  if (s == "complete") return mag::GenKind::Complete;
  if (s == "banded") return mag::GenKind::Banded;
  if (s == "periodic") return mag::GenKind::Periodic;
  throw CLI::ValidationError("unknown generator kind '" + s + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

struct GenFlags {
  std::string tau;
  std::string kind = "uniform-half";
  std::uint32_t window = 1;
  std::uint64_t period = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint32_t> time_aspect;
};

mag::Mag build_graph(const GenFlags& f, std::uint64_t seed) {
  mag::MagSignature sig(parse_csv_u32(f.tau, "--tau"),
                        f.time_aspect ? std::optional<std::uint32_t>(*f.time_aspect)
                                      : std::nullopt);
  mag::GeneratorSpec spec{sig, parse_kind(f.kind), seed, f.window, f.period};
  return mag::generate(spec);
}

void add_gen_flags(CLI::App* cmd, GenFlags& f) {
  cmd->add_option("--tau", f.tau, "aspect sizes, comma separated, aspect 1 first")->required();
  cmd->add_option("--kind", f.kind, "uniform-half|empty|complete|banded|periodic");
  cmd->add_option("--window", f.window, "banded: max time gap");
  cmd->add_option("--period", f.period, "periodic: pattern length in bits");
  cmd->add_option("--seed", f.seed, "generator seed");
  cmd->add_option("--time-aspect", f.time_aspect, "1-based time aspect position");
}

int run(int argc, char** argv) {
  CLI::App app{"MultiAspect Graph generator and randomness/topology analyzer"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate a MAG and write a .magc file");
  add_gen_flags(gen, gen_flags);
  gen->add_option("-o,--output", out_path, ".magc output path")->required();

  std::string analyze_input, analyze_out;
  mag::AnalyzeConfig config;
  bool expect_random = false;
  auto* analyze = app.add_subcommand("analyze", "analyze a .magc file into a JSON report");
  analyze->add_option("input", analyze_input, ".magc file")->required();
  analyze->add_option("-o,--output", analyze_out, "report JSON path (default: stdout)");
  analyze->add_option("--c-deficiency", config.c_deficiency, "log-randomness coefficient");
  analyze->add_option("--c-degree", config.c_degree, "degree bound coefficient");
  analyze->add_option("--rigidity-budget", config.rigidity_budget, "rigidity search node budget");
  analyze->add_flag("--expect-random", expect_random,
                    "exit 1 when any corollary verdict fails");

  std::string witness_input, witness_u, witness_v;
  std::optional<std::uint32_t> witness_aspect;
  auto* witness = app.add_subcommand("witness", "answer a single noncontiguity query");
  witness->add_option("input", witness_input, ".magc file")->required();
  witness->add_option("--u", witness_u, "composite coordinates of u, comma separated")->required();
  witness->add_option("--v", witness_v, "composite coordinates of v, comma separated")->required();
  witness->add_option("--aspect", witness_aspect, "aspect position (default: time aspect)");

  GenFlags batch_flags;
  std::uint64_t batch_count = 1;
  std::string batch_out;
  bool batch_expect_random = false;
  mag::AnalyzeConfig batch_config;
  auto* batch = app.add_subcommand("batch", "run gen+analyze over consecutive seeds");
  add_gen_flags(batch, batch_flags);
  batch->add_option("--seeds", batch_count, "number of consecutive seeds")->required();
  batch->add_option("-o,--output", batch_out, "summary JSON path")->required();
  batch->add_option("--c-deficiency", batch_config.c_deficiency, "log-randomness coefficient");
  batch->add_option("--c-degree", batch_config.c_degree, "degree bound coefficient");
  batch->add_flag("--expect-random", batch_expect_random,
                  "exit 1 when any verdict fails in any seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      mag::write_magc_file(build_graph(gen_flags, gen_flags.seed), out_path);
      return 0;
    }
    if (analyze->parsed()) {
      mag::Mag g = mag::read_magc_file(analyze_input);
      mag::AnalysisReport report = mag::analyze(g, config);
      const std::string text = mag::to_json(report).dump(2) + "\n";
      if (analyze_out.empty())
        std::cout << text;
      else
        write_text(analyze_out, text);
      if (expect_random)
        for (const mag::Verdict& v : report.verdicts)
          if (v.state != mag::VerdictState::Pass) return 1;
      return 0;
    }
    if (witness->parsed()) {
      mag::Mag g = mag::read_magc_file(witness_input);
      const std::uint32_t aspect =
          witness_aspect ? *witness_aspect
                         : g.signature().time_aspect().value_or(0);
      if (aspect == 0) throw std::invalid_argument("no aspect given and signature has no time aspect");
      mag::CompositeVertex u{parse_csv_u32(witness_u, "--u")};
      mag::CompositeVertex v{parse_csv_u32(witness_v, "--v")};
      mag::NoncontiguityQuery q =
          mag::make_noncontiguity_query(g.signature(), std::move(u), std::move(v), aspect);
      mag::WitnessResult w = mag::find_noncontiguous_witness(g, q);
      nlohmann::ordered_json j;
      j["kind"] = w.kind == mag::WitnessKind::Direct ? "direct" : "via-intermediate";
      j["edge"] = {mag::to_string(w.edge.a), mag::to_string(w.edge.b)};
      if (w.intermediate) j["intermediate"] = mag::to_string(*w.intermediate);
      j["aspect"] = w.aspect;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    // batch
    const std::string stem = batch_out.size() > 5 && batch_out.ends_with(".json")
                                 ? batch_out.substr(0, batch_out.size() - 5)
                                 : batch_out;
    std::vector<mag::AnalysisReport> reports;
    for (std::uint64_t s = batch_flags.seed; s < batch_flags.seed + batch_count; ++s) {
      mag::Mag g = build_graph(batch_flags, s);
      const std::string magc_path = stem + ".seed" + std::to_string(s) + ".magc";
      mag::write_magc_file(g, magc_path);
      mag::AnalysisReport report = mag::analyze(g, batch_config);
      report.seed = s;
      write_text(stem + ".seed" + std::to_string(s) + ".json",
                 mag::to_json(report).dump(2) + "\n");
      reports.push_back(std::move(report));
    }
    write_text(batch_out, mag::to_json(mag::batch_summary(reports)).dump(2) + "\n");
    if (batch_expect_random)
      for (const mag::AnalysisReport& r : reports)
        for (const mag::Verdict& v : r.verdicts)
          if (v.state != mag::VerdictState::Pass) return 1;
    return 0;
  } catch (const mag::NoWitnessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
