#include "chordgenus/cli.hpp"

#include "chordgenus/boundary_walk.hpp"
#include "chordgenus/bounds.hpp"
#include "chordgenus/error.hpp"
#include "chordgenus/procedure.hpp"
#include "chordgenus/report_io.hpp"
#include "chordgenus/rng.hpp"
#include "chordgenus/stats.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace chordgenus {

namespace {

struct OutputOptions {
  std::string out;
  std::string format = "csv";
  bool timestamp = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Write the data table to this file");
  cmd->add_option("--format", o.format, "Data format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--timestamp", o.timestamp, "Record the UTC start time in JSON metadata");
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// CHORD_THREADS caps sampling parallelism; unset or empty means the machine's.
unsigned threads_from_env() {
  const char* raw = std::getenv("CHORD_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 4096) {
    throw CLI::ValidationError("CHORD_THREADS", "must be an integer in 1..4096, got '" +
                                                    std::string(raw) + "'");
  }
  return static_cast<unsigned>(v);
}

template <typename Stats>
int emit(const Stats& stats, RunMetadata meta, const OutputOptions& o, std::ostream& out,
         std::ostream& err) {
  const BoundReport report = bound_report(stats);
  if (o.timestamp) meta.timestamp = utc_now();
  const std::string data = o.format == "json" ? write_json(stats, meta, report) : write_csv(stats);
  if (o.out.empty()) {
    out << data;
    err << format_report(report);
  } else {
    write_file(o.out, data);
    out << format_report(report);
  }
  return report.has_failure() ? kExitBoundFailure : kExitOk;
}

std::string describe_loops(const Diagram& d) {
  std::string s;
  for (const auto& loop : decompose(d).loops) {
    if (!s.empty()) s += ',';
    s += std::to_string(loop.size) + ':' + std::to_string(loop.edge_count());
  }
  return s;
}

std::string genus_line(std::string_view text, bool loops) {
  const Diagram d(parse_diagram(text));
  std::string line = "n=" + std::to_string(d.order()) + " d=" +
                     std::to_string(boundary_count(d)) + " g=" + std::to_string(genus(d));
  if (loops) line += " loops=" + describe_loops(d);
  return line;
}

/// One result line per diagram; bad lines produce an error record and do not
/// stop the batch.
int run_genus(const std::string& diagram, const std::string& file, bool loops, std::ostream& out) {
  if (!diagram.empty()) {
    try {
      out << genus_line(diagram, loops) << '\n';
      return kExitOk;
    } catch (const ChordError& e) {
      out << "error " << e.what() << '\n';
      return kExitDomainError;
    }
  }
  std::ifstream in_file;
  std::istream* in = &std::cin;
  if (!file.empty() && file != "-") {
    in_file.open(file);
    if (!in_file) throw ChordError(ErrorKind::IoError, "cannot open " + file);
    in = &in_file;
  }
  int rc = kExitOk;
  std::string line;
  for (std::size_t number = 1; std::getline(*in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out << genus_line(line, loops) << '\n';
    } catch (const ChordError& e) {
      out << "error line=" << number << ' ' << e.what() << '\n';
      rc = kExitDomainError;
    }
  }
  return rc;
}

std::string format_chord(const OrientedChord& c) {
  return '(' + std::to_string(c.tail.label()) + ',' + std::to_string(c.head.label()) + ')';
}

int run_procedure_cmd(std::uint32_t n, std::uint64_t seed, bool trace, std::ostream& out) {
  ProcedureState state(n, seed);
  while (!state.complete()) {
    const StepEvent ev = state.step();
    if (!trace) continue;
    out << "step=" << state.steps_taken() << " chord=" << format_chord(ev.chosen_chord);
    if (ev.closed_loop) {
      out << " closed=1 loop_size=" << ev.closed_loop->size
          << " loop_edges=" << ev.closed_loop->edge_count();
      if (ev.new_pointer) out << " new_pointer=" << format_edge(*ev.new_pointer, n);
    } else {
      out << " closed=0";
    }
    out << '\n';
  }
  const Diagram d(state.partial());
  out << "n=" << n << " seed=" << seed << " d=" << boundary_count(d) << " g=" << genus(d)
      << " closures=" << state.closures().size() << " diagram=" << format_diagram(d) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus of oriented chord diagrams: boundary walk, uniform generation, bound checks"};
  app.name(args.empty() ? "chordgenus" : args.front());
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string diagram_text, file;
  bool show_loops = false;
  auto* genus_cmd = app.add_subcommand("genus", "Print n, d and g for each diagram");
  auto* source = genus_cmd->add_option_group("source");
  source->add_option("--diagram", diagram_text, "Diagram text, e.g. \"(1,3),(2,4)\"");
  source->add_option("--file", file, "Batch file, one diagram per line ('-' for stdin)");
  source->require_option(0, 1);
  genus_cmd->add_flag("--loops", show_loops, "Also print size:edges for each loop");

  std::uint32_t n = 0;
  std::uint64_t samples = 0, runs = 0, seed = 0;
  std::uint32_t k_max = 0;
  bool trace = false;
  OutputOptions enum_out, sample_out, plug_out;

  auto* enum_cmd = app.add_subcommand("enumerate", "Exact stats over all diagrams of order n");
  enum_cmd->add_option("--n", n, "Order")->required();
  add_output_options(enum_cmd, enum_out);

  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo stats from the random procedure");
  sample_cmd->add_option("--n", n, "Order")->required();
  sample_cmd->add_option("--samples", samples, "Number of diagrams")->required();
  sample_cmd->add_option("--seed", seed, "Master seed")->required();
  add_output_options(sample_cmd, sample_out);

  auto* proc_cmd = app.add_subcommand("procedure", "Run the random procedure once");
  proc_cmd->add_option("--n", n, "Order")->required();
  proc_cmd->add_option("--seed", seed, "Seed")->required();
  proc_cmd->add_flag("--trace", trace, "Print one line per step");

  auto* plug_cmd = app.add_subcommand("plugs", "Plug counts along procedure prefixes");
  plug_cmd->add_option("--n", n, "Order")->required();
  plug_cmd->add_option("--k-max", k_max, "Steps per run")->required();
  plug_cmd->add_option("--runs", runs, "Number of runs")->required();
  plug_cmd->add_option("--seed", seed, "Master seed")->required();
  add_output_options(plug_cmd, plug_out);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("chordgenus");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const std::string generator(SeededStream::kGeneratorName);

    if (genus_cmd->parsed()) return run_genus(diagram_text, file, show_loops, out);
    if (enum_cmd->parsed()) {
      const ExactStats stats = exact_stats(n, resolve_threads(threads_from_env()));
      return emit(stats, RunMetadata{"enumerate", n, {}, {}, {}, {}, "", {}}, enum_out, out, err);
    }
    if (sample_cmd->parsed()) {
      const McStats stats = mc_stats(n, samples, seed, threads_from_env());
      return emit(stats, RunMetadata{"sample", n, samples, {}, {}, seed, generator, {}},
                  sample_out, out, err);
    }
    if (proc_cmd->parsed()) return run_procedure_cmd(n, seed, trace, out);
    if (plug_cmd->parsed()) {
      const PlugStats stats = plug_mc_stats(n, k_max, runs, seed, threads_from_env());
      return emit(stats, RunMetadata{"plugs", n, {}, runs, k_max, seed, generator, {}}, plug_out,
                  out, err);
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const ChordError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace chordgenus
