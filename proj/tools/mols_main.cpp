// Command-line front end. Every subcommand is a thin shell around the
// library; every output file gets a sidecar manifest with SHA-256 digests,
// and reruns with identical arguments produce byte-identical artifacts.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mols/constraints.hpp"
#include "mols/design.hpp"
#include "mols/error.hpp"
#include "mols/gf.hpp"
#include "mols/latin.hpp"
#include "mols/log.hpp"
#include "mols/manifest.hpp"
#include "mols/qc.hpp"
#include "mols/report.hpp"
#include "mols/sha256.hpp"
#include "mols/sim.hpp"
#include "mols/stopping.hpp"
#include "mols/version.hpp"

namespace {

using namespace mols;

// Fixed default seed so unseeded simulate runs are still reproducible.
constexpr std::uint64_t kDefaultSeed = 0x6D6F6C73ULL;

bool parse_int_token(const std::string& s, long long& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// "a1,a2,..." as plain integers.
std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) {
    long long v = 0;
    if (!parse_int_token(tok, v)) return std::nullopt;
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// "a1:b1,a2:b2,..."; a bare "a" means beta = 1.
std::optional<std::vector<ScalePair>> parse_pair_list(const std::string& text) {
  std::vector<ScalePair> out;
  for (const auto& tok : split(text, ',')) {
    auto halves = split(tok, ':');
    if (halves.size() > 2) return std::nullopt;
    long long a = 0, b = 1;
    if (!parse_int_token(halves[0], a)) return std::nullopt;
    if (halves.size() == 2 && !parse_int_token(halves[1], b)) return std::nullopt;
    out.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  return out;
}

// Single value "e", or inclusive sweep "lo:hi:step".
std::optional<std::vector<double>> parse_eps_spec(const std::string& text) {
  auto parts = split(text, ':');
  std::vector<double> values;
  auto to_double = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size();
  };
  if (parts.size() == 1) {
    double e = 0;
    if (!to_double(parts[0], e)) return std::nullopt;
    values.push_back(e);
    return values;
  }
  if (parts.size() != 3) return std::nullopt;
  double lo = 0, hi = 0, step = 0;
  if (!to_double(parts[0], lo) || !to_double(parts[1], hi) || !to_double(parts[2], step))
    return std::nullopt;
  if (step <= 0 || hi < lo) return std::nullopt;
  for (int i = 0;; ++i) {
    double e = lo + i * step;
    if (e > hi + step * 1e-9) break;
    values.push_back(e);
  }
  if (values.empty()) return std::nullopt;
  return values;
}

CLI::Validator pair_list_syntax() {
  return CLI::Validator(
      [](std::string& s) {
        return parse_pair_list(s) ? std::string{}
                                  : "expected a1:b1,a2:b2,... (or bare alphas): " + s;
      },
      "PAIRS");
}

CLI::Validator int_list_syntax() {
  return CLI::Validator(
      [](std::string& s) {
        return parse_int_list(s) ? std::string{} : "expected a1,a2,...: " + s;
      },
      "INTS");
}

CLI::Validator eps_syntax() {
  return CLI::Validator(
      [](std::string& s) {
        return parse_eps_spec(s) ? std::string{} : "expected E or LO:HI:STEP: " + s;
      },
      "EPS");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Errc::IoFailure, "cannot open " + path + " for writing");
  os << content;
  if (!os.flush()) fail(Errc::IoFailure, "short write to " + path);
}

// One manifest next to each output artifact; all list every file of the run.
void emit_manifests(const std::string& subcommand, const std::vector<std::string>& argv,
                    std::optional<std::uint64_t> seed, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  RunManifest man;
  man.subcommand = subcommand;
  man.argv = argv;
  man.version = version_string;
  man.seed = seed;
  for (const auto& path : inputs) man.inputs.emplace_back(path, sha256_file_hex(path));
  for (const auto& path : outputs) man.outputs.emplace_back(path, sha256_file_hex(path));
  for (const auto& path : outputs) write_run_manifest(path, man);
}

std::string pair_text(const ScalePair& p) {
  return std::to_string(p.alpha) + ":" + std::to_string(p.beta);
}

// ---- subcommand bodies ----

struct InspectArgs {
  int q = 0;
  std::string pairs;
};

int run_inspect(const InspectArgs& a) {
  auto field = make_field(a.q);
  auto pairs = *parse_pair_list(a.pairs);
  std::vector<LatinSquare> squares;
  squares.reserve(pairs.size());
  for (const auto& p : pairs) squares.emplace_back(field, p.alpha, p.beta);

  std::printf("q = %d\n", a.q);
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const auto& sq = squares[i];
    std::string cls = "none";
    if (sq.alpha() != 0 && sq.beta() != 0) {
      ScalePair r = class_representative(*field, sq.pair());
      cls = pair_text(r);
    }
    std::printf("square %zu: alpha=%d beta=%d class=%s latin=%s\n", i, sq.alpha(), sq.beta(),
                cls.c_str(), is_latin(sq) ? "yes" : "no");
    for (int x = 0; x < a.q; ++x) {
      std::string line;
      for (int y = 0; y < a.q; ++y) {
        if (y) line.push_back(',');
        line += std::to_string(sq.cell(x, y));
      }
      std::printf("  %s\n", line.c_str());
    }
  }
  for (std::size_t i = 0; i < squares.size(); ++i)
    for (std::size_t j = i + 1; j < squares.size(); ++j)
      std::printf("orthogonal(%zu,%zu) = %s\n", i, j,
                  are_orthogonal(squares[i], squares[j]) ? "yes" : "no");
  return 0;
}

struct CheckArgs {
  int q = 0;
  std::string alphas;
};

int run_check(const CheckArgs& a) {
  auto field = make_field(a.q);
  auto alphas = *parse_int_list(a.alphas);
  if (alphas.size() < 2) fail(Errc::NoneFound, "need at least two scale factors to compare");

  std::printf("a1,a2,C1,C2,C3,C4,C5,C6,C7,all\n");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      ConstraintReport r = check_constraints(*field, alphas[i], alphas[j]);
      std::string line = std::to_string(r.a1) + "," + std::to_string(r.a2);
      for (bool ok : r.ok) line += ok ? ",ok" : ",VIOLATED";
      line += r.all() ? ",yes" : ",no";
      std::printf("%s\n", line.c_str());
    }
  }
  return 0;
}

struct SearchArgs {
  int q = 0;
  int m = 0;
  int limit = 100;
};

int run_search(const SearchArgs& a) {
  auto field = make_field(a.q);
  GoodTupleSearch found = find_good_tuples(*field, a.m, a.limit);
  if (found.small_characteristic)
    mols::log::info("characteristic %d field: constraint guarantees are weakened",
                    field->characteristic());
  for (const auto& tuple : found.tuples) {
    std::string line;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) line.push_back(',');
      line += std::to_string(tuple[i]);
    }
    std::printf("%s\n", line.c_str());
  }
  return 0;
}

struct BuildArgs {
  int q = 0;
  std::string pairs;
  bool qc = false;
  int truncate_to = 0; // 0 = keep all q^2 columns
  std::string out;
  std::string gen;
  std::vector<std::string> argv;
};

int run_build(const BuildArgs& a) {
  auto field = make_field(a.q);
  auto pairs = *parse_pair_list(a.pairs);

  SparseMatrix h;
  if (a.qc) {
    std::vector<int> alphas;
    alphas.reserve(pairs.size());
    for (const auto& p : pairs) alphas.push_back(class_representative(*field, p).alpha);
    h = build_qc_matrix(field, alphas);
  } else {
    MolsSet mols = build_mols(field, pairs);
    h = incidence_matrix(mols);
  }
  if (a.truncate_to != 0) h = truncate(h, a.truncate_to);

  write_alist(a.out, h);
  std::vector<std::string> outputs{a.out};
  std::printf("wrote %d x %d parity-check matrix (%lld ones) to %s\n", h.rows(), h.cols(),
              h.ones(), a.out.c_str());

  if (!a.gen.empty()) {
    Encoder enc(h);
    std::ostringstream os;
    write_generator(os, enc);
    write_text_file(a.gen, os.str());
    outputs.push_back(a.gen);
    std::printf("wrote generator n=%d k=%d rank=%d to %s\n", enc.n(), enc.k(), enc.rank(),
                a.gen.c_str());
  }

  emit_manifests("build", a.argv, std::nullopt, {}, outputs);
  return 0;
}

struct StopsetsArgs {
  std::string in;
  int cap = 0;
  bool minimal_only = false;
  std::string out;
  int q = 0; // 0 = no provenance re-attach
  std::string pairs;
  int workers = 1;
  int witness_cap = 16;
  std::vector<std::string> argv;
};

// Re-attaches construction provenance to an imported matrix after verifying
// the file really is that construction, so orbit counting stays sound.
void attach_provenance(SparseMatrix& h, int q, const std::string& pairs_text) {
  auto field = make_field(q);
  auto pairs = *parse_pair_list(pairs_text);

  MolsSet mols = build_mols(field, pairs);
  SparseMatrix design = incidence_matrix(mols);
  if (design == h) {
    h.set_meta(design.meta());
    return;
  }
  bool all_reduced = true;
  for (const auto& p : pairs) all_reduced = all_reduced && p.beta == 1;
  if (all_reduced && field->prime()) {
    std::vector<int> alphas;
    for (const auto& p : pairs) alphas.push_back(p.alpha);
    SparseMatrix qc = build_qc_matrix(field, alphas);
    if (qc == h) {
      h.set_meta(qc.meta());
      return;
    }
  }
  fail(Errc::OrderMismatch, "matrix does not match the stated q/pairs construction");
}

bool is_minimal_stopping_set(const SparseMatrix& h, const std::vector<int>& cols) {
  int s = static_cast<int>(cols.size());
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask + 1 < (1u << s); ++mask) {
    subset.clear();
    for (int b = 0; b < s; ++b)
      if (mask & (1u << b)) subset.push_back(cols[b]);
    if (is_stopping_set(h, subset)) return false;
  }
  return true;
}

int run_stopsets(const StopsetsArgs& a) {
  SparseMatrix h = read_alist(a.in);
  if (a.q != 0) attach_provenance(h, a.q, a.pairs);

  EnumerateOptions opts;
  opts.workers = a.workers;
  opts.witness_cap = a.witness_cap;
  StoppingReport report = enumerate_stopping_sets(h, a.cap, opts);

  if (a.minimal_only) {
    report.histogram = report.minimal_histogram;
    for (auto& [size, wits] : report.witnesses) {
      std::vector<std::vector<int>> kept;
      for (auto& w : wits)
        if (is_minimal_stopping_set(h, w)) kept.push_back(w);
      wits = std::move(kept);
    }
  }

  write_text_file(a.out, stopping_report_json(h, report));
  if (report.stopping_distance)
    std::printf("stopping distance %d (cap %d), report in %s\n", *report.stopping_distance,
                a.cap, a.out.c_str());
  else
    std::printf("no stopping sets up to cap %d, report in %s\n", a.cap, a.out.c_str());

  emit_manifests("stopsets", a.argv, std::nullopt, {a.in}, {a.out});
  return 0;
}

struct SimulateArgs {
  std::string in;
  std::string eps;
  long long trials = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  int workers = 1;
  int detection_cap = 12;
  std::vector<std::string> argv;
};

int run_simulate(const SimulateArgs& a) {
  SparseMatrix h = read_alist(a.in);

  SimConfig cfg;
  cfg.epsilons = *parse_eps_spec(a.eps);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.detection_cap = a.detection_cap;

  SimResult result = run_simulation(h, cfg);
  write_text_file(a.out, sim_result_csv(result));
  for (const auto& st : result.per_epsilon)
    std::printf("epsilon %.6g: ber %.6e, word failures %lld/%lld\n", st.epsilon, st.ber(),
                st.word_failures, st.trials);
  std::printf("results in %s\n", a.out.c_str());

  emit_manifests("simulate", a.argv, a.seed, {a.in}, {a.out});
  return 0;
}

struct ExportArgs {
  std::string in;
  std::string out;
  std::vector<std::string> argv;
};

int run_export_alist(const ExportArgs& a) {
  SparseMatrix h = read_alist(a.in);
  write_alist(a.out, h);
  std::printf("input  %s  %s\n", sha256_file_hex(a.in).c_str(), a.in.c_str());
  std::printf("output %s  %s\n", sha256_file_hex(a.out).c_str(), a.out.c_str());
  emit_manifests("export-alist", a.argv, std::nullopt, {a.in}, {a.out});
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_echo(argv, argv + argc);

  CLI::App app{"LDPC codes from mutually orthogonal latin squares"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", mols::version_string);

  int exit_code = 0;

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand(
      "inspect", "Print squares, class representatives, and pairwise orthogonality");
  inspect->add_option("--q", inspect_args.q, "Field order")->required();
  inspect->add_option("--pairs", inspect_args.pairs, "Scale pairs a1:b1,a2:b2,...")
      ->required()
      ->check(pair_list_syntax());
  inspect->callback([&] { exit_code = run_inspect(inspect_args); });

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Evaluate the scale-factor constraints per pair");
  check->add_option("--q", check_args.q, "Field order")->required();
  check->add_option("--alphas", check_args.alphas, "Reduced scale factors a1,a2,...")
      ->required()
      ->check(int_list_syntax());
  check->callback([&] { exit_code = run_check(check_args); });

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "List constraint-satisfying scale factor tuples");
  search->add_option("--q", search_args.q, "Field order")->required();
  search->add_option("--m", search_args.m, "Tuple size (number of squares)")->required();
  search->add_option("--limit", search_args.limit, "Maximum tuples to print")
      ->capture_default_str();
  search->callback([&] { exit_code = run_search(search_args); });

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Construct a parity-check matrix and export alist");
  build->add_option("--q", build_args.q, "Field order")->required();
  build->add_option("--pairs", build_args.pairs, "Scale pairs a1:b1,a2:b2,...")
      ->required()
      ->check(pair_list_syntax());
  build->add_flag("--qc", build_args.qc, "Rearrange into circulant (quasi-cyclic) form");
  build->add_option("--truncate", build_args.truncate_to,
                    "Keep only the first a diagonal column groups");
  build->add_option("--out", build_args.out, "Output alist path")->required();
  build->add_option("--gen", build_args.gen, "Also export a dense generator matrix here");
  build->callback([&] {
    build_args.argv = argv_echo;
    exit_code = run_build(build_args);
  });

  StopsetsArgs stop_args;
  auto* stopsets = app.add_subcommand("stopsets", "Exhaustive stopping-set census up to a cap");
  stopsets->add_option("--in", stop_args.in, "Input alist path")->required();
  stopsets->add_option("--cap", stop_args.cap, "Largest stopping-set size to count")->required();
  stopsets->add_flag("--minimal-only", stop_args.minimal_only,
                     "Report only minimal stopping sets");
  stopsets->add_option("--out", stop_args.out, "Output JSON report path")->required();
  auto* stop_q = stopsets->add_option(
      "--q", stop_args.q, "Field order of the construction the file came from");
  auto* stop_pairs =
      stopsets->add_option("--pairs", stop_args.pairs, "Scale pairs the file was built with")
          ->check(pair_list_syntax());
  stop_q->needs(stop_pairs);
  stop_pairs->needs(stop_q);
  stopsets->add_option("--workers", stop_args.workers, "Worker threads (never changes results)")
      ->capture_default_str();
  stopsets->add_option("--witness-cap", stop_args.witness_cap, "Witnesses recorded per size")
      ->capture_default_str();
  stopsets->callback([&] {
    stop_args.argv = argv_echo;
    exit_code = run_stopsets(stop_args);
  });

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Peeling-decoder Monte-Carlo over the BEC");
  simulate->add_option("--in", sim_args.in, "Input alist path")->required();
  simulate->add_option("--eps", sim_args.eps, "Erasure probability E or sweep LO:HI:STEP")
      ->required()
      ->check(eps_syntax());
  simulate->add_option("--trials", sim_args.trials, "Trials per epsilon")->required();
  simulate->add_option("--seed", sim_args.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out", sim_args.out, "Output CSV path")->required();
  simulate->add_option("--workers", sim_args.workers, "Worker threads (never changes results)")
      ->capture_default_str();
  simulate->add_option("--detection-cap", sim_args.detection_cap,
                       "Largest residual size with its own CSV column")
      ->capture_default_str();
  simulate->callback([&] {
    sim_args.argv = argv_echo;
    exit_code = run_simulate(sim_args);
  });

  ExportArgs export_args;
  auto* export_alist =
      app.add_subcommand("export-alist", "Re-emit an alist file and print both digests");
  export_alist->add_option("--in", export_args.in, "Input alist path")->required();
  export_alist->add_option("--out", export_args.out, "Output alist path")->required();
  export_alist->callback([&] {
    export_args.argv = argv_echo;
    exit_code = run_export_alist(export_args);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mols::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return exit_code;
}
