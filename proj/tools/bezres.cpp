// bezres: compute (B, r, R) triples, verify the relations among them,
// reproduce the percentage tables and replay the worked examples.
//
// Exit codes: 0 ok, 1 failed check or example mismatch, 2 parse error,
// 3 inputs not coprime, 4 degree precondition, 5 checkpoint corruption.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bezres/errors.hpp"
#include "bezres/experiments.hpp"
#include "bezres/golden.hpp"
#include "bezres/json_io.hpp"
#include "bezres/parse.hpp"
#include "bezres/relations.hpp"

namespace {

using namespace bezres;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kNotCoprime = 3, kDegree = 4, kCheckpoint = 5 };

std::uint64_t default_seed() {
  if (const char* s = std::getenv("BEZRES_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable BEZRES_SEED=" << s << "\n";
    }
  }
  return 0;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

IntPoly parse_arg(const std::string& text, const char* which) {
  try {
    return parse_any(text);
  } catch (const ParseError& e) {
    std::cerr << which << " = \"" << text << "\"\n";
    throw;
  }
}

void print_outcomes(std::ostream& os, const std::vector<CheckOutcome>& outcomes) {
  for (const auto& c : outcomes) {
    os << (c.holds ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  std::string f, g;
  std::string format = "text";
};

int cmd_compute(const ComputeArgs& a) {
  const TripleReport t = triple_report(parse_arg(a.f, "f"), parse_arg(a.g, "g"));
  if (a.format == "json") {
    std::cout << to_json(t).dump(2) << "\n";
  } else {
    std::cout << diagnostic_dump(t);
  }
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> pair;
  std::uint64_t random = 0;
  std::vector<int> exhaustive;
  std::uint64_t seed = 0;
  int deg = 6;
  int height = 20;
  std::string format = "text";
  std::string coprimality = "root";
};

Coprimality parse_coprimality(const std::string& s) {
  return s == "factor" ? Coprimality::no_common_factor : Coprimality::no_common_root;
}

void emit_tally(const CheckTally& tally, const std::string& format) {
  if (format == "json") {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, k] : tally.by_name) checks[name] = {{"evaluated", k.evaluated}, {"failed", k.failed}};
    std::cout << nlohmann::json{{"pairs", tally.pairs}, {"failed", tally.failed_checks()}, {"checks", checks}}.dump(2)
              << "\n";
    return;
  }
  std::cout << "pairs " << tally.pairs << "\n";
  for (const auto& [name, k] : tally.by_name) {
    std::cout << (k.failed == 0 ? "PASS " : "FAIL ") << name << " " << (k.evaluated - k.failed) << "/" << k.evaluated
              << "\n";
  }
  std::cout << "failed " << tally.failed_checks() << "\n";
}

int cmd_verify(const VerifyArgs& a) {
  if (!a.pair.empty()) {
    const TripleReport t = triple_report(parse_arg(a.pair[0], "f"), parse_arg(a.pair[1], "g"));
    const std::vector<CheckOutcome> outcomes = verify_all(t);
    bool ok = true;
    for (const auto& c : outcomes) ok = ok && c.holds;
    if (a.format == "json") {
      std::cout << nlohmann::json{{"report", to_json(t)}, {"checks", to_json(outcomes)}}.dump(2) << "\n";
    } else {
      std::cout << diagnostic_dump(t);
      print_outcomes(std::cout, outcomes);
    }
    if (!ok) std::cerr << diagnostic_dump(t);
    return ok ? kOk : kCheckFailed;
  }

  CheckTally tally;
  auto visit = [&](const IntPoly& f, const IntPoly& g) {
    const TripleReport t = triple_report(f, g);
    tally.add(t, verify_all(t));
  };
  if (a.random > 0) {
    for (std::uint64_t i = 0; i < a.random; ++i) {
      auto [f, g] = random_pair_up_to(a.deg, a.height, a.seed, i, parse_coprimality(a.coprimality));
      visit(f, g);
    }
  } else {
    PairStream s = enumerate_cell(a.exhaustive[0], a.exhaustive[1], a.exhaustive[2], parse_coprimality(a.coprimality));
    while (auto p = s.next()) visit(p->first, p->second);
  }
  emit_tally(tally, a.format);
  for (const auto& dump : tally.failures) std::cerr << "check failure:\n" << dump;
  return tally.failed_checks() == 0 ? kOk : kCheckFailed;
}

// table --------------------------------------------------------------------

struct TableArgs {
  std::string which;
  std::vector<int> H{2};
  std::vector<std::string> cells;
  std::string format = "csv";
  unsigned jobs = 0;
  std::string checkpoint;
  std::string output;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;
  std::string coprimality = "factor";
};

std::vector<std::pair<int, int>> parse_cells(const std::vector<std::string>& raw) {
  if (raw.empty()) return {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  std::vector<std::pair<int, int>> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string cell;
    while (std::getline(ss, cell, ';')) {
      const auto comma = cell.find(',');
      std::size_t used1 = 0, used2 = 0;
      int m = 0, n = 0;
      try {
        if (comma == std::string::npos) throw std::invalid_argument("no comma");
        m = std::stoi(cell.substr(0, comma), &used1);
        n = std::stoi(cell.substr(comma + 1), &used2);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--cells", "expected m,n but got '" + cell + "'");
      }
      if (used1 != comma || used2 != cell.size() - comma - 1 || m < 1 || n < 1) {
        throw CLI::ValidationError("--cells", "expected positive m,n but got '" + cell + "'");
      }
      out.emplace_back(m, n);
    }
  }
  return out;
}

int cmd_table(const TableArgs& a) {
  const Criterion crit = a.which == "BR" ? Criterion::B_eq_R : Criterion::B_eq_r;
  const TableFormat fmt =
      a.format == "json" ? TableFormat::json : a.format == "markdown" ? TableFormat::markdown : TableFormat::csv;
  std::vector<CellSpec> specs;
  for (const auto& [m, n] : parse_cells(a.cells)) {
    for (int h : a.H) {
      CellSpec s;
      s.m = m;
      s.n = n;
      s.H = h;
      s.criterion = crit;
      if (a.sample > 0) s.sample = SampleMode{a.sample, a.seed};
      s.coprimality = parse_coprimality(a.coprimality);
      specs.push_back(s);
    }
  }
  RunOptions opts;
  opts.jobs = a.jobs == 0 ? default_jobs() : a.jobs;
  opts.chunk_size = a.chunk_size;
  std::unique_ptr<Checkpoint> cp;
  if (!a.checkpoint.empty()) {
    cp = std::make_unique<Checkpoint>(a.checkpoint, run_fingerprint(specs, opts));
    opts.checkpoint = cp.get();
  }
  const std::string doc = emit_table(specs, fmt, opts);
  if (a.output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(a.output, std::ios::binary);
    out << doc;
    if (!out) throw Error("cannot write " + a.output);
  }
  return kOk;
}

// examples -----------------------------------------------------------------

std::vector<GoldenExample> load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::vector<GoldenExample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    GoldenExample ex;
    std::string b, r, R;
    if (!std::getline(ss, ex.f, ';') || !std::getline(ss, ex.g, ';') || !std::getline(ss, b, ';') ||
        !std::getline(ss, r, ';') || !std::getline(ss, R)) {
      throw Error(path + ": expected 'f;g;B;r;R' lines");
    }
    ex.B = std::stol(b);
    ex.r = std::stol(r);
    ex.R = std::stol(R);
    out.push_back(ex);
  }
  return out;
}

int cmd_examples(const std::string& expected_path) {
  const auto examples = expected_path.empty() ? golden_examples() : load_expected(expected_path);
  bool ok = true;
  for (const auto& o : run_golden(examples)) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.expected.f << " | " << o.expected.g << "  B=" << o.B
              << " r=" << o.r << " R=" << o.R;
    if (!o.pass) {
      std::cout << " (expected B=" << o.expected.B << " r=" << o.expected.r << " R=" << o.expected.R
                << (o.checks_hold ? "" : ", relation checks failed") << ")";
    }
    std::cout << "\n";
    ok = ok && o.pass;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bezout numbers, reduced resultants and resultants of integer polynomial pairs"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Print d, B, r, R and their certificates for a pair");
  compute->add_option("f", ca.f, "First polynomial (e.g. 6x^2+5 or 6,0,5)")->required();
  compute->add_option("g", ca.g, "Second polynomial")->required();
  compute->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  va.seed = default_seed();
  auto* verify = app.add_subcommand("verify", "Check every divisibility relation on one pair or a family of pairs");
  auto* o_pair = verify->add_option("--pair", va.pair, "F G")->expected(2);
  auto* o_random = verify->add_option("--random", va.random, "Number of seeded random pairs");
  auto* o_exh = verify->add_option("--exhaustive", va.exhaustive, "m n H")->expected(3);
  o_pair->excludes(o_random)->excludes(o_exh);
  o_random->excludes(o_exh);
  verify->add_option("--seed", va.seed, "Seed (default $BEZRES_SEED or 0)");
  verify->add_option("--deg", va.deg, "Maximum degree for --random")->check(CLI::Range(1, 64));
  verify->add_option("--height", va.height, "Maximum height for --random")->check(CLI::PositiveNumber);
  verify->add_option("--coprimality", va.coprimality, "root: Res != 0; factor: also coprime contents")
      ->check(CLI::IsMember({"root", "factor"}));
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

  TableArgs ta;
  ta.seed = default_seed();
  auto* table = app.add_subcommand("table", "Percentage of pairs with B = r (Br) or B = R (BR)");
  table->add_option("which", ta.which)->required()->check(CLI::IsMember({"Br", "BR"}));
  table->add_option("--H", ta.H, "Heights, e.g. --H 2 3 or --H 2,3")->delimiter(',')->check(CLI::PositiveNumber);
  table->add_option("--cells", ta.cells, "Degree cells m,n (repeat or separate with ';'); default the six of degree <= 3");
  table->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "markdown", "json"}));
  table->add_option("--jobs", ta.jobs, "Worker threads (default: available parallelism)");
  table->add_option("--checkpoint", ta.checkpoint, "Resume file of finished chunks");
  table->add_option("--output", ta.output, "Write the document here instead of stdout");
  table->add_option("--sample", ta.sample, "Sample this many pairs per cell instead of enumerating");
  table->add_option("--seed", ta.seed, "Sampling seed (default $BEZRES_SEED or 0)");
  table->add_option("--chunk-size", ta.chunk_size, "Outer polynomials (or samples) per chunk");
  table->add_option("--coprimality", ta.coprimality, "factor (default) or root")
      ->check(CLI::IsMember({"root", "factor"}));

  std::string expected_path;
  auto* examples = app.add_subcommand("examples", "Recompute the six worked examples against known values");
  examples->add_option("--expected", expected_path, "Override the expected table (f;g;B;r;R per line)")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return cmd_compute(ca);
    if (*verify) {
      if (va.pair.empty() && va.random == 0 && va.exhaustive.empty()) {
        std::cerr << "verify: one of --pair, --random, --exhaustive is required\n";
        return kParse;
      }
      return cmd_verify(va);
    }
    if (*table) return cmd_table(ta);
    if (*examples) return cmd_examples(expected_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotCoprimeError& e) {
    std::cerr << "not coprime: " << e.what() << "\n";
    return kNotCoprime;
  } catch (const DegreeError& e) {
    std::cerr << "degree: " << e.what() << "\n";
    return kDegree;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint: " << e.what() << "\n";
    return kCheckpoint;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
