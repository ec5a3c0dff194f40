#pragma once

/**
 * @file experiments.hpp
 * @brief Counting B = r and B = R over the boxes S_{m,n}(H) of coprime
 *        pairs with fixed degrees, positive leading coefficients and
 *        height at most H.
 *
 * Exhaustive cells are walked in lexicographic order of the coefficient
 * tuples (f first, then g), split into contiguous chunks of the outer
 * (f) index range. Each chunk is counted independently and the per-chunk
 * counts are summed, so results do not depend on chunk size or on the
 * number of worker threads.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bezres/bezout.hpp"
#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/poly.hpp"
#include "bezres/reduced_resultant.hpp"
#include "bezres/resultant.hpp"

namespace bezres {

enum class Criterion { B_eq_r, B_eq_R };

/// What "coprime" means when filtering pairs.
///  no_common_root   - Res(f, g) != 0.
///  no_common_factor - Res(f, g) != 0 and gcd(cont f, cont g) = 1, i.e.
///                     gcd(f, g) = 1 in Z[x]. This is the filter under
///                     which the published percentage tables are reproduced.
enum class Coprimality { no_common_root, no_common_factor };

inline std::string to_string(Criterion c) { return c == Criterion::B_eq_r ? "B_eq_r" : "B_eq_R"; }
inline std::string to_string(Coprimality c) {
  return c == Coprimality::no_common_root ? "no_common_root" : "no_common_factor";
}

struct SampleMode {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

struct CellSpec {
  int m = 1;
  int n = 1;
  int H = 1;
  Criterion criterion = Criterion::B_eq_r;
  std::optional<SampleMode> sample;  // exhaustive when empty
  Coprimality coprimality = Coprimality::no_common_factor;
};

struct CellResult {
  CellSpec spec;
  std::uint64_t total_coprime_pairs = 0;
  std::uint64_t matches = 0;
  std::string percentage;  // two decimals, half away from zero
  bool near_tie = false;   // raw value within 5e-4 (percent) of a rounding tie
};

/// All polynomials of degree `deg`, leading coefficient in 1..H and the
/// rest in -H..H, indexed in lexicographic order of (a_deg, ..., a_0).
class PolyBox {
 public:
  PolyBox(int deg, int H) : deg_(deg), H_(H) {
    if (deg < 1 || H < 1) throw Error("PolyBox: degree and height must be >= 1");
    size_ = static_cast<std::uint64_t>(H);
    for (int i = 0; i < deg; ++i) size_ *= static_cast<std::uint64_t>(2 * H + 1);
  }

  std::uint64_t size() const { return size_; }

  IntPoly at(std::uint64_t index) const {
    std::vector<Integer> low(static_cast<std::size_t>(deg_ + 1));
    const auto base = static_cast<std::uint64_t>(2 * H_ + 1);
    for (int k = 0; k < deg_; ++k) {
      low[static_cast<std::size_t>(k)] = static_cast<long>(index % base) - H_;
      index /= base;
    }
    low[static_cast<std::size_t>(deg_)] = static_cast<long>(index) + 1;
    return IntPoly::from_low_first(std::move(low));
  }

 private:
  int deg_;
  int H_;
  std::uint64_t size_ = 0;
};

/// Res(f, g) != 0, plus gcd(cont f, cont g) = 1 under no_common_factor.
inline bool passes_filter(const IntPoly& f, const IntPoly& g, const Integer& res, Coprimality c) {
  if (sgn(res) == 0) return false;
  return c == Coprimality::no_common_root || gcd(content(f), content(g)) == 1;
}

/// Pull-style stream over the ordered pairs of S_{m,n}(H). Never
/// materializes the set.
class PairStream {
 public:
  PairStream(int m, int n, int H, Coprimality c = Coprimality::no_common_factor)
      : fbox_(m, H), gbox_(n, H), coprimality_(c) {}

  std::optional<std::pair<IntPoly, IntPoly>> next() {
    while (i_ < fbox_.size()) {
      if (!f_) f_ = fbox_.at(i_);
      while (j_ < gbox_.size()) {
        IntPoly g = gbox_.at(j_++);
        if (passes_filter(*f_, g, resultant_bareiss(*f_, g), coprimality_)) {
          return std::make_pair(*f_, std::move(g));
        }
      }
      ++i_;
      j_ = 0;
      f_.reset();
    }
    return std::nullopt;
  }

 private:
  PolyBox fbox_;
  PolyBox gbox_;
  Coprimality coprimality_;
  std::uint64_t i_ = 0;
  std::uint64_t j_ = 0;
  std::optional<IntPoly> f_;
};

inline PairStream enumerate_cell(int m, int n, int H, Coprimality c = Coprimality::no_common_factor) {
  return PairStream(m, n, H, c);
}

// ---------------------------------------------------------------------------
// Counter-based pseudo-random pairs

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream keyed by (seed, index); output k is mix64(key + k * golden).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index) : key_(mix64(mix64(seed) ^ mix64(~index))) {}

  std::uint64_t next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

  /// Uniform in [lo, hi] by rejection.
  long uniform(long lo, long hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return lo + static_cast<long>(x % range);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline IntPoly random_poly(CounterRng& rng, int deg, int H) {
  std::vector<Integer> high(static_cast<std::size_t>(deg + 1));
  high[0] = rng.uniform(1, H);
  for (int k = 1; k <= deg; ++k) high[static_cast<std::size_t>(k)] = rng.uniform(-H, H);
  return IntPoly::from_high_first(std::move(high));
}

}  // namespace detail

/// Deterministic pair for (seed, index), uniform over the box and
/// rejection-sampled until it passes the coprimality filter. Identical on
/// every platform.
inline std::pair<IntPoly, IntPoly> random_pair(int m, int n, int H, std::uint64_t seed, std::uint64_t index,
                                               Coprimality c = Coprimality::no_common_root) {
  if (m < 1 || n < 1 || H < 1) throw Error("random_pair: m, n, H must be >= 1");
  detail::CounterRng rng(seed, index);
  for (;;) {
    IntPoly f = detail::random_poly(rng, m, H);
    IntPoly g = detail::random_poly(rng, n, H);
    if (passes_filter(f, g, resultant_bareiss(f, g), c)) return {std::move(f), std::move(g)};
  }
}

/// Like random_pair, with the degrees themselves drawn uniformly from
/// 1..max_deg out of the same (seed, index) stream.
inline std::pair<IntPoly, IntPoly> random_pair_up_to(int max_deg, int H, std::uint64_t seed, std::uint64_t index,
                                                     Coprimality c = Coprimality::no_common_root) {
  if (max_deg < 1 || H < 1) throw Error("random_pair_up_to: max_deg, H must be >= 1");
  detail::CounterRng rng(seed ^ 0x5bd1e995ULL, index);
  const int m = static_cast<int>(rng.uniform(1, max_deg));
  const int n = static_cast<int>(rng.uniform(1, max_deg));
  return random_pair(m, n, H, seed, index, c);
}

// ---------------------------------------------------------------------------
// Per-pair criteria

struct PairVerdict {
  bool counted = false;  // passes the coprimality filter
  bool match = false;
};

/// B = r is decided without computing r when d = 1 (then B = r always).
inline PairVerdict evaluate_pair(const IntPoly& f, const IntPoly& g, Criterion crit, Coprimality c,
                                 bool shortcut_d1 = true) {
  PairVerdict v;
  const Integer res = resultant_bareiss(f, g);
  if (!passes_filter(f, g, res, c)) return v;
  v.counted = true;
  if (crit == Criterion::B_eq_r && shortcut_d1 && gcd(f.leading(), g.leading()) == 1) {
    v.match = true;
    return v;
  }
  const Integer B = bezout_certificate(f, g).B;
  v.match = crit == Criterion::B_eq_R ? B == abs(res) : B == reduced_resultant_value(f, g);
  return v;
}

struct ChunkCounts {
  std::uint64_t total = 0;
  std::uint64_t matches = 0;
};

// ---------------------------------------------------------------------------
// Checkpoints: one "chunk_id,total,matches" line per finished chunk,
// preceded by a "# " header line that fingerprints the run.

class CheckpointError : public Error {
 public:
  using Error::Error;
};

class Checkpoint {
 public:
  /// Loads `path` if it exists (validating the fingerprint), then appends.
  Checkpoint(std::string path, std::string fingerprint)
      : path_(std::move(path)), fingerprint_(std::move(fingerprint)) {
    std::ifstream in(path_);
    bool have_header = false;
    if (in) {
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (!have_header) {
          if (line != header()) {
            throw CheckpointError("checkpoint " + path_ + ": header does not match this run");
          }
          have_header = true;
          continue;
        }
        std::uint64_t id = 0;
        ChunkCounts c;
        if (!parse_line(line, id, c) || c.matches > c.total) {
          throw CheckpointError("checkpoint " + path_ + ": malformed line " + std::to_string(lineno));
        }
        auto [it, fresh] = done_.emplace(id, c);
        if (!fresh && (it->second.total != c.total || it->second.matches != c.matches)) {
          throw CheckpointError("checkpoint " + path_ + ": conflicting entries for chunk " + std::to_string(id));
        }
      }
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw CheckpointError("checkpoint " + path_ + ": cannot open for writing");
    if (!have_header) out_ << header() << "\n" << std::flush;
  }

  std::optional<ChunkCounts> lookup(std::uint64_t id) const {
    std::lock_guard lock(mu_);
    auto it = done_.find(id);
    if (it == done_.end()) return std::nullopt;
    return it->second;
  }

  void record(std::uint64_t id, const ChunkCounts& c) {
    std::lock_guard lock(mu_);
    done_.emplace(id, c);
    out_ << id << ',' << c.total << ',' << c.matches << "\n" << std::flush;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return done_.size();
  }

 private:
  std::string header() const { return "# bezres-checkpoint " + fingerprint_; }

  static bool parse_line(const std::string& line, std::uint64_t& id, ChunkCounts& c) {
    std::uint64_t v[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
      std::size_t end = line.find(',', pos);
      if ((k < 2) == (end == std::string::npos)) return false;
      std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 19) return false;
      v[k] = std::stoull(tok);
      pos = end + 1;
    }
    id = v[0];
    c = {v[1], v[2]};
    return true;
  }

  std::string path_;
  std::string fingerprint_;
  std::map<std::uint64_t, ChunkCounts> done_;
  std::ofstream out_;
  mutable std::mutex mu_;
};

// ---------------------------------------------------------------------------
// Cell runner

struct RunOptions {
  unsigned jobs = 1;
  std::uint64_t chunk_size = 0;       // outer polynomials (or samples) per chunk; 0 = automatic
  Checkpoint* checkpoint = nullptr;   // optional
  std::uint64_t chunk_id_base = 0;    // first checkpoint id used by this cell
};

/// Number of chunks the cell is split into under `opts`.
inline std::uint64_t chunk_size_for(const CellSpec& spec, const RunOptions& opts) {
  if (opts.chunk_size > 0) return opts.chunk_size;
  return spec.sample ? 1000 : 16;
}

inline std::uint64_t chunk_count(const CellSpec& spec, const RunOptions& opts) {
  const std::uint64_t outer = spec.sample ? spec.sample->count : PolyBox(spec.m, spec.H).size();
  const std::uint64_t cs = chunk_size_for(spec, opts);
  return (outer + cs - 1) / cs;
}

inline ChunkCounts count_chunk(const CellSpec& spec, std::uint64_t begin, std::uint64_t end) {
  ChunkCounts c;
  if (spec.sample) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      auto [f, g] = random_pair(spec.m, spec.n, spec.H, spec.sample->seed, idx, spec.coprimality);
      PairVerdict v = evaluate_pair(f, g, spec.criterion, spec.coprimality);
      c.total += v.counted;
      c.matches += v.match;
    }
    return c;
  }
  const PolyBox fbox(spec.m, spec.H);
  const PolyBox gbox(spec.n, spec.H);
  std::vector<IntPoly> gs;
  gs.reserve(gbox.size());
  for (std::uint64_t j = 0; j < gbox.size(); ++j) gs.push_back(gbox.at(j));
  for (std::uint64_t i = begin; i < end; ++i) {
    const IntPoly f = fbox.at(i);
    for (const auto& g : gs) {
      PairVerdict v = evaluate_pair(f, g, spec.criterion, spec.coprimality);
      c.total += v.counted;
      c.matches += v.match;
    }
  }
  return c;
}

/// round(10000 * matches / total) half away from zero, as "XX.YY".
inline std::string format_percentage(std::uint64_t matches, std::uint64_t total) {
  if (total == 0) return "0.00";
  const Integer num = Integer(static_cast<unsigned long>(matches)) * 10000;
  const Integer den = static_cast<unsigned long>(total);
  Integer hundredths = floor_div(2 * num + den, 2 * den);
  Integer whole = floor_div(hundredths, 100);
  Integer frac = hundredths - whole * 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return whole.get_str() + "." + f;
}

/// Raw percentage within 5e-4 of an x.xx5 tie.
inline bool near_rounding_tie(std::uint64_t matches, std::uint64_t total) {
  if (total == 0) return false;
  const Integer num = Integer(static_cast<unsigned long>(matches)) * 10000;
  const Integer den = static_cast<unsigned long>(total);
  Integer rem = num - floor_div(num, den) * den;
  return abs(20 * rem - 10 * den) <= den;
}

inline CellResult cell_percentages(const CellSpec& spec, const RunOptions& opts = {}) {
  if (spec.m < 1 || spec.n < 1 || spec.H < 1) throw Error("cell_percentages: m, n, H must be >= 1");
  const std::uint64_t outer = spec.sample ? spec.sample->count : PolyBox(spec.m, spec.H).size();
  const std::uint64_t cs = chunk_size_for(spec, opts);
  const std::uint64_t chunks = chunk_count(spec, opts);
  std::vector<ChunkCounts> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= chunks) return;
      try {
        const std::uint64_t id = opts.chunk_id_base + k;
        if (opts.checkpoint) {
          if (auto done = opts.checkpoint->lookup(id)) {
            results[k] = *done;
            continue;
          }
        }
        results[k] = count_chunk(spec, k * cs, std::min(outer, (k + 1) * cs));
        if (opts.checkpoint) opts.checkpoint->record(id, results[k]);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);

  CellResult r;
  r.spec = spec;
  for (const auto& c : results) {
    r.total_coprime_pairs += c.total;
    r.matches += c.matches;
  }
  r.percentage = format_percentage(r.matches, r.total_coprime_pairs);
  r.near_tie = near_rounding_tie(r.matches, r.total_coprime_pairs);
  return r;
}

// ---------------------------------------------------------------------------
// Tables

enum class TableFormat { csv, markdown, json };

inline nlohmann::json to_json(const CellResult& r) {
  nlohmann::json j = {
      {"m", r.spec.m},
      {"n", r.spec.n},
      {"H", r.spec.H},
      {"criterion", to_string(r.spec.criterion)},
      {"coprimality", to_string(r.spec.coprimality)},
      {"mode", r.spec.sample ? "sample" : "exhaustive"},
      {"total", r.total_coprime_pairs},
      {"matches", r.matches},
      {"percentage", r.percentage},
      {"near_tie", r.near_tie},
  };
  if (r.spec.sample) {
    j["sample_count"] = r.spec.sample->count;
    j["seed"] = r.spec.sample->seed;
  }
  return j;
}

inline std::string format_table(const std::vector<CellResult>& results, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::csv:
      os << "m,n,H,criterion,total,matches,percentage\n";
      for (const auto& r : results) {
        os << r.spec.m << ',' << r.spec.n << ',' << r.spec.H << ',' << to_string(r.spec.criterion) << ','
           << r.total_coprime_pairs << ',' << r.matches << ',' << r.percentage << "\n";
      }
      break;
    case TableFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) arr.push_back(to_json(r));
      os << arr.dump(2) << "\n";
      break;
    }
    case TableFormat::markdown: {
      std::vector<std::pair<int, int>> cells;
      std::vector<int> hs;
      std::map<std::tuple<int, int, int>, std::string> value;
      for (const auto& r : results) {
        std::pair<int, int> mn{r.spec.m, r.spec.n};
        if (std::find(cells.begin(), cells.end(), mn) == cells.end()) cells.push_back(mn);
        if (std::find(hs.begin(), hs.end(), r.spec.H) == hs.end()) hs.push_back(r.spec.H);
        value[{r.spec.m, r.spec.n, r.spec.H}] = r.percentage + "%";
      }
      os << "| (m, n) \\ H |";
      for (int h : hs) os << ' ' << h << " |";
      os << "\n|---|";
      for (std::size_t k = 0; k < hs.size(); ++k) os << "---|";
      os << "\n";
      for (const auto& [m, n] : cells) {
        os << "| (" << m << ", " << n << ") |";
        for (int h : hs) {
          auto it = value.find({m, n, h});
          os << ' ' << (it == value.end() ? std::string("-") : it->second) << " |";
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

/// Identifies a table run for checkpointing: any change to the cell list,
/// modes or chunking yields a different string.
inline std::string run_fingerprint(const std::vector<CellSpec>& specs, const RunOptions& opts) {
  std::ostringstream os;
  for (const auto& s : specs) {
    os << s.m << '.' << s.n << '.' << s.H << '.' << to_string(s.criterion) << '.' << to_string(s.coprimality);
    if (s.sample) os << ".s" << s.sample->count << '.' << s.sample->seed;
    os << '.' << chunk_size_for(s, opts) << ';';
  }
  return os.str();
}

/// Computes every cell (in order) and renders the document. Checkpoint ids
/// are assigned to the cells' chunks consecutively.
inline std::vector<CellResult> run_cells(const std::vector<CellSpec>& specs, RunOptions opts = {}) {
  std::vector<CellResult> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    out.push_back(cell_percentages(s, opts));
    opts.chunk_id_base += chunk_count(s, opts);
  }
  return out;
}

inline std::string emit_table(const std::vector<CellSpec>& specs, TableFormat format, const RunOptions& opts = {}) {
  return format_table(run_cells(specs, opts), format);
}

}  // namespace bezres
