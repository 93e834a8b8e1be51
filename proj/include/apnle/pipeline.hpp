#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnle/classify.hpp"
#include "apnle/dedup.hpp"
#include "apnle/io.hpp"
#include "apnle/prune.hpp"
#include "apnle/search.hpp"
#include "json.hpp"

namespace apnle {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitCompleted = 0,
  kExitBudgetExpired = 2,
  kExitVerificationFailure = 3,
  kExitInputError = 4,
};

/// Bad user input (maps to kExitInputError).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOutputSchema = 1;

inline void require_dimension(int n) {
  if (n < 1 || n > 12) throw InputError("n must be in 1..12, got " + std::to_string(n));
}

inline nlohmann::ordered_json classify_document(int n, ClassScope scope = ClassScope::Permutations) {
  require_dimension(n);
  nlohmann::ordered_json j;
  j["schema"] = kOutputSchema;
  j["n"] = n;
  j["scope"] = scope == ClassScope::Permutations ? "permutations" : "all-pairs";
  const auto classes = enumerate_classes(n, scope);
  j["count"] = classes.size();
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& t : classes) j["classes"].push_back(to_json(t));
  return j;
}

/// Invariant factors of the RCF, smallest first, joined by " | ".
inline std::string describe_blocks(const Gf2Matrix& m) {
  std::string out;
  for (const auto& q : rcf(m).invariant_factors) {
    if (!out.empty()) out += " | ";
    out += q.to_string();
  }
  return out;
}

struct PruneRow {
  AutoTuple tuple;
  Verdict verdict;
  /// Reference verdict code (dim, quad, search, yes, open) when known.
  std::optional<std::string> reference;
  bool match = true;
};

inline std::vector<PruneRow> prune_rows(int n) {
  require_dimension(n);
  std::vector<PruneRow> rows;
  const auto refs = reference_classes(n);
  for (const auto& t : enumerate_classes(n)) {
    PruneRow r;
    r.tuple = t;
    r.verdict = admissibility(t);
    if (t.paper_class) {
      for (const auto& ref : refs) {
        if (ref.id == *t.paper_class) r.reference = ref.verdict;
      }
    }
    r.match = !r.reference || verdict_matches_reference(r.verdict, *r.reference);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline nlohmann::ordered_json prune_document(int n, const std::vector<PruneRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = kOutputSchema;
  j["n"] = n;
  j["rows"] = nlohmann::ordered_json::array();
  std::size_t mismatches = 0;
  for (const auto& r : rows) {
    nlohmann::ordered_json e = to_json(r.tuple);
    const auto v = to_json(r.verdict);
    e["verdict"] = v["verdict"];
    e["witness"] = v["witness"];
    e["reference"] = r.reference ? nlohmann::ordered_json(*r.reference) : nlohmann::ordered_json(nullptr);
    e["match"] = r.match;
    if (!r.match) ++mismatches;
    j["rows"].push_back(std::move(e));
  }
  j["mismatches"] = mismatches;
  return j;
}

inline std::string reference_label(const std::string& code) {
  if (code == "dim") return "no (dim)";
  if (code == "quad") return "no (quad)";
  if (code == "search") return "no (search)";
  if (code == "yes") return "yes";
  if (code == "open") return "?";
  return code;
}

/// Side-by-side rendering of our verdicts and the reference column.
inline std::string render_table1(int n, const std::vector<PruneRow>& rows) {
  std::ostringstream os;
  os << "n=" << n << "\n";
  os << std::left << std::setw(6) << "class" << std::setw(6) << "p" << std::setw(34) << "B" << std::setw(34) << "A" << std::setw(24) << "verdict"
     << std::setw(14) << "reference"
     << "flag\n";
  std::size_t mismatches = 0;
  std::size_t pruned = 0;
  for (const auto& r : rows) {
    std::string verdict = kind_name(r.verdict.kind);
    if (r.verdict.kind == Verdict::Kind::RejectedDim) {
      verdict += " i=" + std::to_string(r.verdict.i);
    } else if (r.verdict.kind == Verdict::Kind::RejectedQuadrinomial) {
      verdict += " " + std::to_string(r.verdict.a) + "," + std::to_string(r.verdict.b) + "," + std::to_string(r.verdict.c);
    }
    if (r.verdict.rejected()) ++pruned;
    if (!r.match) ++mismatches;
    os << std::setw(6) << r.tuple.class_id << std::setw(6) << r.tuple.p << std::setw(34) << describe_blocks(r.tuple.B) << std::setw(34)
       << describe_blocks(r.tuple.A) << std::setw(24) << verdict << std::setw(14) << (r.reference ? reference_label(*r.reference) : "-")
       << (r.reference ? (r.match ? "MATCH" : "MISMATCH") : "-") << "\n";
  }
  os << "pruned " << pruned << " of " << rows.size() << ", mismatches " << mismatches << "\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["solutions"] = r.solutions.size();
  j["nodes_visited"] = r.nodes_visited;
  j["max_depth_reached"] = r.max_depth_reached;
  j["elapsed"] = r.elapsed;
  j["exhausted"] = r.exhausted;
  j["stop_reason"] = stop_reason_name(r.stop_reason);
  j["restarts"] = r.restarts;
  j["jobs"] = r.jobs;
  std::ostringstream h;
  h << std::hex << std::setw(16) << std::setfill('0') << r.trace_digest;
  j["trace_digest"] = h.str();
  return j;
}

inline nlohmann::ordered_json config_snapshot(const SearchConfig& c, unsigned jobs) {
  nlohmann::ordered_json j;
  j["mode"] = c.mode == SearchMode::Exhaustive ? "exhaustive" : "randomized";
  j["threshold_t"] = c.threshold_t;
  j["time_budget"] = std::isfinite(c.time_budget) ? nlohmann::ordered_json(c.time_budget) : nlohmann::ordered_json(nullptr);
  j["node_budget"] = c.node_budget;
  j["rng_seed"] = c.rng_seed;
  j["commutant_budget"] = c.commutant_budget;
  j["seed_fixed_points"] = c.seed_fixed_points;
  j["split_depth"] = c.split_depth;
  j["max_solutions"] = c.max_solutions;
  j["restart_nodes"] = c.restart_nodes;
  j["jobs"] = jobs;
  return j;
}

/// Append-only JSON-lines log of class outcomes.
class Manifest {
 public:
  explicit Manifest(std::string path) : path_(std::move(path)) {}

  void append(const nlohmann::ordered_json& entry) const {
    std::ofstream f(path_, std::ios::app);
    if (!f) throw std::runtime_error("manifest: cannot open " + path_);
    f << entry.dump() << '\n';
  }

  std::vector<nlohmann::json> entries() const {
    std::vector<nlohmann::json> out;
    std::ifstream f(path_);
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      out.push_back(nlohmann::json::parse(line));
    }
    return out;
  }

  /// Last terminal entry (pruned or exhausted) for this class and config.
  std::optional<nlohmann::json> completed(int n, int class_id, const nlohmann::ordered_json& config) const {
    std::optional<nlohmann::json> hit;
    const nlohmann::json cfg = nlohmann::json::parse(config.dump());
    for (const auto& e : entries()) {
      if (e.value("n", 0) != n || e.value("class_id", 0) != class_id) continue;
      const std::string state = e.value("state", "");
      if (state != "pruned" && state != "exhausted") continue;
      if (state == "exhausted" && e.value("config", nlohmann::json()) != cfg) continue;
      hit = e;
    }
    return hit;
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct SearchRequest {
  int n = 0;
  /// Empty = every class.
  std::vector<int> class_ids;
  SearchConfig config;
  unsigned jobs = 1;
  bool force = false;
  std::string out_dir = ".";
  /// Empty = no checkpoints.
  std::string checkpoint_dir;
};

/// Terminal state of one class: pruned, exhausted, budget-expired or
/// running-checkpointed.
struct ClassOutcome {
  int class_id = 0;
  std::string state;
  Verdict verdict;
  std::size_t count = 0;
  double wall = 0;
  std::vector<std::string> artifacts;
  std::optional<SearchReport> report;
  std::vector<SolutionGroup> groups;
  bool skipped = false;
  bool verification_failed = false;
  std::string error;
};

namespace detail {

inline std::string class_stem(int n, int class_id) { return "n" + std::to_string(n) + "_class" + std::to_string(class_id); }

inline void remove_checkpoints(const std::string& base) {
  std::error_code ec;
  std::filesystem::remove(base, ec);
  const auto dir = std::filesystem::path(base).parent_path();
  const auto stem = std::filesystem::path(base).filename().string() + ".job";
  if (!std::filesystem::exists(dir.empty() ? "." : dir)) return;
  for (const auto& e : std::filesystem::directory_iterator(dir.empty() ? "." : dir)) {
    if (e.path().filename().string().rfind(stem, 0) == 0) std::filesystem::remove(e.path(), ec);
  }
}

inline bool any_checkpoint(const std::string& base) {
  if (std::filesystem::exists(base)) return true;
  const auto dir = std::filesystem::path(base).parent_path();
  const auto stem = std::filesystem::path(base).filename().string() + ".job";
  if (!std::filesystem::exists(dir.empty() ? "." : dir)) return false;
  for (const auto& e : std::filesystem::directory_iterator(dir.empty() ? "." : dir)) {
    if (e.path().filename().string().rfind(stem, 0) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Runs prune then (if undecided or forced) search for one class. Solutions
/// stream to <out>/n<N>_class<ID>.lut; the report and fingerprint groups go
/// to <out>/n<N>_class<ID>.report.json.
inline ClassOutcome run_class(const SearchRequest& req, const AutoTuple& t, const Manifest& manifest) {
  ClassOutcome out;
  out.class_id = t.class_id;
  const auto start = std::chrono::steady_clock::now();
  const auto cfg_json = config_snapshot(req.config, req.jobs);
  if (!req.force) {
    if (auto done = manifest.completed(t.n, t.class_id, cfg_json)) {
      out.skipped = true;
      out.state = (*done)["state"].get<std::string>();
      out.count = (*done).value("count", std::size_t{0});
      return out;
    }
  }
  out.verdict = admissibility(t);
  std::filesystem::create_directories(req.out_dir);
  const std::string stem = (std::filesystem::path(req.out_dir) / detail::class_stem(t.n, t.class_id)).string();

  auto log = [&] {
    out.wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json e;
    e["schema"] = kOutputSchema;
    e["n"] = t.n;
    e["class_id"] = t.class_id;
    e["paper_class"] = t.paper_class ? nlohmann::ordered_json(*t.paper_class) : nlohmann::ordered_json(nullptr);
    e["config"] = cfg_json;
    e["state"] = out.state;
    e["verdict"] = to_json(out.verdict);
    e["count"] = out.count;
    e["wall"] = out.wall;
    e["artifacts"] = out.artifacts;
    if (!out.error.empty()) e["error"] = out.error;
    manifest.append(e);
  };

  if (out.verdict.rejected() && !req.force) {
    out.state = "pruned";
    log();
    return out;
  }

  SearchConfig cfg = req.config;
  std::string ckpt;
  if (!req.checkpoint_dir.empty() && cfg.mode == SearchMode::Exhaustive) {
    std::filesystem::create_directories(req.checkpoint_dir);
    ckpt = (std::filesystem::path(req.checkpoint_dir) / (detail::class_stem(t.n, t.class_id) + ".ckpt")).string();
    if (req.force) detail::remove_checkpoints(ckpt);
    cfg.checkpoint_path = ckpt;
  }
  const bool resuming = !ckpt.empty() && detail::any_checkpoint(ckpt);
  const std::string lut_path = stem + ".lut";
  std::ofstream lut_file(lut_path, resuming ? std::ios::app : std::ios::trunc);
  if (!lut_file) throw std::runtime_error("cannot open " + lut_path);
  std::mutex mu;
  cfg.on_solution = [&](const Lut& f) {
    std::lock_guard<std::mutex> lock(mu);
    lut_file << format_lut_line(f) << '\n';
    lut_file.flush();
  };
  out.artifacts.push_back(lut_path);

  SearchReport rep;
  try {
    if (cfg.mode == SearchMode::Exhaustive && (req.jobs > 1 || cfg.split_depth > 0)) {
      rep = parallel_search(t, cfg, req.jobs);
    } else {
      rep = dfs_search(t, cfg);
    }
  } catch (const std::logic_error& e) {
    out.verification_failed = true;
    out.error = e.what();
    out.state = "verification-failed";
    log();
    return out;
  }
  lut_file.close();

  std::ifstream in(lut_path);
  auto all = read_luts(in, t.n);
  // Randomized restarts and resumed runs can repeat a table.
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& f : all) {
    if (!f.is_permutation() || !is_apn(f) || !verify_le_automorphism(f, t.A, t.B)) {
      out.verification_failed = true;
      out.error = "stored solution failed re-verification";
    }
  }
  out.count = all.size();
  out.groups = group_solutions(all);
  out.report = rep;

  if (out.verification_failed) {
    out.state = "verification-failed";
  } else if (rep.exhausted) {
    out.state = "exhausted";
  } else if (!ckpt.empty() && rep.stop_reason != StopReason::SolutionLimit) {
    out.state = "running-checkpointed";
  } else {
    out.state = "budget-expired";
  }

  nlohmann::ordered_json rj;
  rj["schema"] = kOutputSchema;
  rj["tuple"] = to_json(t);
  rj["config"] = cfg_json;
  rj["state"] = out.state;
  rj["report"] = to_json(rep);
  rj["distinct_solutions"] = out.count;
  rj["groups"] = groups_to_json(out.groups)["groups"];
  const std::string report_path = stem + ".report.json";
  std::ofstream(report_path) << rj.dump(2) << '\n';
  out.artifacts.push_back(report_path);
  if (!ckpt.empty()) out.artifacts.push_back(ckpt);
  log();
  return out;
}

/// Exit code for a batch: verification failure beats budget expiry beats
/// completion.
inline int exit_code_for(const std::vector<ClassOutcome>& outs) {
  int code = kExitCompleted;
  for (const auto& o : outs) {
    if (o.verification_failed) return kExitVerificationFailure;
    if (o.state == "budget-expired" || o.state == "running-checkpointed") code = kExitBudgetExpired;
  }
  return code;
}

inline std::vector<ClassOutcome> run_search(const SearchRequest& req) {
  require_dimension(req.n);
  const auto classes = enumerate_classes(req.n);
  std::vector<AutoTuple> selected;
  if (req.class_ids.empty()) {
    selected = classes;
  } else {
    for (int id : req.class_ids) {
      if (id < 1 || static_cast<std::size_t>(id) > classes.size()) {
        throw InputError("class " + std::to_string(id) + " does not exist for n=" + std::to_string(req.n) + " (1.." + std::to_string(classes.size()) + ")");
      }
      selected.push_back(classes[static_cast<std::size_t>(id - 1)]);
    }
  }
  const Manifest manifest((std::filesystem::path(req.out_dir) / "manifest.jsonl").string());
  std::filesystem::create_directories(req.out_dir);
  std::vector<ClassOutcome> outs;
  for (const auto& t : selected) {
    outs.push_back(run_class(req, t, manifest));
    if (req.config.stop_flag && req.config.stop_flag->load()) break;
  }
  return outs;
}

struct VerifyReport {
  bool permutation = false;
  std::optional<ApnWitness> apn_violation;
  bool automorphism_checked = false;
  bool automorphism = false;
  std::string fingerprint_digest;

  bool ok() const { return permutation && !apn_violation && (!automorphism_checked || automorphism); }
};

inline VerifyReport verify_function(const Lut& f, const std::optional<std::pair<Gf2Matrix, Gf2Matrix>>& ab) {
  VerifyReport r;
  r.permutation = f.is_permutation();
  r.apn_violation = apn_violation(f);
  if (ab) {
    if (ab->first.dim() != f.n || ab->second.dim() != f.n) throw InputError("A and B must be n x n");
    r.automorphism_checked = true;
    r.automorphism = verify_le_automorphism(f, ab->first, ab->second);
  }
  r.fingerprint_digest = fingerprint(f).digest();
  return r;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["permutation"] = r.permutation;
  j["apn"] = !r.apn_violation.has_value();
  if (r.apn_violation) {
    j["apn_witness"] = {{"alpha", r.apn_violation->alpha}, {"beta", r.apn_violation->beta}, {"count", r.apn_violation->count}};
  }
  j["self_equivalence"] = r.automorphism_checked ? nlohmann::ordered_json(r.automorphism) : nlohmann::ordered_json(nullptr);
  j["fingerprint_digest"] = r.fingerprint_digest;
  j["ok"] = r.ok();
  return j;
}

}  // namespace apnle
