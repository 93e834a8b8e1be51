#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apnle/apnle.hpp"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw apnle::InputError("cannot write " + path);
  f << text;
}

std::vector<apnle::Lut> load_luts(const std::string& path) {
  if (path == "-") return apnle::read_luts(std::cin);
  std::ifstream f(path);
  if (!f) throw apnle::InputError("cannot open " + path);
  auto out = apnle::read_luts(f);
  if (out.empty()) throw apnle::InputError(path + ": no functions");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for APN permutations with a linear self-equivalence F o A = B o F."};
  app.require_subcommand(1);

  int n = 0;
  std::string out_path;

  auto* classify = app.add_subcommand("classify", "Enumerate tuple classes (B, A) of prime order");
  classify->add_option("--n", n, "Dimension")->required();
  bool all_pairs = false;
  classify->add_flag("--all-pairs", all_pairs, "Include pairs with different fixed-space dimensions");
  classify->add_option("--out", out_path, "Output file (default stdout)");

  auto* prune = app.add_subcommand("prune", "Admissibility verdicts per class");
  prune->add_option("--n", n, "Dimension")->required();
  bool table1 = false;
  prune->add_flag("--table1", table1, "Render verdicts beside the reference column");
  prune->add_option("--out", out_path, "Verdicts JSON file (default stdout)");

  auto* search = app.add_subcommand("search", "Search one or more classes");
  search->add_option("--n", n, "Dimension")->required();
  std::vector<std::string> class_args;
  search->add_option("--class", class_args, "Class id, repeatable; '*' for all")->required();
  std::string mode = "exhaustive";
  search->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  double budget = -1;
  search->add_option("--budget", budget, "Wall-clock budget in seconds per class");
  std::uint64_t node_budget = 0;
  search->add_option("--nodes", node_budget, "Node budget per class (0 = none)");
  unsigned jobs = 1;
  search->add_option("--jobs", jobs, "Worker threads");
  int split_depth = -1;
  search->add_option("--split-depth", split_depth, "Orbit depth for job splitting (default 2 with --jobs > 1)");
  std::uint64_t seed = 1;
  search->add_option("--seed", seed, "RNG seed");
  int threshold = 2;
  search->add_option("--threshold", threshold, "Depth limit for the canonical-form check (-1 disables)");
  std::size_t commutant_budget = 64;
  search->add_option("--commutant-budget", commutant_budget, "Commutant subset size (0 = identity only)");
  bool seed_fixed = false;
  search->add_flag("--seed-fixed-points", seed_fixed, "Pre-fill the fixed space with x^3");
  std::size_t max_solutions = 0;
  search->add_option("--max-solutions", max_solutions, "Stop after this many solutions (0 = none)");
  std::uint64_t restart_nodes = std::uint64_t{1} << 20;
  search->add_option("--restart-nodes", restart_nodes, "Random mode: nodes per restart");
  std::string out_dir = "apnle-out";
  search->add_option("--out-dir", out_dir, "Directory for solutions, reports and manifest.jsonl");
  std::string ckpt_dir;
  search->add_option("--checkpoint-dir", ckpt_dir, "Checkpoint directory")->envname("APNLE_CHECKPOINT_DIR");
  bool force = false;
  search->add_flag("--force", force, "Search pruned classes and redo completed ones");
  bool print = false;
  search->add_flag("--print", print, "Also print solution LUTs to stdout");

  auto* verify = app.add_subcommand("verify", "Check permutation, APN and self-equivalence");
  std::string lut_path;
  verify->add_option("--lut", lut_path, "LUT file ('-' for stdin)")->required();
  std::string a_rows;
  std::string b_rows;
  verify->add_option("--A", a_rows, "A as comma-separated hex rows");
  verify->add_option("--B", b_rows, "B as comma-separated hex rows");
  int verify_class = 0;
  verify->add_option("--class", verify_class, "Take (B, A) from this class of dimension n");

  auto* fp = app.add_subcommand("fingerprint", "CCZ-invariant fingerprints");
  fp->add_option("--lut", lut_path, "LUT file ('-' for stdin)")->required();
  fp->add_option("--out", out_path, "Output file (default stdout)");

  auto* report = app.add_subcommand("report", "Group solutions by fingerprint against known functions");
  std::vector<std::string> lut_paths;
  report->add_option("--lut", lut_paths, "LUT files")->required();
  report->add_option("--out", out_path, "groups.json path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : apnle::kExitInputError;
  }

  try {
    if (*classify) {
      const auto scope = all_pairs ? apnle::ClassScope::AllPairs : apnle::ClassScope::Permutations;
      emit(apnle::classify_document(n, scope).dump(2) + "\n", out_path);
      return apnle::kExitCompleted;
    }
    if (*prune) {
      const auto rows = apnle::prune_rows(n);
      const auto doc = apnle::prune_document(n, rows);
      if (table1) {
        std::cout << apnle::render_table1(n, rows);
        if (!out_path.empty()) emit(doc.dump(2) + "\n", out_path);
      } else {
        emit(doc.dump(2) + "\n", out_path);
      }
      return doc["mismatches"].get<std::size_t>() == 0 ? apnle::kExitCompleted : apnle::kExitVerificationFailure;
    }
    if (*search) {
      apnle::require_dimension(n);
      std::signal(SIGTERM, on_signal);
      std::signal(SIGINT, on_signal);
      apnle::SearchRequest req;
      req.n = n;
      for (const auto& c : class_args) {
        if (c == "*") {
          req.class_ids.clear();
          break;
        }
        try {
          req.class_ids.push_back(std::stoi(c));
        } catch (const std::exception&) {
          throw apnle::InputError("bad class id '" + c + "'");
        }
      }
      auto& cfg = req.config;
      cfg.mode = mode == "random" ? apnle::SearchMode::Randomized : apnle::SearchMode::Exhaustive;
      cfg.threshold_t = cfg.mode == apnle::SearchMode::Randomized ? -1 : threshold;
      if (budget >= 0) {
        cfg.time_budget = budget;
      } else if (cfg.mode == apnle::SearchMode::Randomized) {
        throw apnle::InputError("random mode needs --budget");
      } else if (n >= 7) {
        cfg.time_budget = 24.0 * 3600.0;
      }
      cfg.node_budget = node_budget;
      cfg.rng_seed = seed;
      cfg.commutant_budget = commutant_budget;
      cfg.seed_fixed_points = seed_fixed;
      cfg.max_solutions = max_solutions;
      cfg.restart_nodes = restart_nodes;
      cfg.split_depth = split_depth >= 0 ? split_depth : (jobs > 1 ? 2 : 0);
      cfg.stop_flag = &g_stop;
      req.jobs = std::max(1U, jobs);
      req.force = force;
      req.out_dir = out_dir;
      req.checkpoint_dir = ckpt_dir;
      if (req.checkpoint_dir.empty() && cfg.mode == apnle::SearchMode::Exhaustive && n >= 7) req.checkpoint_dir = out_dir + "/checkpoints";
      const auto outs = apnle::run_search(req);
      for (const auto& o : outs) {
        std::cerr << "n=" << n << " class " << o.class_id << ": " << o.state << (o.skipped ? " (already recorded)" : "") << ", " << o.count
                  << " solution(s)";
        if (o.report) std::cerr << ", " << o.report->nodes_visited << " nodes, " << o.report->elapsed << " s";
        std::cerr << "\n";
        for (const auto& g : o.groups) {
          std::cerr << "  group " << g.digest << " x" << g.members.size() << " " << apnle::status_name(g.status);
          for (const auto& k : g.known_matches) std::cerr << " [" << k << "]";
          std::cerr << "\n";
        }
        if (!o.error.empty()) std::cerr << "  error: " << o.error << "\n";
        if (print && !o.skipped && !o.artifacts.empty()) {
          std::ifstream f(o.artifacts.front());
          std::cout << f.rdbuf();
        }
      }
      return apnle::exit_code_for(outs);
    }
    if (*verify) {
      const auto fs = load_luts(lut_path);
      std::optional<std::pair<apnle::Gf2Matrix, apnle::Gf2Matrix>> ab;
      if (!a_rows.empty() || !b_rows.empty()) {
        if (a_rows.empty() || b_rows.empty()) throw apnle::InputError("--A and --B go together");
        try {
          ab = std::make_pair(apnle::Gf2Matrix::parse_hex_rows(a_rows), apnle::Gf2Matrix::parse_hex_rows(b_rows));
        } catch (const std::invalid_argument& e) {
          throw apnle::InputError(e.what());
        }
      } else if (verify_class > 0) {
        const auto classes = apnle::enumerate_classes(fs.front().n);
        if (static_cast<std::size_t>(verify_class) > classes.size()) throw apnle::InputError("no such class");
        const auto& t = classes[static_cast<std::size_t>(verify_class - 1)];
        ab = std::make_pair(t.A, t.B);
      }
      bool ok = true;
      for (const auto& f : fs) {
        const auto r = apnle::verify_function(f, ab);
        ok = ok && r.ok();
        std::cout << apnle::to_json(r).dump() << "\n";
      }
      return ok ? apnle::kExitCompleted : apnle::kExitVerificationFailure;
    }
    if (*fp) {
      const auto fs = load_luts(lut_path);
      std::string text;
      for (const auto& f : fs) {
        auto j = apnle::fingerprint(f).to_json();
        j["digest"] = apnle::fingerprint(f).digest();
        text += j.dump() + "\n";
      }
      emit(text, out_path);
      return apnle::kExitCompleted;
    }
    if (*report) {
      std::vector<apnle::Lut> all;
      for (const auto& p : lut_paths) {
        auto fs = load_luts(p);
        all.insert(all.end(), fs.begin(), fs.end());
      }
      emit(apnle::groups_to_json(apnle::group_solutions(all)).dump(2) + "\n", out_path);
      return apnle::kExitCompleted;
    }
  } catch (const apnle::LutParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apnle::kExitInputError;
  } catch (const apnle::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apnle::kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apnle::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apnle::kExitVerificationFailure;
  }
  return apnle::kExitCompleted;
}
