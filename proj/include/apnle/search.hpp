#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "apnle/checkpoint.hpp"
#include "apnle/classify.hpp"
#include "apnle/field.hpp"
#include "apnle/fixtures.hpp"
#include "apnle/linalg.hpp"
#include "apnle/lut.hpp"

namespace apnle {

/// Lookup table under construction. Undefined entries hold undef() = 2^n.
class PartialLut {
 public:
  PartialLut() = default;
  explicit PartialLut(int n) : n_(n), table_(std::size_t{1} << n, static_cast<std::uint16_t>(1U << n)), used_(std::size_t{1} << n, 0) {
    if (n < 1 || n > 12) throw std::invalid_argument("PartialLut: n must be in 1..12");
  }

  int n() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  std::uint32_t undef() const { return size(); }
  std::uint32_t operator[](std::uint32_t x) const { return table_[x]; }
  bool defined(std::uint32_t x) const { return table_[x] != undef(); }
  bool used(std::uint32_t y) const { return used_[y] != 0; }
  std::uint32_t defined_count() const { return count_; }
  bool complete() const { return count_ == size(); }

  void set(std::uint32_t x, std::uint32_t y) {
    if (defined(x)) throw std::logic_error("PartialLut::set: position already defined");
    if (used(y)) throw std::logic_error("PartialLut::set: value already used");
    table_[x] = static_cast<std::uint16_t>(y);
    used_[y] = 1;
    ++count_;
  }
  void clear(std::uint32_t x) {
    used_[table_[x]] = 0;
    table_[x] = static_cast<std::uint16_t>(undef());
    --count_;
  }

  Lut to_lut() const {
    if (!complete()) throw std::logic_error("PartialLut::to_lut: table incomplete");
    return Lut(n_, std::vector<std::uint32_t>(table_.begin(), table_.end()));
  }

  friend bool operator==(const PartialLut&, const PartialLut&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint8_t> used_;
  std::uint32_t count_ = 0;
};

/// Partial DDT restricted to rows of even Hamming weight. A counter moves in
/// steps of 2 (one unordered pair {c, c + alpha}); a branch dies once one
/// reaches 4, so 8 bits suffice.
class DdtAccumulator {
 public:
  DdtAccumulator() = default;
  explicit DdtAccumulator(int n) : n_(n), counts_(std::size_t{1} << (2 * n), 0) {
    for (std::uint32_t a = 1; a < (1U << n); ++a) {
      if (std::popcount(a) % 2 == 0) evens_.push_back(a);
    }
  }

  /// Adds the pairs formed by the freshly assigned position c. Returns false
  /// as soon as a counter exceeds 2; the matching remove() undoes exactly
  /// the increments made so far.
  bool add(const PartialLut& s, std::uint32_t c) {
    const std::uint32_t y = s[c];
    const std::uint32_t undef = s.undef();
    for (auto a : evens_) {
      const std::uint32_t z = s[c ^ a];
      if (z == undef) continue;
      std::uint8_t& v = counts_[(std::size_t{a} << n_) | (y ^ z)];
      v = static_cast<std::uint8_t>(v + 2);
      if (v > 2) return false;
    }
    return true;
  }

  /// Same traversal as add(); stops where a failed add stopped, recognised by
  /// the decremented counter still being 2.
  void remove(const PartialLut& s, std::uint32_t c) {
    const std::uint32_t y = s[c];
    const std::uint32_t undef = s.undef();
    for (auto a : evens_) {
      const std::uint32_t z = s[c ^ a];
      if (z == undef) continue;
      std::uint8_t& v = counts_[(std::size_t{a} << n_) | (y ^ z)];
      v = static_cast<std::uint8_t>(v - 2);
      if (v == 2) return;
    }
  }

  std::uint8_t at(std::uint32_t alpha, std::uint32_t beta) const { return counts_[(std::size_t{alpha} << n_) | beta]; }
  const std::vector<std::uint8_t>& counts() const { return counts_; }

  /// Even-row partial DDT of s computed directly.
  static std::vector<std::uint8_t> from_scratch(const PartialLut& s) {
    const int n = s.n();
    std::vector<std::uint8_t> out(std::size_t{1} << (2 * n), 0);
    for (std::uint32_t a = 1; a < s.size(); ++a) {
      if (std::popcount(a) % 2 != 0) continue;
      for (std::uint32_t x = 0; x < s.size(); ++x) {
        if (s.defined(x) && s.defined(x ^ a)) ++out[(std::size_t{a} << n) | (s[x] ^ s[x ^ a])];
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> counts_;
  std::vector<std::uint32_t> evens_;
};

enum class SearchMode { Exhaustive, Randomized };

enum class StopReason { Completed, SolutionLimit, NodeBudget, TimeBudget, Interrupted };

inline std::string stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Completed: return "completed";
    case StopReason::SolutionLimit: return "solution-limit";
    case StopReason::NodeBudget: return "node-budget";
    case StopReason::TimeBudget: return "time-budget";
    case StopReason::Interrupted: return "interrupted";
  }
  return "?";
}

struct SearchConfig {
  SearchMode mode = SearchMode::Exhaustive;
  /// is_smallest runs after assigning an orbit at depth <= t; -1 disables it.
  int threshold_t = 2;
  /// Wall-clock limit in seconds; infinite by default. Required for
  /// randomized mode.
  double time_budget = std::numeric_limits<double>::infinity();
  /// Total node limit, 0 = none.
  std::uint64_t node_budget = 0;
  std::uint64_t rng_seed = 1;
  /// Size of the commutant subsets C_A, C_B handed to is_smallest; 0 keeps
  /// only the identity.
  std::size_t commutant_budget = 64;
  bool seed_fixed_points = false;
  /// APN permutation put on the fixed spaces; defaults to x^3 over F_{2^k}.
  std::optional<Lut> seed_function;
  /// Orbit depth at which parallel runs split into jobs.
  int split_depth = 0;
  /// Stop after this many solutions, 0 = none.
  std::size_t max_solutions = 0;
  /// Randomized mode: nodes per restart before reshuffling.
  std::uint64_t restart_nodes = std::uint64_t{1} << 20;
  /// Exhaustive mode: checkpoint file, empty = none.
  std::string checkpoint_path;
  std::uint64_t checkpoint_interval = 10'000'000;
  /// Polled at every node; a set flag stops the run with a checkpoint.
  const std::atomic<bool>* stop_flag = nullptr;
  /// Called for every emitted solution (serialized in parallel runs).
  std::function<void(const Lut&)> on_solution;
  /// Test hook: sees the table at every node entry.
  std::function<void(const PartialLut&)> on_node;
};

struct SearchReport {
  std::vector<Lut> solutions;
  std::uint64_t nodes_visited = 0;
  int max_depth_reached = 0;
  double elapsed = 0;
  bool exhausted = false;
  StopReason stop_reason = StopReason::Completed;
  std::uint64_t restarts = 0;
  std::size_t jobs = 1;
  /// FNV-1a over every (depth, x, y) orbit assignment attempt, in order.
  std::uint64_t trace_digest = 0;
};

/// A DFS prefix: the (x, y) orbit choices for the first depths.
struct SearchJob {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> orbits;
};

/// Point-order and commutant tables for one tuple, shared read-only
/// between engines.
struct SearchContext {
  AutoTuple tuple;
  int n = 0;
  std::uint32_t size = 0;
  std::vector<std::uint32_t> apply_a;
  std::vector<std::uint32_t> apply_b;
  std::vector<std::uint32_t> inv_a;
  std::vector<std::uint32_t> ord_a;
  std::vector<std::uint32_t> ord_b;
  /// Ascending y with ord_B(y) = k, indexed by k.
  std::vector<std::vector<std::uint32_t>> candidates;
  /// Commutant elements as lookup tables; identity first.
  std::vector<std::vector<std::uint16_t>> comm_a;
  std::vector<std::vector<std::uint16_t>> comm_b;
  PartialLut seed;
  std::uint64_t config_hash = 0;
};

namespace detail {

inline std::vector<std::uint32_t> orbit_sizes(const std::vector<std::uint32_t>& apply) {
  std::vector<std::uint32_t> ord(apply.size(), 0);
  for (std::uint32_t x = 0; x < apply.size(); ++x) {
    if (ord[x] != 0) continue;
    std::uint32_t k = 1;
    for (std::uint32_t y = apply[x]; y != x; y = apply[y]) ++k;
    ord[x] = k;
    for (std::uint32_t y = apply[x]; y != x; y = apply[y]) ord[y] = k;
  }
  return ord;
}

inline std::vector<std::uint32_t> apply_table(const Gf2Matrix& m) {
  std::vector<std::uint32_t> t(std::size_t{1} << m.dim());
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = m.apply(x);
  return t;
}

inline void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFF;
    h *= 0x100000001b3ULL;
  }
}

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

inline bool fixes_subspace(const Gf2Matrix& c, const FixedSpace& fs) {
  for (auto v : fs.basis) {
    if (c.apply(v) != v) return false;
  }
  return true;
}

}  // namespace detail

/// x -> x^3 on F_{2^k}, the default fixed-space seed.
inline Lut default_seed_function(int k) { return monomial_lut(FiniteField(k), 3); }

/// F(x) = pi_B(g(pi_A^-1(x))) on Ord(A, 1), where pi_A, pi_B send the
/// standard basis of F_2^k to the fixed-space bases. Everything else UNDEF.
inline PartialLut seed_fixed_points(const AutoTuple& t, const Lut& g) {
  const auto fa = fixed_space(t.A, 1);
  const auto fb = fixed_space(t.B, 1);
  if (fa.dim != fb.dim) throw std::invalid_argument("seed_fixed_points: fixed spaces differ in dimension");
  const int k = fa.dim;
  PartialLut s(t.n);
  if (k == 0) {
    s.set(0, 0);
    return s;
  }
  if (k == 1 || k == 2 || k == 4) throw std::invalid_argument("seed_fixed_points: no usable APN permutation on " + std::to_string(k) + " bits");
  if (g.n != k) throw std::invalid_argument("seed_fixed_points: seed function has the wrong dimension");
  if (!g.is_permutation() || !is_apn(g) || g(0) != 0) throw std::invalid_argument("seed_fixed_points: seed must be an APN permutation with g(0) = 0");
  if (!is_extendable(t.A) || !is_extendable(t.B)) throw std::invalid_argument("seed_fixed_points: A or B is not extendable");
  auto span = [](const FixedSpace& fs, std::uint32_t u) {
    std::uint32_t v = 0;
    for (int i = 0; i < fs.dim; ++i) {
      if ((u >> i) & 1U) v ^= fs.basis[i];
    }
    return v;
  };
  for (std::uint32_t u = 0; u < (1U << k); ++u) s.set(span(fa, u), span(fb, g(u)));
  return s;
}

inline std::shared_ptr<const SearchContext> make_search_context(const AutoTuple& t, const SearchConfig& cfg) {
  if (t.n < 1 || t.n > 12) throw std::invalid_argument("search: n must be in 1..12");
  if (order(t.A) != order(t.B)) throw std::invalid_argument("search: order(A) != order(B)");
  if (cfg.mode == SearchMode::Randomized && !std::isfinite(cfg.time_budget) && cfg.node_budget == 0) {
    throw std::invalid_argument("search: randomized mode needs a finite budget");
  }
  if (cfg.threshold_t < -1) throw std::invalid_argument("search: threshold_t must be >= -1");
  auto ctx = std::make_shared<SearchContext>();
  ctx->tuple = t;
  ctx->n = t.n;
  ctx->size = 1U << t.n;
  ctx->apply_a = detail::apply_table(t.A);
  ctx->apply_b = detail::apply_table(t.B);
  ctx->inv_a = detail::apply_table(t.A.inverse());
  ctx->ord_a = detail::orbit_sizes(ctx->apply_a);
  ctx->ord_b = detail::orbit_sizes(ctx->apply_b);
  ctx->candidates.assign(ctx->size + 1, {});
  for (std::uint32_t y = 0; y < ctx->size; ++y) ctx->candidates[ctx->ord_b[y]].push_back(y);

  std::optional<FixedSpace> fa;
  std::optional<FixedSpace> fb;
  if (cfg.seed_fixed_points) {
    const int k = fixed_space(t.A, 1).dim;
    const Lut g = cfg.seed_function ? *cfg.seed_function : (k >= 3 ? default_seed_function(k) : Lut::identity(std::max(k, 1)));
    ctx->seed = seed_fixed_points(t, g);
    fa = fixed_space(t.A, 1);
    fb = fixed_space(t.B, 1);
  } else {
    ctx->seed = PartialLut(t.n);
    ctx->seed.set(0, 0);
  }

  auto tables = [&](const Gf2Matrix& m, const std::optional<FixedSpace>& fs, std::uint64_t seed) {
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<std::uint16_t> id(ctx->size);
    for (std::uint32_t x = 0; x < ctx->size; ++x) id[x] = static_cast<std::uint16_t>(x);
    out.push_back(id);
    if (cfg.commutant_budget == 0) return out;
    for (const auto& c : commutant(m, cfg.commutant_budget, seed).elements) {
      if (c.is_identity()) continue;
      if (fs && !detail::fixes_subspace(c, *fs)) continue;
      std::vector<std::uint16_t> lut(ctx->size);
      for (std::uint32_t x = 0; x < ctx->size; ++x) lut[x] = static_cast<std::uint16_t>(c.apply(x));
      out.push_back(std::move(lut));
      if (out.size() >= cfg.commutant_budget) break;
    }
    return out;
  };
  ctx->comm_a = tables(t.A, fa, cfg.rng_seed);
  ctx->comm_b = tables(t.B, fb, cfg.rng_seed + 1);

  std::uint64_t h = detail::kFnvOffset;
  detail::fnv_mix(h, static_cast<std::uint64_t>(cfg.mode));
  detail::fnv_mix(h, static_cast<std::uint64_t>(cfg.threshold_t + 1));
  detail::fnv_mix(h, cfg.commutant_budget);
  detail::fnv_mix(h, cfg.rng_seed);
  for (std::uint32_t x = 0; x < ctx->size; ++x) detail::fnv_mix(h, ctx->seed[x]);
  ctx->config_hash = h;
  return ctx;
}

/// False iff some transform c_B o S o c_A is lexicographically smaller than
/// S on the prefix where both are defined. Positions are compared from 1
/// upward; an undefined entry on either side ends the comparison for that
/// transform, so a table that extends to the least class member is never
/// rejected.
inline bool is_smallest(const PartialLut& s, const std::vector<std::vector<std::uint16_t>>& comm_a,
                        const std::vector<std::vector<std::uint16_t>>& comm_b) {
  const std::uint32_t undef = s.undef();
  for (std::size_t i = 0; i < comm_a.size(); ++i) {
    const auto& ca = comm_a[i];
    for (std::size_t j = 0; j < comm_b.size(); ++j) {
      if (i == 0 && j == 0) continue;
      const auto& cb = comm_b[j];
      for (std::uint32_t x = 1; x < s.size(); ++x) {
        const std::uint32_t cur = s[x];
        const std::uint32_t inner = s[ca[x]];
        if (cur == undef || inner == undef) break;
        const std::uint32_t g = cb[inner];
        if (g < cur) return false;
        if (g > cur) break;
      }
    }
  }
  return true;
}

/// Single-threaded DFS over orbit assignments (F(A^j x) = B^j y).
class SearchEngine {
 public:
  SearchEngine(std::shared_ptr<const SearchContext> ctx, SearchConfig cfg)
      : ctx_(std::move(ctx)), cfg_(std::move(cfg)), s_(ctx_->n), acc_(ctx_->n) {
    // Replay the seed one entry at a time so every pair is counted once.
    for (std::uint32_t x = 0; x < ctx_->size; ++x) {
      if (!ctx_->seed.defined(x)) continue;
      s_.set(x, ctx_->seed[x]);
      if (!acc_.add(s_, x)) throw std::invalid_argument("search: seed is not APN-feasible");
    }
    orders_.resize(ctx_->size);
  }

  /// Restrict the first depths to the given orbit choices.
  void set_prefix(SearchJob job) { forced_ = std::move(job); }
  /// Record prefixes at this depth instead of descending.
  void set_collect_depth(int d) { collect_depth_ = d; }
  const std::vector<SearchJob>& collected() const { return collected_; }

  /// Resume from a checkpoint path (candidate indices per depth).
  void set_resume(const Checkpoint& c) {
    if (c.config_hash != ctx_->config_hash) throw std::runtime_error("checkpoint: configuration differs from the saved run");
    for (const auto& f : c.path) resume_.push_back(f.cand_index);
    resume_active_ = !resume_.empty();
    nodes_ = c.nodes;
    prior_solutions_ = c.solutions;
  }

  SearchReport run() {
    start_ = std::chrono::steady_clock::now();
    SearchReport rep;
    trace_ = detail::kFnvOffset;
    if (cfg_.time_budget <= 0) {
      rep.stop_reason = StopReason::TimeBudget;
      rep.trace_digest = trace_;
      return rep;
    }
    if (cfg_.mode == SearchMode::Randomized) {
      std::mt19937_64 rng(cfg_.rng_seed);
      while (!stop_) {
        shuffle_orders(rng);
        restart_start_ = nodes_;
        restart_cut_ = false;
        next_val(0, 0);
        ++restarts_;
        if (!restart_cut_ && !stop_) {
          // The whole tree was closed without hitting the restart budget.
          exhausted_tree_ = true;
          break;
        }
      }
    } else {
      next_val(0, 0);
      if (!stop_) exhausted_tree_ = true;
      // A stopped run already saved its position on the way out.
      if (exhausted_tree_ && !cfg_.checkpoint_path.empty() && collect_depth_ < 0) write_checkpoint_now(true);
    }
    rep.solutions = std::move(solutions_);
    rep.nodes_visited = nodes_;
    rep.max_depth_reached = max_depth_;
    rep.elapsed = seconds();
    rep.exhausted = exhausted_tree_ && cfg_.mode == SearchMode::Exhaustive;
    rep.stop_reason = exhausted_tree_ ? StopReason::Completed : stop_reason_;
    rep.restarts = restarts_;
    rep.trace_digest = trace_;
    return rep;
  }

  const PartialLut& table() const { return s_; }
  const DdtAccumulator& accumulator() const { return acc_; }

 private:
  struct Frame {
    std::uint32_t x;
    std::uint32_t y;
    std::uint32_t cand_index;
  };

  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  void shuffle_orders(std::mt19937_64& rng) {
    for (std::uint32_t x = 0; x < ctx_->size; ++x) {
      orders_[x] = ctx_->candidates[ctx_->ord_a[x]];
      std::shuffle(orders_[x].begin(), orders_[x].end(), rng);
    }
  }

  const std::vector<std::uint32_t>& order_for(std::uint32_t x) const {
    return cfg_.mode == SearchMode::Randomized ? orders_[x] : ctx_->candidates[ctx_->ord_a[x]];
  }

  bool check_stop() {
    if (cfg_.stop_flag && cfg_.stop_flag->load(std::memory_order_relaxed)) {
      stop_reason_ = StopReason::Interrupted;
      return true;
    }
    if (cfg_.node_budget != 0 && nodes_ >= cfg_.node_budget) {
      stop_reason_ = StopReason::NodeBudget;
      return true;
    }
    if ((nodes_ & 0xFFF) == 0 && std::isfinite(cfg_.time_budget) && seconds() >= cfg_.time_budget) {
      stop_reason_ = StopReason::TimeBudget;
      return true;
    }
    return false;
  }

  void write_checkpoint_now(bool finished) {
    Checkpoint c;
    c.n = static_cast<std::uint32_t>(ctx_->n);
    c.p = ctx_->tuple.p;
    c.b_rows.assign(ctx_->tuple.B.rows().begin(), ctx_->tuple.B.rows().end());
    c.a_rows.assign(ctx_->tuple.A.rows().begin(), ctx_->tuple.A.rows().end());
    c.config_hash = ctx_->config_hash;
    c.nodes = nodes_;
    c.solutions = prior_solutions_ + solutions_.size();
    c.finished = finished;
    if (!finished) {
      for (const auto& f : path_) c.path.push_back({f.x, f.cand_index});
    }
    write_checkpoint(cfg_.checkpoint_path, c);
  }

  bool assign_orbit(std::uint32_t x, std::uint32_t y, std::uint32_t k) {
    std::uint32_t xs = x;
    std::uint32_t ys = y;
    for (std::uint32_t j = 0; j < k; ++j) {
      s_.set(xs, ys);
      if (!acc_.add(s_, xs)) {
        acc_.remove(s_, xs);
        s_.clear(xs);
        // Unwind the j positions set before this one, latest first.
        for (std::uint32_t i = 0; i < j; ++i) {
          xs = ctx_->inv_a[xs];
          acc_.remove(s_, xs);
          s_.clear(xs);
        }
        return false;
      }
      xs = ctx_->apply_a[xs];
      ys = ctx_->apply_b[ys];
    }
    return true;
  }

  void unassign_orbit(std::uint32_t x, std::uint32_t k) {
    std::uint32_t xs = ctx_->inv_a[x];
    for (std::uint32_t j = 0; j < k; ++j) {
      acc_.remove(s_, xs);
      s_.clear(xs);
      xs = ctx_->inv_a[xs];
    }
  }

  void emit() {
    Lut f = s_.to_lut();
    if (!f.is_permutation() || !is_apn(f) || !verify_le_automorphism(f, ctx_->tuple.A, ctx_->tuple.B)) {
      throw std::logic_error("search: emitted table failed re-verification");
    }
    if (cfg_.mode == SearchMode::Randomized) {
      if (!seen_.insert(f).second) return;
    }
    if (cfg_.on_solution) cfg_.on_solution(f);
    solutions_.push_back(std::move(f));
    if (cfg_.max_solutions != 0 && solutions_.size() >= cfg_.max_solutions) {
      stop_ = true;
      stop_reason_ = StopReason::SolutionLimit;
      if (!cfg_.checkpoint_path.empty() && cfg_.mode == SearchMode::Exhaustive && collect_depth_ < 0 && !path_.empty()) {
        // Resume with the next candidate so this leaf is not emitted twice.
        ++path_.back().cand_index;
        write_checkpoint_now(false);
        --path_.back().cand_index;
      }
    }
  }

  /// Returns false when the run must unwind (stop or restart).
  bool next_val(int depth, std::uint32_t from) {
    ++nodes_;
    max_depth_ = std::max(max_depth_, depth);
    if (cfg_.on_node) cfg_.on_node(s_);
    if (!resume_active_ && check_stop()) {
      stop_ = true;
      if (!cfg_.checkpoint_path.empty() && collect_depth_ < 0) write_checkpoint_now(false);
      return false;
    }
    if (cfg_.mode == SearchMode::Randomized && nodes_ - restart_start_ >= cfg_.restart_nodes) {
      restart_cut_ = true;
      return false;
    }
    if (!resume_active_ && !cfg_.checkpoint_path.empty() && cfg_.checkpoint_interval != 0 && nodes_ % cfg_.checkpoint_interval == 0) {
      write_checkpoint_now(false);
    }
    if (s_.complete()) {
      if (collect_depth_ >= 0) {
        record_prefix();
        return true;
      }
      emit();
      return !stop_;
    }
    if (depth == collect_depth_) {
      record_prefix();
      return true;
    }
    std::uint32_t x = from;
    while (s_.defined(x)) ++x;
    const std::uint32_t k = ctx_->ord_a[x];
    const auto& cands = order_for(x);

    std::size_t start = 0;
    bool resuming = false;
    if (resume_active_) {
      if (static_cast<std::size_t>(depth) < resume_.size()) {
        start = resume_[static_cast<std::size_t>(depth)];
        resuming = true;
      } else {
        resume_active_ = false;
      }
    }
    const bool forced = static_cast<std::size_t>(depth) < forced_.orbits.size();
    if (forced && forced_.orbits[static_cast<std::size_t>(depth)].first != x) throw std::logic_error("search: job prefix does not match the traversal");

    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      if (!resuming) resume_active_ = false;
      resuming = false;
      const std::uint32_t y = cands[idx];
      if (s_.used(y)) continue;
      if (forced && forced_.orbits[static_cast<std::size_t>(depth)].second != y) continue;
      detail::fnv_mix(trace_, (static_cast<std::uint64_t>(depth) << 40) | (static_cast<std::uint64_t>(x) << 20) | y);
      if (!assign_orbit(x, y, k)) continue;
      path_.push_back({x, y, static_cast<std::uint32_t>(idx)});
      bool go = true;
      if (depth <= cfg_.threshold_t) go = is_smallest(s_, ctx_->comm_a, ctx_->comm_b);
      bool keep_going = true;
      if (go) keep_going = next_val(depth + 1, x + 1);
      path_.pop_back();
      unassign_orbit(x, k);
      if (!keep_going) return false;
    }
    return true;
  }

  void record_prefix() {
    SearchJob job;
    for (const auto& f : path_) job.orbits.emplace_back(f.x, f.y);
    collected_.push_back(std::move(job));
  }

  std::shared_ptr<const SearchContext> ctx_;
  SearchConfig cfg_;
  PartialLut s_;
  DdtAccumulator acc_;
  std::vector<std::vector<std::uint32_t>> orders_;
  std::vector<Frame> path_;
  std::vector<Lut> solutions_;
  std::set<Lut> seen_;
  SearchJob forced_;
  int collect_depth_ = -1;
  std::vector<SearchJob> collected_;
  std::vector<std::uint32_t> resume_;
  bool resume_active_ = false;
  std::uint64_t prior_solutions_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t restart_start_ = 0;
  std::uint64_t restarts_ = 0;
  bool restart_cut_ = false;
  int max_depth_ = 0;
  bool stop_ = false;
  bool exhausted_tree_ = false;
  StopReason stop_reason_ = StopReason::Completed;
  std::uint64_t trace_ = detail::kFnvOffset;
  std::chrono::steady_clock::time_point start_;
};

/// Algorithm entry point: exhaustive or randomized DFS on one tuple.
inline SearchReport dfs_search(const AutoTuple& t, const SearchConfig& cfg) {
  SearchEngine engine(make_search_context(t, cfg), cfg);
  if (!cfg.checkpoint_path.empty() && cfg.mode == SearchMode::Exhaustive) {
    if (auto c = read_checkpoint(cfg.checkpoint_path)) {
      if (c->finished) {
        SearchReport rep;
        rep.exhausted = true;
        rep.nodes_visited = c->nodes;
        return rep;
      }
      engine.set_resume(*c);
    }
  }
  return engine.run();
}

inline SearchReport random_search(const AutoTuple& t, SearchConfig cfg) {
  cfg.mode = SearchMode::Randomized;
  cfg.threshold_t = -1;
  return dfs_search(t, cfg);
}

/// All APN-feasible prefixes of `depth` orbits (fewer if the table closes
/// earlier), with the same is_smallest pruning as the full run.
inline std::vector<SearchJob> split_work(const AutoTuple& t, SearchConfig cfg, int depth) {
  if (cfg.mode != SearchMode::Exhaustive) throw std::invalid_argument("split_work: exhaustive mode only");
  if (depth <= 0) return {SearchJob{}};
  cfg.checkpoint_path.clear();
  cfg.node_budget = 0;
  cfg.time_budget = std::numeric_limits<double>::infinity();
  SearchEngine engine(make_search_context(t, cfg), cfg);
  engine.set_collect_depth(depth);
  engine.run();
  return engine.collected();
}

/// split_work followed by the jobs on `threads` workers. Solutions come back
/// sorted. With a checkpoint path, job i checkpoints to "<path>.job<i>".
inline SearchReport parallel_search(const AutoTuple& t, const SearchConfig& cfg, unsigned threads) {
  if (cfg.mode != SearchMode::Exhaustive) throw std::invalid_argument("parallel_search: exhaustive mode only");
  const auto start = std::chrono::steady_clock::now();
  auto ctx = make_search_context(t, cfg);
  const auto jobs = split_work(t, cfg, cfg.split_depth);
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> solution_limit{false};
  std::vector<std::uint64_t> digests(jobs.size(), 0);
  SearchReport total;
  total.jobs = jobs.size();
  bool all_done = true;
  StopReason reason = StopReason::Completed;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || solution_limit.load()) return;
      SearchConfig jc = cfg;
      if (!cfg.checkpoint_path.empty()) jc.checkpoint_path = cfg.checkpoint_path + ".job" + std::to_string(i);
      if (cfg.on_solution) {
        jc.on_solution = [&](const Lut& f) {
          std::lock_guard<std::mutex> lock(mu);
          cfg.on_solution(f);
        };
      }
      jc.max_solutions = 0;
      SearchEngine engine(ctx, jc);
      engine.set_prefix(jobs[i]);
      std::optional<SearchReport> rep;
      if (!jc.checkpoint_path.empty()) {
        if (auto c = read_checkpoint(jc.checkpoint_path)) {
          if (c->finished) {
            rep = SearchReport{};
            rep->exhausted = true;
            rep->nodes_visited = c->nodes;
          } else {
            engine.set_resume(*c);
          }
        }
      }
      if (!rep) rep = engine.run();
      std::lock_guard<std::mutex> lock(mu);
      total.nodes_visited += rep->nodes_visited;
      total.max_depth_reached = std::max(total.max_depth_reached, rep->max_depth_reached);
      digests[i] = rep->trace_digest;
      for (auto& s : rep->solutions) total.solutions.push_back(std::move(s));
      if (!rep->exhausted) {
        all_done = false;
        reason = rep->stop_reason;
      }
      if (cfg.max_solutions != 0 && total.solutions.size() >= cfg.max_solutions) {
        solution_limit = true;
        reason = StopReason::SolutionLimit;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::max(1U, threads); ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::sort(total.solutions.begin(), total.solutions.end());
  total.trace_digest = detail::kFnvOffset;
  for (auto d : digests) detail::fnv_mix(total.trace_digest, d);
  total.exhausted = all_done && !solution_limit;
  total.stop_reason = total.exhausted ? StopReason::Completed : reason;
  total.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace apnle
