#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include <unistd.h>

#include "apnle/fingerprint.hpp"
#include "apnle/io.hpp"
#include "apnle/search.hpp"

using namespace apnle;

namespace {

std::vector<Lut> sorted(std::vector<Lut> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SearchConfig plain_config() {
  SearchConfig c;
  c.threshold_t = -1;
  c.commutant_budget = 0;
  return c;
}

// All permutations with F(0) = 0, F o A = B o F and APN, by enumeration.
std::vector<Lut> brute_force_solutions(const AutoTuple& t) {
  std::vector<std::uint32_t> p(std::size_t{1} << t.n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Lut> out;
  do {
    Lut f(t.n, p);
    if (verify_le_automorphism(f, t.A, t.B) && is_apn(f)) out.push_back(f);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// APN test restricted to even-weight differences, built by the accumulator.
bool apn_by_even_rows(const Lut& f) {
  PartialLut s(f.n);
  DdtAccumulator acc(f.n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    s.set(x, f(x));
    if (!acc.add(s, x)) return false;
  }
  return true;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("apnle_test_" + std::to_string(::getpid()) + "_" + name)).string();
}

const AutoTuple& five_bit_class(int id) {
  static const auto classes = enumerate_classes(5);
  return classes.at(static_cast<std::size_t>(id - 1));
}

}  // namespace

TEST(PartialLut, TracksOccupancy) {
  PartialLut s(3);
  EXPECT_EQ(s.undef(), 8U);
  EXPECT_FALSE(s.defined(0));
  s.set(0, 5);
  EXPECT_TRUE(s.used(5));
  EXPECT_EQ(s.defined_count(), 1U);
  EXPECT_THROW(s.set(1, 5), std::logic_error);
  EXPECT_THROW(s.set(0, 4), std::logic_error);
  s.clear(0);
  EXPECT_FALSE(s.used(5));
  EXPECT_EQ(s, PartialLut(3));
  EXPECT_THROW(s.to_lut(), std::logic_error);
}

TEST(DdtAccumulator, FirstAssignmentTouchesNothing) {
  PartialLut s(5);
  DdtAccumulator acc(5);
  s.set(7, 3);
  EXPECT_TRUE(acc.add(s, 7));
  for (auto c : acc.counts()) EXPECT_EQ(c, 0);
}

TEST(DdtAccumulator, IdentityFailsBeforeCompletion) {
  for (int n = 3; n <= 6; ++n) {
    PartialLut s(n);
    DdtAccumulator acc(n);
    bool failed = false;
    for (std::uint32_t x = 0; x < s.size() && !failed; ++x) {
      s.set(x, x);
      if (!acc.add(s, x)) {
        failed = true;
        EXPECT_LT(x, s.size() - 1);
      }
    }
    EXPECT_TRUE(failed) << n;
  }
}

TEST(DdtAccumulator, FailedAddIsRevertedByRemove) {
  std::mt19937_64 rng(3);
  std::size_t failures = 0;
  for (int it = 0; it < 2000; ++it) {
    PartialLut s(4);
    DdtAccumulator acc(4);
    std::vector<std::uint32_t> vals(16);
    std::iota(vals.begin(), vals.end(), 0);
    std::shuffle(vals.begin(), vals.end(), rng);
    for (std::uint32_t x = 0; x < 16; ++x) {
      const auto snapshot = acc.counts();
      s.set(x, vals[x]);
      if (!acc.add(s, x)) {
        acc.remove(s, x);
        s.clear(x);
        EXPECT_EQ(acc.counts(), snapshot);
        ++failures;
        break;
      }
    }
  }
  EXPECT_GT(failures, 0U);
}

TEST(DdtAccumulator, RandomSchedulesMatchFromScratch) {
  std::mt19937_64 rng(12345);
  std::size_t schedules = 0;
  for (int n : {4, 5, 6}) {
    for (int sched = 0; sched < 3400; ++sched, ++schedules) {
      PartialLut s(n);
      DdtAccumulator acc(n);
      std::vector<std::uint32_t> stack;
      for (int step = 0; step < 24; ++step) {
        const bool push = stack.empty() || (rng() % 3 != 0 && s.defined_count() < s.size());
        if (push) {
          std::uint32_t x = 0;
          std::uint32_t y = 0;
          do x = static_cast<std::uint32_t>(rng() % s.size());
          while (s.defined(x));
          do y = static_cast<std::uint32_t>(rng() % s.size());
          while (s.used(y));
          s.set(x, y);
          if (acc.add(s, x)) {
            stack.push_back(x);
          } else {
            acc.remove(s, x);
            s.clear(x);
          }
        } else {
          acc.remove(s, stack.back());
          s.clear(stack.back());
          stack.pop_back();
        }
        ASSERT_EQ(acc.counts(), DdtAccumulator::from_scratch(s)) << "n=" << n << " schedule " << sched << " step " << step;
        for (std::uint32_t a = 1; a < s.size(); ++a) {
          for (std::uint32_t b = 0; b < s.size(); ++b) ASSERT_LE(acc.at(a, b), 2);
        }
      }
    }
  }
  EXPECT_GE(schedules, 10000U);
}

TEST(DdtAccumulator, OrbitAssignAndUnwindRestoresSnapshot) {
  const auto c = Gf2Matrix::companion(Gf2Poly::parse("X^7+1"));
  PartialLut s(7);
  DdtAccumulator acc(7);
  s.set(0, 0);
  ASSERT_TRUE(acc.add(s, 0));
  s.set(127, 127);
  ASSERT_TRUE(acc.add(s, 127));
  const auto snapshot = acc.counts();
  std::vector<std::uint32_t> xs;
  std::uint32_t x = 1;
  std::uint32_t y = 3;
  for (int j = 0; j < 7; ++j) {
    s.set(x, y);
    if (!acc.add(s, x)) {
      acc.remove(s, x);
      s.clear(x);
      break;
    }
    xs.push_back(x);
    x = c.apply(x);
    y = c.apply(y);
  }
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    acc.remove(s, *it);
    s.clear(*it);
  }
  EXPECT_EQ(acc.counts(), snapshot);
}

TEST(DdtAccumulator, EvenWeightRowsSufficeForPermutations) {
  std::mt19937_64 rng(99);
  for (int n : {4, 5}) {
    for (int it = 0; it < 1000; ++it) {
      std::vector<std::uint32_t> t(std::size_t{1} << n);
      std::iota(t.begin(), t.end(), 0);
      std::shuffle(t.begin(), t.end(), rng);
      const Lut f(n, t);
      EXPECT_EQ(apn_by_even_rows(f), is_apn(f));
    }
  }
  const FiniteField k(5);
  for (std::uint64_t d : {3ULL, 5ULL, 7ULL, 11ULL, 15ULL}) {
    const auto f = monomial_lut(k, d);
    EXPECT_TRUE(apn_by_even_rows(f));
    // Near-APN perturbation: swapping two outputs breaks APN-ness, and the
    // even rows see it.
    auto g = f.table;
    std::swap(g[1], g[2]);
    const Lut h(5, g);
    EXPECT_EQ(apn_by_even_rows(h), is_apn(h));
  }
}

TEST(IsSmallest, IdentityOnlyIsAlwaysTrue) {
  const std::vector<std::vector<std::uint16_t>> id{{0, 1, 2, 3, 4, 5, 6, 7}};
  PartialLut s(3);
  s.set(0, 0);
  s.set(1, 6);
  EXPECT_TRUE(is_smallest(s, id, id));
}

TEST(IsSmallest, AntisymmetricOnCompletedTables) {
  const FiniteField k(5);
  const auto f = monomial_lut(k, 3);
  const auto cs = commutant(k.mul_matrix(k.primitive()), kUnboundedBudget).elements;
  auto to_table = [](const Gf2Matrix& m) {
    std::vector<std::uint16_t> t(std::size_t{1} << m.dim());
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint16_t>(m.apply(x));
    return t;
  };
  auto partial = [](const Lut& g) {
    PartialLut s(g.n);
    for (std::uint32_t x = 0; x < g.size(); ++x) s.set(x, g(x));
    return s;
  };
  const auto id = to_table(Gf2Matrix::identity(5));
  int checked = 0;
  for (const auto& ca : cs) {
    const auto g = compose_linear(f, ca, Gf2Matrix::identity(5));
    if (!(g < f) && !(f < g)) continue;
    const auto& smaller = g < f ? g : f;
    const auto& larger = g < f ? f : g;
    // larger = smaller o c for c = ca or its inverse.
    const auto c = g < f ? ca.inverse() : ca;
    const std::vector<std::vector<std::uint16_t>> ca_set{id, to_table(c)};
    const std::vector<std::vector<std::uint16_t>> cb_set{id};
    const auto back = g < f ? ca : ca.inverse();
    const std::vector<std::vector<std::uint16_t>> ca_back{id, to_table(back)};
    EXPECT_FALSE(is_smallest(partial(larger), ca_back, cb_set));
    EXPECT_TRUE(is_smallest(partial(smaller), ca_set, cb_set));
    if (++checked > 20) break;
  }
  EXPECT_GT(checked, 0);
}

TEST(Search, RejectsBadInput) {
  const auto c7 = Gf2Matrix::companion(Gf2Poly::parse("X^3+X+1"));
  const auto c3 = Gf2Matrix::direct_sum(Gf2Matrix::companion(Gf2Poly::parse("X^2+X+1")), Gf2Matrix::identity(1));
  AutoTuple t;
  t.n = 3;
  t.A = c7;
  t.B = c3;
  t.p = 7;
  EXPECT_THROW(dfs_search(t, SearchConfig{}), std::invalid_argument);
  SearchConfig r;
  r.mode = SearchMode::Randomized;
  EXPECT_THROW(dfs_search(make_tuple(c7, c7), r), std::invalid_argument);
}

TEST(Search, ThreeBitOracleEquivalence) {
  for (auto scope : {ClassScope::Permutations, ClassScope::AllPairs}) {
    for (const auto& t : enumerate_classes(3, scope)) {
      const auto rep = dfs_search(t, plain_config());
      EXPECT_TRUE(rep.exhausted);
      EXPECT_EQ(sorted(rep.solutions), brute_force_solutions(t)) << "class " << t.class_id;
    }
  }
}

TEST(Search, FourBitTuplesHaveNoSolutions) {
  for (auto scope : {ClassScope::Permutations, ClassScope::AllPairs}) {
    for (const auto& t : enumerate_classes(4, scope)) {
      const auto rep = dfs_search(t, SearchConfig{});
      EXPECT_TRUE(rep.solutions.empty()) << t.class_id;
      EXPECT_TRUE(rep.exhausted);
      EXPECT_EQ(rep.stop_reason, StopReason::Completed);
    }
  }
}

TEST(Search, OrbitConsistencyAtEveryNode) {
  const auto& t = five_bit_class(5);
  const auto a = t.A;
  const auto b = t.B;
  std::size_t nodes = 0;
  SearchConfig c;
  c.on_node = [&](const PartialLut& s) {
    ++nodes;
    for (std::uint32_t x = 0; x < s.size(); ++x) {
      if (!s.defined(x)) continue;
      const auto ax = a.apply(x);
      ASSERT_TRUE(!s.defined(ax) || s[ax] == b.apply(s[x]));
    }
  };
  const auto rep = dfs_search(t, c);
  EXPECT_EQ(nodes, rep.nodes_visited);
  EXPECT_FALSE(rep.solutions.empty());
  for (const auto& f : rep.solutions) {
    EXPECT_TRUE(f.is_permutation());
    EXPECT_TRUE(is_apn(f));
    EXPECT_TRUE(verify_le_automorphism(f, t.A, t.B));
  }
}

TEST(Search, CommutantPruningKeepsFingerprints) {
  for (int id : {5, 9}) {
    const auto& t = five_bit_class(id);
    const auto full = dfs_search(t, plain_config());
    SearchConfig pruned;
    pruned.commutant_budget = 1000;
    pruned.threshold_t = 100;
    const auto reduced = dfs_search(t, pruned);
    EXPECT_LE(reduced.solutions.size(), full.solutions.size());
    std::set<std::string> fa;
    std::set<std::string> fb;
    for (const auto& f : full.solutions) fa.insert(fingerprint(f).digest());
    for (const auto& f : reduced.solutions) fb.insert(fingerprint(f).digest());
    EXPECT_EQ(fa, fb) << id;
    // Every full-run solution is a commutant transform of a reduced one.
    const auto ca = commutant(t.A, kUnboundedBudget).elements;
    const auto cb = commutant(t.B, kUnboundedBudget).elements;
    std::set<Lut> closure;
    for (const auto& f : reduced.solutions) {
      for (const auto& x : ca) {
        for (const auto& y : cb) closure.insert(compose_linear(f, x, y));
      }
    }
    for (const auto& f : full.solutions) EXPECT_TRUE(closure.count(f));
  }
  const auto& t5 = five_bit_class(5);
  SearchConfig pruned;
  pruned.threshold_t = 100;
  pruned.commutant_budget = 1000;
  EXPECT_LT(dfs_search(t5, pruned).solutions.size(), dfs_search(t5, plain_config()).solutions.size());
}

TEST(Search, MaxSolutionsStopsEarly) {
  SearchConfig c = plain_config();
  c.max_solutions = 3;
  const auto rep = dfs_search(five_bit_class(5), c);
  EXPECT_EQ(rep.solutions.size(), 3U);
  EXPECT_FALSE(rep.exhausted);
  EXPECT_EQ(rep.stop_reason, StopReason::SolutionLimit);
}

TEST(Search, NodeBudgetAndStopFlag) {
  SearchConfig c;
  c.node_budget = 100;
  auto rep = dfs_search(five_bit_class(1), c);
  EXPECT_FALSE(rep.exhausted);
  EXPECT_EQ(rep.stop_reason, StopReason::NodeBudget);
  std::atomic<bool> stop{true};
  SearchConfig s;
  s.stop_flag = &stop;
  rep = dfs_search(five_bit_class(1), s);
  EXPECT_EQ(rep.stop_reason, StopReason::Interrupted);
  EXPECT_LE(rep.nodes_visited, 1U);
}

TEST(SplitWork, DepthZeroIsOneJob) {
  const auto jobs = split_work(five_bit_class(5), SearchConfig{}, 0);
  ASSERT_EQ(jobs.size(), 1U);
  EXPECT_TRUE(jobs[0].orbits.empty());
}

TEST(SplitWork, PrefixesArePairwiseIncompatible) {
  const auto& t = five_bit_class(1);
  const auto jobs = split_work(t, SearchConfig{}, 2);
  ASSERT_GT(jobs.size(), 1U);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (std::size_t j = i + 1; j < jobs.size(); ++j) {
      // Same traversal order, so compatible prefixes would agree on every
      // shared position; they must differ somewhere.
      EXPECT_NE(jobs[i].orbits, jobs[j].orbits);
      const auto& a = jobs[i].orbits;
      const auto& b = jobs[j].orbits;
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      ASSERT_LT(k, std::min(a.size(), b.size()));
      EXPECT_EQ(a[k].first, b[k].first);
      EXPECT_NE(a[k].second, b[k].second);
    }
  }
}

TEST(SplitWork, UnionEqualsUnsplitSearch) {
  // Involution classes (1, 2) and class 4 are slow without canonical pruning.
  const std::vector<std::pair<int, bool>> runs{{1, false}, {3, true}, {4, false}, {5, true}, {5, false}, {9, true}, {10, false}, {11, true}};
  for (auto [id, plain] : runs) {
    const auto& t = five_bit_class(id);
    {
      const SearchConfig base = plain ? plain_config() : SearchConfig{};
      const auto whole = sorted(dfs_search(t, base).solutions);
      for (int depth : {1, 2, 3}) {
        std::vector<Lut> joined;
        for (const auto& job : split_work(t, base, depth)) {
          SearchEngine e(make_search_context(t, base), base);
          e.set_prefix(job);
          const auto r = e.run();
          joined.insert(joined.end(), r.solutions.begin(), r.solutions.end());
        }
        EXPECT_EQ(sorted(joined), whole) << "class " << id << " depth " << depth;
      }
      SearchConfig par = base;
      par.split_depth = 2;
      const auto p = parallel_search(t, par, 3);
      EXPECT_EQ(p.solutions, whole);
      EXPECT_TRUE(p.exhausted);
    }
  }
}

TEST(RandomSearch, ZeroBudgetIsEmpty) {
  SearchConfig c;
  c.time_budget = 0;
  const auto rep = random_search(five_bit_class(5), c);
  EXPECT_TRUE(rep.solutions.empty());
  EXPECT_EQ(rep.nodes_visited, 0U);
  EXPECT_FALSE(rep.exhausted);
}

TEST(RandomSearch, SameSeedSameTrace) {
  SearchConfig c;
  c.node_budget = 20000;
  c.restart_nodes = 500;
  c.rng_seed = 77;
  const auto a = random_search(five_bit_class(1), c);
  const auto b = random_search(five_bit_class(1), c);
  EXPECT_EQ(a.trace_digest, b.trace_digest);
  EXPECT_EQ(a.nodes_visited, b.nodes_visited);
  EXPECT_GT(a.restarts, 1U);
  c.rng_seed = 78;
  EXPECT_NE(random_search(five_bit_class(1), c).trace_digest, a.trace_digest);
}

TEST(RandomSearch, FindsVerifiedSolutions) {
  SearchConfig c;
  c.time_budget = 30;
  c.max_solutions = 5;
  c.restart_nodes = 200;
  const auto& t = five_bit_class(5);
  const auto rep = random_search(t, c);
  EXPECT_EQ(rep.solutions.size(), 5U);
  EXPECT_FALSE(rep.exhausted);
  std::set<Lut> distinct(rep.solutions.begin(), rep.solutions.end());
  EXPECT_EQ(distinct.size(), rep.solutions.size());
  for (const auto& f : rep.solutions) EXPECT_TRUE(verify_le_automorphism(f, t.A, t.B) && is_apn(f) && f.is_permutation());
}

TEST(Checkpoint, RoundTripAndCorruption) {
  const auto path = temp_path("roundtrip.ckpt");
  Checkpoint c;
  c.n = 5;
  c.p = 31;
  c.b_rows = {1, 2, 4, 8, 16};
  c.a_rows = {3, 2, 4, 8, 16};
  c.config_hash = 0xDEADBEEF;
  c.nodes = 123456789;
  c.solutions = 4;
  c.path = {{1, 3}, {2, 0}, {9, 17}};
  write_checkpoint(path, c);
  auto r = read_checkpoint(path);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->nodes, c.nodes);
  EXPECT_EQ(r->a_rows, c.a_rows);
  ASSERT_EQ(r->path.size(), 3U);
  EXPECT_EQ(r->path[2].cand_index, 17U);
  EXPECT_FALSE(r->finished);
  EXPECT_FALSE(read_checkpoint(path + ".missing").has_value());
  {
    std::ofstream f(path, std::ios::binary | std::ios::app);
    f << "x";
  }
  EXPECT_THROW(read_checkpoint(path), std::runtime_error);
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "NOTACHECKPOINT";
  }
  EXPECT_THROW(read_checkpoint(path), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(Checkpoint, ResumeCompletesTheSameSearch) {
  const auto& t = five_bit_class(5);
  const auto whole = sorted(dfs_search(t, plain_config()).solutions);
  for (std::uint64_t budget : {50ULL, 500ULL, 3000ULL}) {
    const auto path = temp_path("resume_" + std::to_string(budget) + ".ckpt");
    std::filesystem::remove(path);
    SearchConfig c = plain_config();
    c.checkpoint_path = path;
    c.node_budget = budget;
    const auto first = dfs_search(t, c);
    EXPECT_FALSE(first.exhausted);
    ASSERT_TRUE(read_checkpoint(path).has_value());
    c.node_budget = 0;
    const auto second = dfs_search(t, c);
    EXPECT_TRUE(second.exhausted);
    std::vector<Lut> joined = first.solutions;
    joined.insert(joined.end(), second.solutions.begin(), second.solutions.end());
    EXPECT_EQ(sorted(joined), whole) << budget;
    EXPECT_TRUE(read_checkpoint(path)->finished);
    const auto third = dfs_search(t, c);
    EXPECT_TRUE(third.exhausted);
    EXPECT_TRUE(third.solutions.empty());
    // A different configuration refuses the file.
    SearchConfig other = c;
    other.rng_seed = 999;
    other.threshold_t = 1;
    write_checkpoint(path, [&] {
      auto ck = *read_checkpoint(path);
      ck.finished = false;
      return ck;
    }());
    EXPECT_THROW(dfs_search(t, other), std::runtime_error);
    std::filesystem::remove(path);
  }
}

TEST(Seeding, SixBitClassFourteenFixesEightEntries) {
  const auto classes = enumerate_classes(6);
  const auto& t = classes.at(13);
  ASSERT_EQ(fixed_space(t.A, 1).dim, 3);
  const auto seed = seed_fixed_points(t, monomial_lut(FiniteField(3), 3));
  EXPECT_EQ(seed.defined_count(), 8U);
  const auto fa = fixed_space(t.A, 1);
  for (std::uint32_t x = 0; x < seed.size(); ++x) {
    if (!seed.defined(x)) continue;
    EXPECT_EQ(t.A.apply(x), x);
    EXPECT_EQ(t.B.apply(seed[x]), seed[x]);
  }
  SearchConfig c;
  c.seed_fixed_points = true;
  c.node_budget = 20000;
  const auto rep = dfs_search(t, c);
  EXPECT_TRUE(rep.solutions.empty());
}

TEST(Seeding, EmptyFixedSpaceGivesBareSeed) {
  const auto c = Gf2Matrix::companion(Gf2Poly::parse("X^4+X+1"));
  const auto seed = seed_fixed_points(make_tuple(c, c), Lut::identity(1));
  EXPECT_EQ(seed.defined_count(), 1U);
  EXPECT_EQ(seed[0], 0U);
}

TEST(Seeding, RejectsUnusableDimensions) {
  const auto j = Gf2Matrix::companion(Gf2Poly::parse("X^2+1"));
  const auto c3 = Gf2Matrix::companion(Gf2Poly::parse("X^2+X+1"));
  // k = 2.
  const auto t2 = make_tuple(Gf2Matrix::direct_sum(j, j), Gf2Matrix::direct_sum(j, j));
  EXPECT_THROW(seed_fixed_points(t2, Lut::identity(2)), std::invalid_argument);
  // k = 1.
  const auto t1 = make_tuple(Gf2Matrix::direct_sum(c3, Gf2Matrix::identity(1)), Gf2Matrix::direct_sum(c3, Gf2Matrix::identity(1)));
  EXPECT_THROW(seed_fixed_points(t1, Lut::identity(1)), std::invalid_argument);
  // I2 (+) J2: commuting maps must keep the image of J2 + I, so not every
  // map of the 3-dimensional fixed space extends.
  const auto ne = block_diagonal({Gf2Matrix::identity(2), j});
  ASSERT_FALSE(is_extendable(ne));
  ASSERT_EQ(fixed_space(ne, 1).dim, 3);
  EXPECT_THROW(seed_fixed_points(make_tuple(ne, ne), monomial_lut(FiniteField(3), 3)), std::invalid_argument);
  // Not APN.
  const auto ok = block_diagonal({j, j, j});
  EXPECT_THROW(seed_fixed_points(make_tuple(ok, ok), Lut::identity(3)), std::invalid_argument);
}

TEST(Checkpoint, SolutionLimitChunksAreDisjoint) {
  const auto& t = five_bit_class(5);
  const auto whole = sorted(dfs_search(t, SearchConfig{}).solutions);
  const auto path = temp_path("chunks.ckpt");
  std::filesystem::remove(path);
  SearchConfig c;
  c.checkpoint_path = path;
  c.max_solutions = 7;
  std::vector<Lut> joined;
  for (int round = 0; round < 100; ++round) {
    const auto r = dfs_search(t, c);
    joined.insert(joined.end(), r.solutions.begin(), r.solutions.end());
    if (r.exhausted) break;
    EXPECT_EQ(r.solutions.size(), 7U);
  }
  EXPECT_EQ(sorted(joined), whole);
  std::filesystem::remove(path);
}
