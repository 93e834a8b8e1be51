#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "apnle/field.hpp"
#include "apnle/fingerprint.hpp"
#include "apnle/fixtures.hpp"
#include "apnle/lut.hpp"
#include "json.hpp"

namespace apnle {

struct KnownFunction {
  std::string label;
  Lut lut;
  CczFingerprint fingerprint;
};

/// Labelled reference functions for dimension n: the APN monomials for
/// n = 3, 5, 7, Dillon's permutation for n = 6, x^3 for other odd n.
/// Fingerprints are cached per n.
inline const std::vector<KnownFunction>& known_functions(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<KnownFunction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::pair<std::string, Lut>> raw;
  auto monomials = [&](std::initializer_list<std::uint64_t> exps) {
    const FiniteField k(n);
    for (auto d : exps) raw.emplace_back("x^" + std::to_string(d) + " n=" + std::to_string(n), monomial_lut(k, d));
  };
  if (n == 3) {
    monomials({3});
  } else if (n == 5) {
    monomials({3, 5, 7, 11, 15});
  } else if (n == 6) {
    raw.emplace_back("Dillon n=6", dillon_fixture());
  } else if (n == 7) {
    monomials({5, 9, 63, 78, 85, 88});
  } else if (n % 2 == 1 && n <= 12) {
    monomials({3});
  }
  std::vector<KnownFunction> out;
  for (auto& [label, lut] : raw) {
    auto fp = fingerprint(lut);
    out.push_back({label, std::move(lut), std::move(fp)});
  }
  return cache.emplace(n, std::move(out)).first->second;
}

enum class GroupStatus {
  /// Fingerprint equals that of at least one known function. Not a proof of
  /// equivalence.
  MatchesFingerprintOf,
  /// Fingerprint differs from every known function: provably inequivalent
  /// to all of them.
  InequivalentToAllKnown,
};

inline std::string status_name(GroupStatus s) {
  return s == GroupStatus::MatchesFingerprintOf ? "matches-fingerprint-of" : "inequivalent-to-all-known";
}

struct SolutionGroup {
  CczFingerprint fingerprint;
  std::string digest;
  std::vector<Lut> members;
  /// Labels of every known function sharing the fingerprint.
  std::vector<std::string> known_matches;
  GroupStatus status = GroupStatus::InequivalentToAllKnown;

  bool potentially_new() const { return status == GroupStatus::InequivalentToAllKnown; }
};

/// Partition by fingerprint, in order of first appearance.
inline std::vector<SolutionGroup> group_solutions(const std::vector<Lut>& solutions, const std::vector<KnownFunction>& known) {
  std::vector<SolutionGroup> groups;
  if (solutions.empty()) return groups;
  const int n = solutions.front().n;
  for (const auto& s : solutions) {
    if (s.n != n) throw std::invalid_argument("group_solutions: mixed dimensions");
  }
  for (const auto& s : solutions) {
    auto fp = fingerprint(s);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const SolutionGroup& g) { return g.fingerprint == fp; });
    if (it != groups.end()) {
      it->members.push_back(s);
      continue;
    }
    SolutionGroup g;
    g.digest = fp.digest();
    g.fingerprint = std::move(fp);
    g.members.push_back(s);
    for (const auto& k : known) {
      if (k.fingerprint == g.fingerprint) g.known_matches.push_back(k.label);
    }
    g.status = g.known_matches.empty() ? GroupStatus::InequivalentToAllKnown : GroupStatus::MatchesFingerprintOf;
    groups.push_back(std::move(g));
  }
  return groups;
}

inline std::vector<SolutionGroup> group_solutions(const std::vector<Lut>& solutions) {
  if (solutions.empty()) return {};
  return group_solutions(solutions, known_functions(solutions.front().n));
}

/// groups.json body.
inline nlohmann::ordered_json groups_to_json(const std::vector<SolutionGroup>& groups) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : groups) {
    nlohmann::ordered_json e;
    e["digest"] = g.digest;
    e["members"] = g.members.size();
    e["status"] = status_name(g.status);
    e["known_matches"] = g.known_matches;
    e["potentially_new"] = g.potentially_new();
    e["fingerprint"] = g.fingerprint.to_json();
    j["groups"].push_back(std::move(e));
  }
  return j;
}

}  // namespace apnle
