#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnle/linalg.hpp"
#include "apnle/reference_data.hpp"
#include "json.hpp"

namespace apnle {

/// A pair (B, A) of RCF matrices of the same prime order p. Stored and
/// printed in (B, A) order; the self-equivalence reads F o A = B o F.
struct AutoTuple {
  int n = 0;
  std::uint64_t p = 0;
  Gf2Matrix B;
  Gf2Matrix A;
  int class_id = 0;
  std::optional<int> paper_class;
  int fixed_dim_a = 0;
  int fixed_dim_b = 0;
  /// False for pairs no permutation can realize (fixed-space dimensions differ).
  bool permutation_compatible = true;
};

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q == 0) return false;
  }
  return true;
}

/// Multiplicative order of 2 modulo an odd prime p.
inline int order_of_two(std::uint64_t p) {
  std::uint64_t v = 2 % p;
  int k = 1;
  while (v != 1) {
    v = (v * 2) % p;
    ++k;
  }
  return k;
}

/// Primes p for which GL(n, 2) has elements of order p.
inline std::vector<std::uint64_t> candidate_primes(int n) {
  std::vector<std::uint64_t> out;
  if (n >= 2) out.push_back(2);
  for (int d = 2; d <= n; ++d) {
    for (auto q : detail::prime_factors((std::uint64_t{1} << d) - 1)) {
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Irreducible factors of X^p + 1 other than X + 1, for an odd prime p.
inline std::vector<Gf2Poly> cyclotomic_factors(std::uint64_t p) {
  const int e = order_of_two(p);
  if (e > 31) throw std::out_of_range("cyclotomic_factors: factor degree above 31");
  std::vector<Gf2Poly> out;
  for (std::uint64_t c = (std::uint64_t{1} << e) | 1U; c < (std::uint64_t{1} << (e + 1)); c += 2) {
    const Gf2Poly f{c};
    if (pow_mod(Gf2Poly::x(), p, f).is_one() && is_irreducible(f)) out.push_back(f);
  }
  return out;
}

namespace detail {

/// Invariant factors (smallest first) from elementary divisors given as
/// (irreducible, exponent) pairs.
inline std::vector<Gf2Poly> invariants_from_elementary(const std::vector<std::pair<Gf2Poly, int>>& divs) {
  std::map<Gf2Poly, std::vector<int>> by_factor;
  for (auto [f, e] : divs) by_factor[f].push_back(e);
  std::size_t chain = 0;
  for (auto& [f, exps] : by_factor) {
    std::sort(exps.rbegin(), exps.rend());
    chain = std::max(chain, exps.size());
  }
  std::vector<Gf2Poly> big_first(chain, Gf2Poly::one());
  for (const auto& [f, exps] : by_factor) {
    for (std::size_t j = 0; j < exps.size(); ++j) big_first[j] = big_first[j] * pow(f, static_cast<unsigned>(exps[j]));
  }
  return {big_first.rbegin(), big_first.rend()};
}

}  // namespace detail

/// Every RCF matrix in GL(n, 2) of order exactly p, sorted.
inline std::vector<Gf2Matrix> prime_order_rcfs(int n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_order_rcfs: p must be prime");
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("prime_order_rcfs: n out of range");
  const Gf2Poly x1 = Gf2Poly{0b11};
  std::vector<Gf2Matrix> out;
  if (p == 2) {
    // m Jordan-type blocks (X+1)^2, the rest X+1, m >= 1.
    for (int m = 1; 2 * m <= n; ++m) {
      std::vector<std::pair<Gf2Poly, int>> divs;
      for (int i = 0; i < m; ++i) divs.emplace_back(x1, 2);
      for (int i = 0; i < n - 2 * m; ++i) divs.emplace_back(x1, 1);
      out.push_back(rcf_from_invariants(detail::invariants_from_elementary(divs)));
    }
  } else {
    const auto factors = cyclotomic_factors(p);
    const int e = order_of_two(p);
    if (e > n) return out;
    // Multiplicities for each nontrivial factor; X+1 fills the rest.
    std::vector<int> mult(factors.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (i == factors.size()) {
        if (used == 0) return;
        std::vector<std::pair<Gf2Poly, int>> divs;
        for (std::size_t j = 0; j < factors.size(); ++j) {
          for (int c = 0; c < mult[j]; ++c) divs.emplace_back(factors[j], 1);
        }
        for (int c = 0; c < n - used; ++c) divs.emplace_back(x1, 1);
        out.push_back(rcf_from_invariants(detail::invariants_from_elementary(divs)));
        return;
      }
      for (int c = 0; used + c * e <= n; ++c) {
        mult[i] = c;
        rec(i + 1, used + c * e);
      }
      mult[i] = 0;
    };
    rec(0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exists i in 1..p-1 with A ~ C^i and B ~ D^i (all four of order p).
inline bool power_similar(const Gf2Matrix& a, const Gf2Matrix& b, const Gf2Matrix& c, const Gf2Matrix& d) {
  const auto p = order(a);
  if (order(b) != p || order(c) != p || order(d) != p) throw std::invalid_argument("power_similar: orders differ");
  const auto ra = rcf(a).matrix;
  const auto rb = rcf(b).matrix;
  for (std::uint64_t i = 1; i < std::max<std::uint64_t>(p, 2); ++i) {
    if (rcf(c.pow(i)).matrix == ra && rcf(d.pow(i)).matrix == rb) return true;
  }
  return false;
}

/// Power-similarity of (B, A) to (D, C), or of (A^-1, B^-1) to (D, C).
inline bool extended_power_similar(const Gf2Matrix& b, const Gf2Matrix& a, const Gf2Matrix& d, const Gf2Matrix& c) {
  if (order(a) != order(b) || order(c) != order(d) || order(a) != order(c)) return false;
  return power_similar(b, a, d, c) || power_similar(a.inverse(), b.inverse(), d, c);
}

inline std::string serialize_rows(const Gf2Matrix& m) { return m.to_hex_rows(','); }

/// Reference tuple from the embedded table.
struct ReferenceClass {
  int n = 0;
  int id = 0;
  std::vector<std::string> b_blocks;
  std::vector<std::string> a_blocks;
  Gf2Matrix B;
  Gf2Matrix A;
  std::string verdict;
  std::vector<std::string> solutions;
  std::uint64_t p = 0;
  /// (rcf(B^i), rcf(A^i)) for i = 1..p-1.
  std::vector<std::pair<Gf2Matrix, Gf2Matrix>> power_orbit;
};

/// Builds I_k (+) Comp(q) (+) ... from tokens "Ik" or polynomial strings.
inline Gf2Matrix matrix_from_blocks(const std::vector<std::string>& blocks) {
  std::vector<Gf2Matrix> parts;
  for (const auto& s : blocks) {
    if (!s.empty() && s[0] == 'I') {
      parts.push_back(Gf2Matrix::identity(std::stoi(s.substr(1))));
    } else {
      parts.push_back(Gf2Matrix::companion(Gf2Poly::parse(s)));
    }
  }
  return block_diagonal(parts);
}

inline const std::vector<ReferenceClass>& reference_classes() {
  static const std::vector<ReferenceClass> table = [] {
    std::vector<ReferenceClass> out;
    const auto j = nlohmann::json::parse(kReferenceClassesJson);
    for (const auto& dim : j.at("dimensions")) {
      for (const auto& c : dim.at("classes")) {
        ReferenceClass r;
        r.n = dim.at("n").get<int>();
        r.id = c.at("id").get<int>();
        r.b_blocks = c.at("B").get<std::vector<std::string>>();
        r.a_blocks = c.at("A").get<std::vector<std::string>>();
        r.B = matrix_from_blocks(r.b_blocks);
        r.A = matrix_from_blocks(r.a_blocks);
        r.verdict = c.at("verdict").get<std::string>();
        if (c.contains("solutions")) r.solutions = c.at("solutions").get<std::vector<std::string>>();
        r.p = order(r.A);
        Gf2Matrix pb = r.B;
        Gf2Matrix pa = r.A;
        for (std::uint64_t i = 1; i < std::max<std::uint64_t>(r.p, 2); ++i) {
          r.power_orbit.emplace_back(rcf(pb).matrix, rcf(pa).matrix);
          pb = pb * r.B;
          pa = pa * r.A;
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  }();
  return table;
}

inline std::vector<ReferenceClass> reference_classes(int n) {
  std::vector<ReferenceClass> out;
  for (const auto& r : reference_classes()) {
    if (r.n == n) out.push_back(r);
  }
  return out;
}

/// Index of the reference class extended-power-similar to (B, A), for
/// n in {6, 7, 8}.
inline std::optional<int> match_paper_class(const Gf2Matrix& b, const Gf2Matrix& a) {
  const int n = a.dim();
  if (n < 6 || n > 8) return std::nullopt;
  const auto p = order(a);
  if (order(b) != p) return std::nullopt;
  const std::pair<Gf2Matrix, Gf2Matrix> direct{rcf(b).matrix, rcf(a).matrix};
  const std::pair<Gf2Matrix, Gf2Matrix> swapped{rcf(a.inverse()).matrix, rcf(b.inverse()).matrix};
  for (const auto& r : reference_classes()) {
    if (r.n != n || r.p != p) continue;
    for (const auto& pr : r.power_orbit) {
      if (pr == direct || pr == swapped) return r.id;
    }
  }
  return std::nullopt;
}

inline std::optional<int> match_paper_class(const AutoTuple& t) { return match_paper_class(t.B, t.A); }

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

enum class ClassScope {
  /// Pairs with equal fixed-space dimension: the ones a permutation can realize.
  Permutations,
  /// Every pair of order-p RCFs; mismatched ones are flagged.
  AllPairs,
};

/// One canonical representative per extended-power-similarity class of
/// pairs (B, A) of RCF matrices with the same prime order. The canonical
/// choice is the least (p, rows of B, rows of A); output is sorted by it,
/// or by reference index when every class has one, and class_id numbers it
/// from 1.
inline std::vector<AutoTuple> enumerate_classes(int n, ClassScope scope = ClassScope::Permutations) {
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_classes: n must be in 1..12");
  std::vector<AutoTuple> out;
  for (auto p : candidate_primes(n)) {
    const auto mats = prime_order_rcfs(n, p);
    const std::size_t k = mats.size();
    if (k == 0) continue;
    auto index_of = [&](const Gf2Matrix& m) {
      const auto r = rcf(m).matrix;
      const auto it = std::lower_bound(mats.begin(), mats.end(), r);
      if (it == mats.end() || !(*it == r)) throw std::logic_error("enumerate_classes: power left the RCF list");
      return static_cast<std::size_t>(it - mats.begin());
    };
    // pw[m][i] = index of rcf(mats[m]^i).
    std::vector<std::vector<std::size_t>> pw(k, std::vector<std::size_t>(p));
    std::vector<int> fdim(k);
    for (std::size_t m = 0; m < k; ++m) {
      Gf2Matrix acc = mats[m];
      for (std::uint64_t i = 1; i < p; ++i) {
        pw[m][i] = index_of(acc);
        acc = acc * mats[m];
      }
      fdim[m] = fixed_space(mats[m], 1).dim;
    }
    detail::UnionFind uf(k * k);
    auto id = [&](std::size_t b, std::size_t a) { return b * k + a; };
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::uint64_t i = 2; i < p; ++i) uf.unite(id(b, a), id(pw[b][i], pw[a][i]));
        uf.unite(id(b, a), id(pw[a][p - 1], pw[b][p - 1]));
      }
    }
    // Indices are sorted by matrix order, so the least (b, a) in a class is
    // the lexicographically least pair.
    std::map<std::size_t, std::size_t> first;
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) {
        const bool compatible = fdim[a] == fdim[b];
        if (!compatible && scope == ClassScope::Permutations) continue;
        first.try_emplace(uf.find(id(b, a)), id(b, a));
      }
    }
    for (const auto& [root, rep] : first) {
      AutoTuple t;
      t.n = n;
      t.p = p;
      t.B = mats[rep / k];
      t.A = mats[rep % k];
      t.fixed_dim_b = fdim[rep / k];
      t.fixed_dim_a = fdim[rep % k];
      t.permutation_compatible = t.fixed_dim_a == t.fixed_dim_b;
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const AutoTuple& x, const AutoTuple& y) {
    if (x.p != y.p) return x.p < y.p;
    if (auto c = x.B <=> y.B; c != 0) return c < 0;
    return x.A < y.A;
  });
  bool all_matched = !out.empty();
  for (auto& t : out) {
    t.paper_class = match_paper_class(t);
    all_matched = all_matched && t.paper_class.has_value();
  }
  // With a complete reference list, number the classes the same way it does.
  if (all_matched) {
    std::stable_sort(out.begin(), out.end(), [](const AutoTuple& x, const AutoTuple& y) { return *x.paper_class < *y.paper_class; });
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].class_id = static_cast<int>(i + 1);
  return out;
}

inline nlohmann::ordered_json to_json(const AutoTuple& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["p"] = t.p;
  j["class_id"] = t.class_id;
  j["paper_class"] = t.paper_class ? nlohmann::ordered_json(*t.paper_class) : nlohmann::ordered_json(nullptr);
  j["B_rows_hex"] = serialize_rows(t.B);
  j["A_rows_hex"] = serialize_rows(t.A);
  j["fixed_dims"] = {t.fixed_dim_a, t.fixed_dim_b};
  j["permutation_compatible"] = t.permutation_compatible;
  return j;
}

/// Tuple from explicit matrices, validating equal prime order.
inline AutoTuple make_tuple(const Gf2Matrix& b, const Gf2Matrix& a) {
  if (a.dim() != b.dim()) throw std::invalid_argument("make_tuple: dimension mismatch");
  AutoTuple t;
  t.n = a.dim();
  t.p = order(a);
  if (order(b) != t.p) throw std::invalid_argument("make_tuple: order(A) != order(B)");
  t.B = b;
  t.A = a;
  t.fixed_dim_a = fixed_space(a, 1).dim;
  t.fixed_dim_b = fixed_space(b, 1).dim;
  t.permutation_compatible = t.fixed_dim_a == t.fixed_dim_b;
  return t;
}

}  // namespace apnle
