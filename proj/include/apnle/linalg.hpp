#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apnle/bit_system.hpp"
#include "apnle/gf2_matrix.hpp"
#include "apnle/gf2_poly.hpp"

namespace apnle {

namespace detail {

inline void require_square_invertible(const Gf2Matrix& m, const char* who) {
  if (!m.is_invertible()) throw std::domain_error(std::string(who) + ": matrix is singular");
}

/// Monic generator of {p : p(M) v = 0}, found from the first linear
/// dependency in the Krylov sequence v, Mv, M^2 v, ...
inline Gf2Poly vector_minimal_polynomial(const Gf2Matrix& m, BitVec v) {
  struct Entry {
    BitVec vec;
    BitVec pivot;
    std::uint64_t combo;
  };
  std::vector<Entry> basis;
  BitVec cur = v;
  for (int k = 0; k <= m.dim(); ++k) {
    BitVec r = cur;
    std::uint64_t combo = std::uint64_t{1} << k;
    for (const auto& e : basis) {
      if (r & e.pivot) {
        r ^= e.vec;
        combo ^= e.combo;
      }
    }
    if (r == 0) return Gf2Poly{combo};
    basis.push_back({r, BitVec{1} << std::countr_zero(r), combo});
    cur = m.apply(cur);
  }
  throw std::logic_error("vector_minimal_polynomial: Krylov sequence did not close");
}

inline int ceil_log2(std::uint64_t v) {
  int k = 0;
  while ((std::uint64_t{1} << k) < v) ++k;
  return k;
}

inline Gf2Matrix matrix_from_bits(const BitRow& bits, int n) {
  Gf2Matrix x(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (bits.get(static_cast<std::size_t>(i * n + j))) x.set(i, j, true);
    }
  }
  return x;
}

/// System in the n^2 entries of X expressing X M = M X.
inline BitSystem commuting_system(const Gf2Matrix& m) {
  const int n = m.dim();
  const auto cols = static_cast<std::size_t>(n * n);
  BitSystem sys(cols);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      BitRow eq(cols);
      for (int j = 0; j < n; ++j) {
        if (m.get(j, k)) eq.flip(static_cast<std::size_t>(i * n + j));
        if (m.get(i, j)) eq.flip(static_cast<std::size_t>(j * n + k));
      }
      sys.add_equation(eq, false);
    }
  }
  return sys;
}

/// Walks the affine space particular + span(kernel) looking for an
/// invertible matrix. Exhaustive up to 2^16 points, otherwise sampled.
inline std::optional<Gf2Matrix> find_invertible(const BitSystem::Solution& sol, int n, std::uint64_t seed) {
  const std::size_t d = sol.kernel.size();
  if (d <= 16) {
    BitRow cur = sol.particular;
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t g = 0; g < total; ++g) {
      if (g > 0) cur ^= sol.kernel[static_cast<std::size_t>(std::countr_zero(g))];
      auto x = matrix_from_bits(cur, n);
      if (x.is_invertible()) return x;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < (1 << 16); ++attempt) {
    BitRow cur = sol.particular;
    for (const auto& k : sol.kernel) {
      if (rng() & 1U) cur ^= k;
    }
    auto x = matrix_from_bits(cur, n);
    if (x.is_invertible()) return x;
  }
  return std::nullopt;
}

}  // namespace detail

inline Gf2Poly minimal_polynomial(const Gf2Matrix& m) {
  Gf2Poly acc = Gf2Poly::one();
  for (int i = 0; i < m.dim(); ++i) acc = lcm(acc, detail::vector_minimal_polynomial(m, BitVec{1} << i));
  return acc;
}

struct RcfDecomposition {
  Gf2Matrix matrix;
  /// q_r, ..., q_1 in block order: each entry divides the next one.
  std::vector<Gf2Poly> invariant_factors;
};

inline Gf2Matrix block_diagonal(const std::vector<Gf2Matrix>& blocks) {
  Gf2Matrix acc(0);
  for (const auto& b : blocks) acc = Gf2Matrix::direct_sum(acc, b);
  return acc;
}

/// Comp(q_r) (+) ... (+) Comp(q_1) for factors listed smallest first.
inline Gf2Matrix rcf_from_invariants(const std::vector<Gf2Poly>& factors) {
  std::vector<Gf2Matrix> blocks;
  blocks.reserve(factors.size());
  for (auto q : factors) blocks.push_back(Gf2Matrix::companion(q));
  return block_diagonal(blocks);
}

inline RcfDecomposition rcf(const Gf2Matrix& m) {
  detail::require_square_invertible(m, "rcf");
  const int n = m.dim();
  // Per irreducible factor f, the exponents of its elementary divisors,
  // largest first, from the nullities of f(M)^k.
  std::vector<std::pair<Gf2Poly, std::vector<int>>> divisors;
  std::size_t chain = 0;
  for (auto [f, mult] : factor(minimal_polynomial(m))) {
    const Gf2Matrix fm = evaluate(f, m);
    const int d = f.degree();
    std::vector<int> at_least(mult + 1, 0);
    Gf2Matrix power = Gf2Matrix::identity(n);
    int prev_nullity = 0;
    for (int k = 1; k <= mult; ++k) {
      power = power * fm;
      const int nullity = n - power.rank();
      at_least[k] = (nullity - prev_nullity) / d;
      prev_nullity = nullity;
    }
    std::vector<int> exps;
    for (int k = mult; k >= 1; --k) {
      const int with_exactly_k = at_least[k] - (k < mult ? at_least[k + 1] : 0);
      for (int c = 0; c < with_exactly_k; ++c) exps.push_back(k);
    }
    chain = std::max(chain, exps.size());
    divisors.emplace_back(f, std::move(exps));
  }
  std::vector<Gf2Poly> big_first(chain, Gf2Poly::one());
  for (const auto& [f, exps] : divisors) {
    for (std::size_t j = 0; j < exps.size(); ++j) big_first[j] = big_first[j] * pow(f, static_cast<unsigned>(exps[j]));
  }
  RcfDecomposition out;
  out.invariant_factors.assign(big_first.rbegin(), big_first.rend());
  out.matrix = rcf_from_invariants(out.invariant_factors);
  if (out.matrix.dim() != n) throw std::logic_error("rcf: invariant factor degrees do not sum to n");
  return out;
}

inline bool is_similar(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("is_similar: dimension mismatch");
  return rcf(a).matrix == rcf(b).matrix;
}

/// Least i >= 1 with M^i = I. Derived from the minimal polynomial
/// f_1^e_1 ... f_s^e_s as lcm(ord(f_j) * 2^ceil(log2 e_j)).
inline std::uint64_t order(const Gf2Matrix& m) {
  detail::require_square_invertible(m, "order");
  std::uint64_t ord = 1;
  for (auto [f, e] : factor(minimal_polynomial(m))) {
    const std::uint64_t part = order_of_x(f) << detail::ceil_log2(static_cast<std::uint64_t>(e));
    ord = std::lcm(ord, part);
  }
  if (!m.pow(ord).is_identity()) throw std::logic_error("order: computed bound is not an annihilating power");
  return ord;
}

/// Least i >= 1 with M^i x = x.
inline std::uint64_t point_order(const Gf2Matrix& m, BitVec x) {
  const std::uint64_t cap = order(m);
  BitVec y = m.apply(x);
  std::uint64_t i = 1;
  while (y != x) {
    if (++i > cap) throw std::logic_error("point_order: exceeded matrix order");
    y = m.apply(y);
  }
  return i;
}

struct FixedSpace {
  int dim = 0;
  std::vector<BitVec> basis;
};

/// Ord(M, i) = ker(M^i + I).
inline FixedSpace fixed_space(const Gf2Matrix& m, std::uint64_t i) {
  detail::require_square_invertible(m, "fixed_space");
  if (i == 0) throw std::invalid_argument("fixed_space: exponent must be positive");
  FixedSpace fs;
  fs.basis = kernel_basis(m.pow(i) + Gf2Matrix::identity(m.dim()));
  fs.dim = static_cast<int>(fs.basis.size());
  return fs;
}

struct Commutant {
  std::vector<Gf2Matrix> elements;
  bool exhaustive = false;
};

inline constexpr std::size_t kUnboundedBudget = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultCommutantBudget = std::size_t{1} << 16;

/// Invertible matrices commuting with M. Exhaustive when the solution space
/// of XM = MX has at most 2^20 points and its invertible part fits the
/// budget. Otherwise: powers of M, then seeded random elements, at most
/// 2^16 in total.
inline Commutant commutant(const Gf2Matrix& m, std::size_t budget = kDefaultCommutantBudget, std::uint64_t seed = 1) {
  detail::require_square_invertible(m, "commutant");
  const int n = m.dim();
  const auto sol = detail::commuting_system(m).solve();
  const std::size_t d = sol->kernel.size();
  Commutant out;
  if (d <= 20) {
    detail::BitRow cur(static_cast<std::size_t>(n * n));
    const std::uint64_t total = std::uint64_t{1} << d;
    bool overflow = false;
    for (std::uint64_t g = 1; g < total; ++g) {
      cur ^= sol->kernel[static_cast<std::size_t>(std::countr_zero(g))];
      auto x = detail::matrix_from_bits(cur, n);
      if (!x.is_invertible()) continue;
      if (out.elements.size() >= budget) {
        overflow = true;
        break;
      }
      out.elements.push_back(x);
    }
    if (!overflow) {
      std::sort(out.elements.begin(), out.elements.end());
      out.exhaustive = true;
      return out;
    }
    out.elements.clear();
  }
  const std::size_t cap = std::clamp<std::size_t>(budget, 2, kDefaultCommutantBudget);
  std::vector<Gf2Matrix> seen;
  auto add = [&](const Gf2Matrix& x) {
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) return;
    seen.push_back(x);
  };
  const auto ord = order(m);
  Gf2Matrix p = Gf2Matrix::identity(n);
  for (std::uint64_t i = 0; i < ord && seen.size() < cap; ++i) {
    add(p);
    p = p * m;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempts = 0; seen.size() < cap && attempts < 64 * cap; ++attempts) {
    detail::BitRow cur(static_cast<std::size_t>(n * n));
    for (const auto& k : sol->kernel) {
      if (rng() & 1U) cur ^= k;
    }
    auto x = detail::matrix_from_bits(cur, n);
    if (x.is_invertible()) add(x);
  }
  out.elements = std::move(seen);
  return out;
}

/// Invertible X with XM = MX and X v_j = w_j for each constraint pair.
inline std::optional<Gf2Matrix> commuting_extension(const Gf2Matrix& m, const std::vector<std::pair<BitVec, BitVec>>& constraints,
                                                    std::uint64_t seed = 1) {
  const int n = m.dim();
  auto sys = detail::commuting_system(m);
  const auto cols = static_cast<std::size_t>(n * n);
  for (auto [v, w] : constraints) {
    for (int i = 0; i < n; ++i) {
      detail::BitRow eq(cols);
      for (int j = 0; j < n; ++j) {
        if ((v >> j) & 1U) eq.set(static_cast<std::size_t>(i * n + j));
      }
      sys.add_equation(eq, (w >> i) & 1U);
    }
  }
  const auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return detail::find_invertible(*sol, n, seed);
}

/// True iff every linear permutation of Ord(M, 1) extends to an invertible
/// matrix commuting with M. Checked on the transvection generators of
/// GL(k, 2) acting on the fixed-space basis.
inline bool is_extendable(const Gf2Matrix& m) {
  detail::require_square_invertible(m, "is_extendable");
  const auto fs = fixed_space(m, 1);
  const int k = fs.dim;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<std::pair<BitVec, BitVec>> cons;
      for (int c = 0; c < k; ++c) {
        BitVec target = fs.basis[c];
        if (c == j) target ^= fs.basis[i];
        cons.emplace_back(fs.basis[c], target);
      }
      if (!commuting_extension(m, cons)) return false;
    }
  }
  return true;
}

}  // namespace apnle
