#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnle/gf2_matrix.hpp"

namespace apnle {

/// Total function F2^n -> F2^n as a lookup table.
struct Lut {
  int n = 0;
  std::vector<std::uint32_t> table;

  Lut() = default;
  Lut(int dim, std::vector<std::uint32_t> values) : n(dim), table(std::move(values)) {
    if (dim < 1 || dim > 16) throw std::invalid_argument("Lut: n must be in 1..16");
    if (table.size() != size()) throw std::invalid_argument("Lut: table must have 2^n entries");
    for (auto v : table) {
      if (v >= size()) throw std::invalid_argument("Lut: entry out of range");
    }
  }

  static Lut identity(int n) {
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = x;
    return Lut(n, std::move(t));
  }

  static Lut from_function(int n, const std::function<std::uint32_t(std::uint32_t)>& f) {
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = f(x);
    return Lut(n, std::move(t));
  }

  std::size_t size() const { return std::size_t{1} << n; }
  std::uint32_t operator()(std::uint32_t x) const { return table[x]; }

  bool is_permutation() const {
    std::vector<bool> seen(size(), false);
    for (auto v : table) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  Lut inverse() const {
    if (!is_permutation()) throw std::domain_error("Lut::inverse: not a permutation");
    std::vector<std::uint32_t> t(size());
    for (std::uint32_t x = 0; x < size(); ++x) t[table[x]] = x;
    return Lut(n, std::move(t));
  }

  friend bool operator==(const Lut&, const Lut&) = default;
  friend auto operator<=>(const Lut& a, const Lut& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.table <=> b.table;
  }
};

/// post(F(pre(x) + in_shift)) + out_shift.
inline Lut compose_affine(const Lut& f, const Gf2Matrix& pre, std::uint32_t in_shift, const Gf2Matrix& post, std::uint32_t out_shift) {
  if (pre.dim() != f.n || post.dim() != f.n) throw std::invalid_argument("compose_affine: dimension mismatch");
  return Lut::from_function(f.n, [&](std::uint32_t x) { return post.apply(f(pre.apply(x) ^ in_shift)) ^ out_shift; });
}

inline Lut compose_linear(const Lut& f, const Gf2Matrix& pre, const Gf2Matrix& post) { return compose_affine(f, pre, 0, post, 0); }

/// Row-major 2^n x 2^n difference distribution table.
struct Ddt {
  int n = 0;
  std::vector<std::uint32_t> counts;
  std::uint32_t at(std::uint32_t alpha, std::uint32_t beta) const { return counts[(std::size_t{alpha} << n) | beta]; }
};

inline Ddt ddt(const Lut& f) {
  Ddt d{f.n, std::vector<std::uint32_t>(f.size() * f.size(), 0)};
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t x = 0; x < f.size(); ++x) ++d.counts[(std::size_t{a} << f.n) | (f(x) ^ f(x ^ a))];
  }
  return d;
}

struct ApnWitness {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t count = 0;
};

/// First (alpha, beta) in row-major order with alpha != 0 and more than two
/// solutions, if any.
inline std::optional<ApnWitness> apn_violation(const Lut& f) {
  std::vector<std::uint32_t> row(f.size());
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) ++row[f(x) ^ f(x ^ a)];
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (row[b] > 2) return ApnWitness{a, b, row[b]};
    }
  }
  return std::nullopt;
}

inline bool is_apn(const Lut& f) { return !apn_violation(f).has_value(); }

/// Max DDT entry over alpha != 0.
inline std::uint32_t differential_uniformity(const Lut& f) {
  const auto d = ddt(f);
  std::uint32_t m = 0;
  for (std::size_t i = f.size(); i < d.counts.size(); ++i) m = std::max(m, d.counts[i]);
  return m;
}

/// W[b][a] = sum_x (-1)^(b.F(x) + a.x), row-major in b.
inline std::vector<std::int32_t> walsh_table(const Lut& f) {
  const std::size_t q = f.size();
  std::vector<std::int32_t> w(q * q);
  for (std::uint32_t b = 0; b < q; ++b) {
    std::int32_t* row = w.data() + b * q;
    for (std::uint32_t x = 0; x < q; ++x) row[x] = parity(b & f(x)) ? -1 : 1;
    for (std::size_t h = 1; h < q; h <<= 1) {
      for (std::size_t i = 0; i < q; i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
          const std::int32_t u = row[j];
          const std::int32_t v = row[j + h];
          row[j] = u + v;
          row[j + h] = u - v;
        }
      }
    }
  }
  return w;
}

/// Max Hamming weight of a monomial in the ANF of any coordinate.
inline int algebraic_degree(const Lut& f) {
  std::vector<std::uint32_t> anf = f.table;
  for (std::size_t h = 1; h < f.size(); h <<= 1) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & h) anf[x] ^= anf[x ^ h];
    }
  }
  int deg = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (anf[x] != 0) deg = std::max(deg, std::popcount(x));
  }
  return deg;
}

/// F(A x) = B F(x) for every x.
inline bool verify_le_automorphism(const Lut& f, const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.dim() != f.n || b.dim() != f.n) throw std::invalid_argument("verify_le_automorphism: dimension mismatch");
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f(a.apply(x)) != b.apply(f(x))) return false;
  }
  return true;
}

}  // namespace apnle
