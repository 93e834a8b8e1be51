#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnle/gf2_poly.hpp"

namespace apnle {

/// Element of F2^n packed into the low n bits of a word.
using BitVec = std::uint32_t;

inline constexpr int kMaxDim = 32;

inline bool parity(std::uint32_t v) { return std::popcount(v) & 1; }

/// n x n matrix over F2. Row i is a word whose bit j is entry (i, j); vectors
/// are columns, so apply(x) computes M*x with coordinate i in bit i.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(int n) : n_(check_dim(n)) {}

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = std::uint32_t{1} << i;
    return m;
  }

  static Gf2Matrix from_rows(std::span<const std::uint32_t> rows) {
    Gf2Matrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (m.n_ < 32 && (rows[i] >> m.n_) != 0) throw std::invalid_argument("Gf2Matrix::from_rows: row has bits above n");
      m.rows_[i] = rows[i];
    }
    return m;
  }
  static Gf2Matrix from_rows(std::initializer_list<std::uint32_t> rows) {
    return from_rows(std::span<const std::uint32_t>(rows.begin(), rows.size()));
  }

  /// Matrix whose column j is the image of basis vector e_j.
  static Gf2Matrix from_columns(std::span<const BitVec> cols) {
    Gf2Matrix m(static_cast<int>(cols.size()));
    for (int j = 0; j < m.n_; ++j) {
      for (int i = 0; i < m.n_; ++i) {
        if ((cols[j] >> i) & 1U) m.rows_[i] |= std::uint32_t{1} << j;
      }
    }
    return m;
  }

  /// Companion matrix: ones on the subdiagonal, last column (q_0..q_{n-1}).
  static Gf2Matrix companion(Gf2Poly q) {
    if (q.is_zero() || q.degree() < 1) throw std::invalid_argument("companion: polynomial must have degree >= 1");
    if (!q.coeff(0)) throw std::invalid_argument("companion: constant term must be 1 (matrix would be singular)");
    const int n = q.degree();
    Gf2Matrix m(n);
    for (int i = 1; i < n; ++i) m.rows_[i] |= std::uint32_t{1} << (i - 1);
    for (int i = 0; i < n; ++i) {
      if (q.coeff(i)) m.rows_[i] |= std::uint32_t{1} << (n - 1);
    }
    return m;
  }

  /// Block diagonal a (+) b with a in the upper-left corner.
  static Gf2Matrix direct_sum(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix m(a.n_ + b.n_);
    for (int i = 0; i < a.n_; ++i) m.rows_[i] = a.rows_[i];
    for (int i = 0; i < b.n_; ++i) m.rows_[a.n_ + i] = b.rows_[i] << a.n_;
    return m;
  }

  int dim() const { return n_; }
  std::uint32_t row(int i) const { return rows_[i]; }
  std::span<const std::uint32_t> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool v) {
    const std::uint32_t m = std::uint32_t{1} << j;
    rows_[i] = v ? (rows_[i] | m) : (rows_[i] & ~m);
  }
  BitVec column(int j) const {
    BitVec c = 0;
    for (int i = 0; i < n_; ++i) c |= ((rows_[i] >> j) & 1U) << i;
    return c;
  }

  BitVec apply(BitVec x) const {
    BitVec y = 0;
    for (int i = 0; i < n_; ++i) y |= static_cast<BitVec>(parity(rows_[i] & x)) << i;
    return y;
  }

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in product");
    Gf2Matrix c(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      std::uint32_t r = 0;
      for (std::uint32_t bits = a.rows_[i]; bits != 0; bits &= bits - 1) r ^= b.rows_[std::countr_zero(bits)];
      c.rows_[i] = r;
    }
    return c;
  }

  friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in sum");
    Gf2Matrix c(a.n_);
    for (int i = 0; i < a.n_; ++i) c.rows_[i] = a.rows_[i] ^ b.rows_[i];
    return c;
  }

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i) {
      if (a.rows_[i] != b.rows_[i]) return false;
    }
    return true;
  }

  /// Orders by dimension, then row words from row 0.
  friend std::strong_ordering operator<=>(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int i = 0; i < a.n_; ++i) {
      if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i) {
      if (rows_[i] != 0) return false;
    }
    return true;
  }
  bool is_identity() const { return *this == identity(n_); }

  Gf2Matrix transpose() const {
    Gf2Matrix t(n_);
    for (int i = 0; i < n_; ++i) t.rows_[i] = column(i);
    return t;
  }

  int rank() const {
    auto r = rows_;
    int rank = 0;
    for (int c = 0; c < n_ && rank < n_; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      int p = rank;
      while (p < n_ && !(r[p] & bit)) ++p;
      if (p == n_) continue;
      std::swap(r[p], r[rank]);
      for (int i = rank + 1; i < n_; ++i) {
        if (r[i] & bit) r[i] ^= r[rank];
      }
      ++rank;
    }
    return rank;
  }

  bool is_invertible() const { return rank() == n_; }

  Gf2Matrix inverse() const {
    auto a = rows_;
    auto inv = identity(n_).rows_;
    for (int c = 0; c < n_; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      int p = c;
      while (p < n_ && !(a[p] & bit)) ++p;
      if (p == n_) throw std::domain_error("Gf2Matrix::inverse: matrix is singular");
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      for (int i = 0; i < n_; ++i) {
        if (i != c && (a[i] & bit)) {
          a[i] ^= a[c];
          inv[i] ^= inv[c];
        }
      }
    }
    Gf2Matrix m(n_);
    m.rows_ = inv;
    return m;
  }

  Gf2Matrix pow(std::uint64_t e) const {
    Gf2Matrix result = identity(n_);
    Gf2Matrix base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Wire format: n hex row words, newline separated.
  std::string to_hex_rows(char sep = '\n') const {
    std::ostringstream os;
    os << std::hex;
    for (int i = 0; i < n_; ++i) {
      if (i) os << sep;
      os << rows_[i];
    }
    return os.str();
  }

  static Gf2Matrix parse_hex_rows(std::string_view text) {
    std::vector<std::uint32_t> rows;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used, 16);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("Gf2Matrix::parse_hex_rows: bad row word '" + tok + "'");
      rows.push_back(static_cast<std::uint32_t>(v));
      tok.clear();
    };
    for (char c : text) {
      if (c == '\n' || c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';') {
        flush();
      } else {
        tok += c;
      }
    }
    flush();
    if (rows.empty() || rows.size() > kMaxDim) throw std::invalid_argument("Gf2Matrix::parse_hex_rows: need 1..32 rows");
    return from_rows(rows);
  }

 private:
  static int check_dim(int n) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("Gf2Matrix: dimension must be in 0..32");
    return n;
  }

  int n_ = 0;
  std::array<std::uint32_t, kMaxDim> rows_{};
};

/// p(M) by Horner's scheme.
inline Gf2Matrix evaluate(Gf2Poly p, const Gf2Matrix& m) {
  const int n = m.dim();
  Gf2Matrix acc(n);
  if (p.is_zero()) return acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    if (p.coeff(i)) acc = acc + Gf2Matrix::identity(n);
  }
  return acc;
}

/// Basis of {x : M x = 0}, from reduced row echelon form.
inline std::vector<BitVec> kernel_basis(const Gf2Matrix& m) {
  const int n = m.dim();
  std::vector<std::uint32_t> r(m.rows().begin(), m.rows().end());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    const std::uint32_t bit = std::uint32_t{1} << c;
    int p = rank;
    while (p < n && !(r[p] & bit)) ++p;
    if (p == n) continue;
    std::swap(r[p], r[rank]);
    for (int i = 0; i < n; ++i) {
      if (i != rank && (r[i] & bit)) r[i] ^= r[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v = BitVec{1} << f;
    for (int i = 0; i < rank; ++i) {
      if ((r[i] >> f) & 1U) v |= BitVec{1} << pivot_col[i];
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace apnle
