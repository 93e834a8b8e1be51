#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace apnle::detail {

/// Packed bit vector of arbitrary length, used for linear systems whose
/// unknowns do not fit a machine word (e.g. the n^2 entries of a matrix).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= m;
    } else {
      words_[i / 64] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Linear system over F2 with `cols` unknowns plus an augmented right-hand
/// side column.
class BitSystem {
 public:
  explicit BitSystem(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }

  void add_equation(const BitRow& lhs, bool rhs) {
    BitRow r(cols_ + 1);
    for (std::size_t i = 0; i < cols_; ++i) {
      if (lhs.get(i)) r.set(i);
    }
    r.set(cols_, rhs);
    rows_.push_back(std::move(r));
  }

  /// Returns a particular solution (free variables zero) and the basis of the
  /// homogeneous solution space, or nullopt when inconsistent.
  struct Solution {
    BitRow particular;
    std::vector<BitRow> kernel;
  };

  std::optional<Solution> solve() const {
    auto rows = rows_;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && !rows[p].get(c)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
      }
      pivots.push_back(c);
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r].get(cols_)) return std::nullopt;
    }
    Solution sol{BitRow(cols_), {}};
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rank; ++i) {
      is_pivot[pivots[i]] = true;
      sol.particular.set(pivots[i], rows[i].get(cols_));
    }
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      BitRow v(cols_);
      v.set(f);
      for (std::size_t i = 0; i < rank; ++i) {
        if (rows[i].get(f)) v.set(pivots[i]);
      }
      sol.kernel.push_back(std::move(v));
    }
    return sol;
  }

 private:
  std::size_t cols_;
  std::vector<BitRow> rows_;
};

}  // namespace apnle::detail
