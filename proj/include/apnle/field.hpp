#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "apnle/gf2_matrix.hpp"
#include "apnle/gf2_poly.hpp"

namespace apnle {

/// Modulus used when none is given: pinned for n in {3, 6, 7, 8}, otherwise
/// the numerically least irreducible polynomial of degree n.
inline Gf2Poly default_modulus(int n) {
  switch (n) {
    case 3: return Gf2Poly{0b1011};
    case 6: return Gf2Poly{0b1011011};
    case 7: return Gf2Poly{0b10000011};
    case 8: return Gf2Poly{0b100011011};
    default: break;
  }
  if (n < 1 || n > 20) throw std::out_of_range("default_modulus: n must be in 1..20");
  for (std::uint64_t c = (std::uint64_t{1} << n) | 1U;; c += 2) {
    if (is_irreducible(Gf2Poly{c})) return Gf2Poly{c};
  }
}

/// F_{2^n} in the polynomial basis: bit i of an element is the coefficient
/// of X^i. Multiplication goes through log/antilog tables of a primitive
/// element (the least one, by numeric value).
class FiniteField {
 public:
  explicit FiniteField(int n) : FiniteField(n, default_modulus(n)) {}

  FiniteField(int n, Gf2Poly modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > 20) throw std::out_of_range("FiniteField: n must be in 1..20");
    if (modulus.degree() != n || !modulus.coeff(0) || !is_irreducible(modulus)) throw std::invalid_argument("FiniteField: modulus must be irreducible of degree n");
    const std::uint32_t q = size();
    exp_.assign(2 * static_cast<std::size_t>(q), 0);
    log_.assign(q, 0);
    for (std::uint32_t g = (n == 1 ? 1 : 2); g < q; ++g) {
      if (slow_order(g) == q - 1) {
        primitive_ = g;
        break;
      }
    }
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      exp_[i] = v;
      exp_[i + q - 1] = v;
      log_[v] = i;
      v = slow_mul(v, primitive_);
    }
  }

  int n() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  Gf2Poly modulus() const { return modulus_; }
  std::uint32_t primitive() const { return primitive_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (size() - 1))) % (size() - 1))];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
    return exp_[(size() - 1 - log_[a]) % (size() - 1)];
  }

  std::uint32_t exp(std::uint64_t i) const { return exp_[i % (size() - 1)]; }
  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FiniteField::log: log of zero");
    return log_[a];
  }

  std::uint64_t element_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FiniteField::element_order: zero");
    const std::uint64_t q1 = size() - 1;
    return q1 / std::gcd(q1, static_cast<std::uint64_t>(log_[a]));
  }

  /// Absolute trace Tr(a) = a + a^2 + ... + a^(2^(n-1)).
  std::uint32_t trace(std::uint32_t a) const {
    std::uint32_t t = 0;
    std::uint32_t s = a;
    for (int i = 0; i < n_; ++i) {
      t ^= s;
      s = mul(s, s);
    }
    return t;
  }

  /// The F2-linear map x -> a x.
  Gf2Matrix mul_matrix(std::uint32_t a) const {
    std::vector<BitVec> cols(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) cols[j] = mul(a, std::uint32_t{1} << j);
    return Gf2Matrix::from_columns(cols);
  }

  /// Some root of an irreducible f whose degree divides n.
  std::uint32_t root_of(Gf2Poly f) const {
    for (std::uint32_t a = 0; a < size(); ++a) {
      if (evaluate_at(f, a) == 0) return a;
    }
    throw std::invalid_argument("FiniteField::root_of: polynomial has no root in this field");
  }

  std::uint32_t evaluate_at(Gf2Poly f, std::uint32_t a) const {
    std::uint32_t acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = mul(acc, a) ^ (f.coeff(i) ? 1U : 0U);
    return acc;
  }

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    const std::uint32_t top = std::uint32_t{1} << n_;
    const auto m = static_cast<std::uint32_t>(modulus_.coeffs());
    while (b != 0) {
      if (b & 1U) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= m;
    }
    return r;
  }

  std::uint64_t slow_order(std::uint32_t g) const {
    std::uint32_t v = g;
    std::uint64_t k = 1;
    while (v != 1) {
      v = slow_mul(v, g);
      ++k;
    }
    return k;
  }

  int n_;
  Gf2Poly modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace apnle
