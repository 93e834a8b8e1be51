#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apnle/field.hpp"
#include "apnle/linalg.hpp"
#include "apnle/lut.hpp"

namespace apnle {

inline Lut monomial_lut(const FiniteField& k, std::uint64_t d) {
  return Lut::from_function(k.n(), [&](std::uint32_t x) { return k.pow(x, d); });
}

struct Term {
  std::uint32_t coeff;
  std::uint64_t exponent;
};

/// x -> sum coeff_i x^exponent_i.
inline Lut multinomial_lut(const FiniteField& k, const std::vector<Term>& terms) {
  return Lut::from_function(k.n(), [&](std::uint32_t x) {
    std::uint32_t acc = 0;
    for (const auto& t : terms) acc ^= k.mul(t.coeff, k.pow(x, t.exponent));
    return acc;
  });
}

/// x^3 + a x^24 + x^10 over F_{2^6} mod X^6+X^4+X^3+X+1 with a = X. APN,
/// quadratic, not a permutation.
inline Lut dillon_fixture() {
  const FiniteField k(6, Gf2Poly{0b1011011});
  return multinomial_lut(k, {{1, 3}, {0b10, 24}, {1, 10}});
}

/// H(x, y) = (R(y, z), z) with z = R^{-1}(x, y) and R(x, y) = (x + a y)^3 + b y^3
/// over F_8 mod X^3+X+1. The 6-bit input is x | (y << 3).
inline Lut butterfly(std::uint32_t alpha, std::uint32_t beta) {
  const FiniteField k(3);
  if (alpha >= 8 || beta >= 8) throw std::invalid_argument("butterfly: parameters must lie in F_8");
  if (beta == 0) throw std::invalid_argument("butterfly: beta must be nonzero");
  auto r = [&](std::uint32_t x, std::uint32_t y) { return k.pow(x ^ k.mul(alpha, y), 3) ^ k.mul(beta, k.pow(y, 3)); };
  // Cubing is inverted by the 5th power on F_8^*.
  auto r_inv = [&](std::uint32_t x, std::uint32_t y) { return k.pow(x ^ k.mul(beta, k.pow(y, 3)), 5) ^ k.mul(alpha, y); };
  return Lut::from_function(6, [&](std::uint32_t v) {
    const std::uint32_t x = v & 7U;
    const std::uint32_t y = v >> 3;
    const std::uint32_t z = r_inv(x, y);
    return r(y, z) | (z << 3);
  });
}

/// diag(z^3, z) on x | (y << 3): commutes with every exponent-3 butterfly.
inline Gf2Matrix butterfly_automorphism(std::uint32_t zeta) {
  const FiniteField k(3);
  return Gf2Matrix::direct_sum(k.mul_matrix(k.pow(zeta, 3)), k.mul_matrix(zeta));
}

/// Affine map v -> L v + c on F_2^m.
struct AffineMap {
  Gf2Matrix linear;
  std::uint32_t shift = 0;
  std::uint32_t apply(std::uint32_t v) const { return linear.apply(v) ^ shift; }
};

/// The graph automorphism (x, y) -> (x + a, y + L_a(x) + F(a) + F(0)) of a
/// quadratic F, where L_a(x) = F(x) + F(x + a) + F(a) + F(0). Points of
/// F_2^2n are x | (y << n).
inline AffineMap quadratic_shift_automorphism(const Lut& f, std::uint32_t alpha) {
  if (alpha == 0 || alpha >= f.size()) throw std::invalid_argument("quadratic_shift_automorphism: alpha must be a nonzero point");
  if (algebraic_degree(f) > 2) throw std::invalid_argument("quadratic_shift_automorphism: F has algebraic degree above 2");
  if (2 * f.n > kMaxDim) throw std::invalid_argument("quadratic_shift_automorphism: 2n exceeds matrix size");
  const int n = f.n;
  auto l = [&](std::uint32_t x) { return f(x) ^ f(x ^ alpha) ^ f(alpha) ^ f(0); };
  std::vector<BitVec> cols(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) cols[j] = (BitVec{1} << j) | (l(std::uint32_t{1} << j) << n);
  for (int j = 0; j < n; ++j) cols[n + j] = BitVec{1} << (n + j);
  return AffineMap{Gf2Matrix::from_columns(cols), alpha | ((f(alpha) ^ f(0)) << n)};
}

/// True iff the map sends every graph point (x, F(x)) to a graph point.
inline bool preserves_graph(const Lut& f, const AffineMap& s) {
  const std::uint32_t mask = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const std::uint32_t img = s.apply(x | (f(x) << f.n));
    if (f(img & mask) != (img >> f.n)) return false;
  }
  return true;
}

/// For F = sum c_i x^a_i: with g = gcd(a_1 - a_0, ..., 2^n - 1) > 1 and an
/// element t of order g, F(t x) = t^a_0 F(x). Returns (A, B) = (mul by t,
/// mul by t^a_0), or nothing when g = 1.
inline std::optional<std::pair<Gf2Matrix, Gf2Matrix>> multinomial_automorphism(const FiniteField& k, const std::vector<std::uint64_t>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("multinomial_automorphism: need at least one exponent");
  const std::uint64_t q1 = k.size() - 1;
  std::uint64_t g = q1;
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    const std::uint64_t a = exponents[i] % q1;
    const std::uint64_t b = exponents[0] % q1;
    g = std::gcd(g, a >= b ? a - b : b - a);
  }
  if (g <= 1) return std::nullopt;
  const std::uint32_t t = k.exp(q1 / g);
  return std::make_pair(k.mul_matrix(t), k.mul_matrix(k.pow(t, exponents[0])));
}

/// [v | M v | ... | M^(n-1) v]. Conjugating M by it gives Comp(minpoly) when
/// v is a cyclic vector.
inline Gf2Matrix krylov_basis(const Gf2Matrix& m, BitVec v) {
  std::vector<BitVec> cols(static_cast<std::size_t>(m.dim()));
  for (auto& c : cols) {
    c = v;
    v = m.apply(v);
  }
  return Gf2Matrix::from_columns(cols);
}

/// Given F o A = B o F with A and B cyclic, returns G = P_B^-1 o F o P_A,
/// which satisfies G o Comp(mu_A) = Comp(mu_B) o G.
inline Lut conjugate_to_companions(const Lut& f, const Gf2Matrix& a, const Gf2Matrix& b) {
  const Gf2Matrix pa = krylov_basis(a, 1);
  const Gf2Matrix pb = krylov_basis(b, 1);
  if (!pa.is_invertible() || !pb.is_invertible()) throw std::invalid_argument("conjugate_to_companions: e_0 is not a cyclic vector");
  return compose_linear(f, pa, pb.inverse());
}

/// Some theta whose conjugates theta, theta^2, ... form a basis.
inline std::uint32_t normal_element(const FiniteField& k) {
  for (std::uint32_t t = 1; t < k.size(); ++t) {
    std::vector<BitVec> cols;
    std::uint32_t s = t;
    for (int i = 0; i < k.n(); ++i) {
      cols.push_back(s);
      s = k.mul(s, s);
    }
    if (Gf2Matrix::from_columns(cols).is_invertible()) return t;
  }
  throw std::logic_error("normal_element: none found");
}

/// x^d written in normal-basis coordinates. Squaring becomes a cyclic shift,
/// so the result commutes with Comp(X^n + 1).
inline Lut shift_invariant_monomial(const FiniteField& k, std::uint64_t d) {
  std::vector<BitVec> cols;
  std::uint32_t s = normal_element(k);
  for (int i = 0; i < k.n(); ++i) {
    cols.push_back(s);
    s = k.mul(s, s);
  }
  const Gf2Matrix to_poly = Gf2Matrix::from_columns(cols);
  return compose_linear(monomial_lut(k, d), to_poly, to_poly.inverse());
}

/// The tuple (B, A) = (Comp(X^n + 1), Comp(X^n + 1)).
inline std::pair<Gf2Matrix, Gf2Matrix> shift_invariant_tuple(int n) {
  const Gf2Matrix c = Gf2Matrix::companion(Gf2Poly::monomial(n) + Gf2Poly::one());
  return {c, c};
}

}  // namespace apnle
