#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apnle {

/// Polynomial over F2. Bit i of the coefficient word is the coefficient of X^i,
/// so degrees are limited to 63. The zero polynomial has degree kZeroDegree,
/// which callers must test via is_zero() rather than compare arithmetically.
class Gf2Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();
  static constexpr int kMaxDegree = 63;

  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t coeffs) : coeffs_(coeffs) {}

  static constexpr Gf2Poly one() { return Gf2Poly{1}; }
  static constexpr Gf2Poly x() { return Gf2Poly{2}; }
  static Gf2Poly monomial(int k) {
    if (k < 0 || k > kMaxDegree) throw std::out_of_range("Gf2Poly::monomial: exponent out of range");
    return Gf2Poly{std::uint64_t{1} << k};
  }

  constexpr std::uint64_t coeffs() const { return coeffs_; }
  constexpr bool is_zero() const { return coeffs_ == 0; }
  constexpr bool is_one() const { return coeffs_ == 1; }
  constexpr int degree() const { return coeffs_ == 0 ? kZeroDegree : 63 - std::countl_zero(coeffs_); }
  constexpr bool coeff(int i) const { return i >= 0 && i <= kMaxDegree && ((coeffs_ >> i) & 1U); }
  constexpr int weight() const { return std::popcount(coeffs_); }

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly{a.coeffs_ ^ b.coeffs_}; }
  Gf2Poly& operator+=(Gf2Poly o) {
    coeffs_ ^= o.coeffs_;
    return *this;
  }

  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly{};
    if (a.degree() + b.degree() > kMaxDegree) throw std::overflow_error("Gf2Poly: product degree exceeds 63");
    std::uint64_t r = 0;
    std::uint64_t bb = b.coeffs_;
    for (int i = 0; bb != 0; ++i, bb >>= 1) {
      if (bb & 1U) r ^= a.coeffs_ << i;
    }
    return Gf2Poly{r};
  }

  /// Returns (quotient, remainder) with deg(remainder) < deg(divisor).
  friend std::pair<Gf2Poly, Gf2Poly> divmod(Gf2Poly a, Gf2Poly b) {
    if (b.is_zero()) throw std::domain_error("Gf2Poly: division by zero polynomial");
    std::uint64_t q = 0;
    std::uint64_t r = a.coeffs_;
    const int db = b.degree();
    while (r != 0) {
      const int dr = 63 - std::countl_zero(r);
      if (dr < db) break;
      q |= std::uint64_t{1} << (dr - db);
      r ^= b.coeffs_ << (dr - db);
    }
    return {Gf2Poly{q}, Gf2Poly{r}};
  }
  friend Gf2Poly operator/(Gf2Poly a, Gf2Poly b) { return divmod(a, b).first; }
  friend Gf2Poly operator%(Gf2Poly a, Gf2Poly b) { return divmod(a, b).second; }

  friend constexpr bool operator==(Gf2Poly a, Gf2Poly b) = default;
  friend constexpr auto operator<=>(Gf2Poly a, Gf2Poly b) { return a.coeffs_ <=> b.coeffs_; }

  bool divides(Gf2Poly other) const { return (other % *this).is_zero(); }

  /// "X^3+X+1" style; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (!coeff(i)) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += '1';
      } else if (i == 1) {
        out += 'X';
      } else {
        out += "X^" + std::to_string(i);
      }
    }
    return out;
  }

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (coeffs_ == 0) return "0";
    std::string out;
    for (std::uint64_t v = coeffs_; v != 0; v >>= 4) out.insert(out.begin(), kDigits[v & 0xF]);
    return out;
  }

  /// Accepts "X^6+X^4+X^3+X+1" (case-insensitive, spaces ignored) or a hex
  /// coefficient word with a 0x prefix.
  static Gf2Poly parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (s.empty()) throw std::invalid_argument("Gf2Poly::parse: empty input");
    if (s.rfind("0x", 0) == 0) {
      std::size_t used = 0;
      const auto v = std::stoull(s.substr(2), &used, 16);
      if (used != s.size() - 2) throw std::invalid_argument("Gf2Poly::parse: bad hex '" + s + "'");
      return Gf2Poly{v};
    }
    std::uint64_t acc = 0;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto next = s.find('+', pos);
      const std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      int exp = 0;
      if (term == "1") {
        exp = 0;
      } else if (term == "0") {
        exp = -1;
      } else if (term == "x") {
        exp = 1;
      } else if (term.rfind("x^", 0) == 0 && term.size() > 2) {
        std::size_t used = 0;
        exp = std::stoi(term.substr(2), &used);
        if (used != term.size() - 2) throw std::invalid_argument("Gf2Poly::parse: bad term '" + term + "'");
      } else {
        throw std::invalid_argument("Gf2Poly::parse: bad term '" + term + "'");
      }
      if (exp > kMaxDegree) throw std::out_of_range("Gf2Poly::parse: degree above 63");
      if (exp >= 0) acc ^= std::uint64_t{1} << exp;
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return Gf2Poly{acc};
  }

 private:
  std::uint64_t coeffs_ = 0;
};

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

inline Gf2Poly lcm(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly{};
  return (a / gcd(a, b)) * b;
}

inline Gf2Poly mul_mod(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
  // Degrees stay below 2*deg(m) <= 63 for the moduli used here (deg <= 31).
  return ((a % m) * (b % m)) % m;
}

inline Gf2Poly pow_mod(Gf2Poly base, std::uint64_t e, Gf2Poly m) {
  if (m.degree() > 31) throw std::out_of_range("pow_mod: modulus degree above 31");
  Gf2Poly result = Gf2Poly::one() % m;
  base = base % m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

inline Gf2Poly pow(Gf2Poly base, unsigned e) {
  Gf2Poly result = Gf2Poly::one();
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

/// Rabin test: f irreducible of degree d iff X^(2^d) = X mod f and
/// gcd(X^(2^(d/q)) - X, f) = 1 for every prime q | d.
inline bool is_irreducible(Gf2Poly f) {
  const int d = f.degree();
  if (f.is_zero() || d < 1) return false;
  if (d == 1) return true;
  if (d > 31) throw std::out_of_range("is_irreducible: degree above 31");
  auto frob = [&](int k) {
    Gf2Poly r = Gf2Poly::x();
    for (int i = 0; i < k; ++i) r = mul_mod(r, r, f);
    return r;
  };
  if (frob(d) != Gf2Poly::x() % f) return false;
  int rest = d;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    if (!gcd(frob(d / q) + Gf2Poly::x(), f).is_one()) return false;
  }
  return true;
}

/// Irreducible factorization by trial division; factors ascend by value.
inline std::vector<std::pair<Gf2Poly, int>> factor(Gf2Poly f) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<std::pair<Gf2Poly, int>> out;
  for (std::uint64_t c = 2; !f.is_one(); ++c) {
    const Gf2Poly g{c};
    if (2 * g.degree() > f.degree()) {
      out.emplace_back(f, 1);
      break;
    }
    if (!is_irreducible(g)) continue;
    int mult = 0;
    while (true) {
      auto [q, r] = divmod(f, g);
      if (!r.is_zero()) break;
      f = q;
      ++mult;
    }
    if (mult > 0) out.emplace_back(g, mult);
  }
  return out;
}

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q != 0) continue;
    out.push_back(q);
    while (v % q == 0) v /= q;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace detail

/// Multiplicative order of X modulo f, f(0) = 1. For f = prod g_j^e_j this
/// is lcm(ord(g_j) * 2^ceil(log2 e_j)).
inline std::uint64_t order_of_x(Gf2Poly f) {
  const int d = f.degree();
  if (d < 1 || !f.coeff(0)) throw std::invalid_argument("order_of_x: need f(0) = 1 and degree >= 1");
  if (!is_irreducible(f)) {
    std::uint64_t ord = 1;
    for (auto [g, e] : factor(f)) {
      int shift = 0;
      while ((1 << shift) < e) ++shift;
      ord = std::lcm(ord, order_of_x(g) << shift);
    }
    return ord;
  }
  std::uint64_t ord = (std::uint64_t{1} << d) - 1;
  for (auto q : detail::prime_factors(ord)) {
    while (ord % q == 0 && pow_mod(Gf2Poly::x(), ord / q, f).is_one()) ord /= q;
  }
  return ord;
}

}  // namespace apnle
