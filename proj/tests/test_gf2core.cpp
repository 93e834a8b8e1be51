#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "apnle/linalg.hpp"

using namespace apnle;

namespace {

Gf2Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  for (auto& r : rows) r = static_cast<std::uint32_t>(rng()) & ((n == 32) ? 0xFFFFFFFFU : ((1U << n) - 1));
  return Gf2Matrix::from_rows(rows);
}

Gf2Matrix random_invertible(int n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(n, rng);
    if (m.is_invertible()) return m;
  }
}

// Schoolbook product straight from the entry definition.
Gf2Matrix naive_product(const Gf2Matrix& a, const Gf2Matrix& b) {
  const int n = a.dim();
  Gf2Matrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool v = false;
      for (int k = 0; k < n; ++k) v ^= a.get(i, k) && b.get(k, j);
      c.set(i, j, v);
    }
  }
  return c;
}

std::vector<Gf2Matrix> all_matrices(int n) {
  std::vector<Gf2Matrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>((bits >> (i * n)) & ((1U << n) - 1));
    out.push_back(Gf2Matrix::from_rows(rows));
  }
  return out;
}

bool irreducible_by_trial_division(std::uint64_t f) {
  const int d = Gf2Poly{f}.degree();
  if (d < 1) return false;
  for (std::uint64_t g = 2; Gf2Poly{g}.degree() <= d / 2; ++g) {
    if ((Gf2Poly{f} % Gf2Poly{g}).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(Gf2Poly, DivmodReconstructs) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    Gf2Poly a{rng() & 0xFFFFFFFFULL};
    Gf2Poly b{(rng() & 0xFFFFULL) | 1U};
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
  }
}

TEST(Gf2Poly, DivisionByZeroThrows) { EXPECT_THROW(divmod(Gf2Poly{5}, Gf2Poly{}), std::domain_error); }

TEST(Gf2Poly, GcdDividesBoth) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    Gf2Poly a{rng() & 0xFFFFF};
    Gf2Poly b{rng() & 0xFFFFF};
    Gf2Poly c{(rng() & 0xFF) | 1};
    const auto g = gcd(a * c, b * c);
    if (g.is_zero()) continue;
    EXPECT_TRUE(g.divides(a * c));
    EXPECT_TRUE(g.divides(b * c));
    if (!c.is_zero()) {
      EXPECT_TRUE(c.divides(g));
    }
  }
}

TEST(Gf2Poly, IrreducibilityMatchesTrialDivision) {
  for (std::uint64_t f = 2; f < (1U << 11); ++f) {
    EXPECT_EQ(is_irreducible(Gf2Poly{f}), irreducible_by_trial_division(f)) << Gf2Poly{f}.to_string();
  }
}

TEST(Gf2Poly, FactorisationMultipliesBack) {
  for (std::uint64_t f = 2; f < (1U << 12); f += 3) {
    Gf2Poly prod = Gf2Poly::one();
    for (auto [g, e] : factor(Gf2Poly{f})) {
      EXPECT_TRUE(is_irreducible(g));
      prod = prod * pow(g, static_cast<unsigned>(e));
    }
    EXPECT_EQ(prod, Gf2Poly{f});
  }
}

TEST(Gf2Poly, OrderOfXMatchesIteration) {
  for (std::uint64_t f = 3; f < (1U << 10); f += 2) {
    const Gf2Poly q{f};
    if (q.degree() < 1) continue;
    Gf2Poly x = Gf2Poly::x() % q;
    std::uint64_t k = 1;
    while (!(x == Gf2Poly::one())) {
      x = mul_mod(x, Gf2Poly::x(), q);
      ++k;
      ASSERT_LT(k, 5000U);
    }
    EXPECT_EQ(order_of_x(q), k) << q.to_string();
  }
}

TEST(Gf2Poly, ParseRoundTrip) {
  for (std::uint64_t f = 1; f < 600; ++f) {
    const Gf2Poly q{f};
    EXPECT_EQ(Gf2Poly::parse(q.to_string()), q);
    EXPECT_EQ(Gf2Poly::parse("0x" + q.to_hex()), q);
  }
  EXPECT_THROW(Gf2Poly::parse(""), std::invalid_argument);
  EXPECT_THROW(Gf2Poly::parse("X^2+Y"), std::invalid_argument);
}

TEST(Gf2Matrix, ProductMatchesEntryDefinition) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 9; ++n) {
    for (int it = 0; it < 50; ++it) {
      auto a = random_matrix(n, rng);
      auto b = random_matrix(n, rng);
      EXPECT_EQ(a * b, naive_product(a, b));
      const BitVec x = static_cast<BitVec>(rng()) & ((1U << n) - 1);
      EXPECT_EQ((a * b).apply(x), a.apply(b.apply(x)));
    }
  }
}

TEST(Gf2Matrix, InverseAndRank) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 12; ++n) {
    for (int it = 0; it < 30; ++it) {
      auto m = random_invertible(n, rng);
      EXPECT_EQ(m * m.inverse(), Gf2Matrix::identity(n));
      EXPECT_EQ(m.rank(), n);
      EXPECT_EQ(m.transpose().transpose(), m);
    }
  }
  Gf2Matrix z(4);
  EXPECT_THROW(z.inverse(), std::domain_error);
  EXPECT_EQ(z.rank(), 0);
}

TEST(Gf2Matrix, RankMatchesImageSize) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto m = random_matrix(n, rng);
    std::set<BitVec> img;
    for (BitVec x = 0; x < (1U << n); ++x) img.insert(m.apply(x));
    EXPECT_EQ(img.size(), std::size_t{1} << m.rank());
    EXPECT_EQ(kernel_basis(m).size(), static_cast<std::size_t>(n - m.rank()));
    for (auto v : kernel_basis(m)) EXPECT_EQ(m.apply(v), 0U);
  }
}

TEST(Gf2Matrix, CompanionAnnihilatedByItsPolynomial) {
  for (std::uint64_t f = 3; f < 512; f += 2) {
    const Gf2Poly q{f};
    const auto c = Gf2Matrix::companion(q);
    EXPECT_EQ(c.dim(), q.degree());
    EXPECT_TRUE(evaluate(q, c).is_zero());
    EXPECT_EQ(minimal_polynomial(c), q);
  }
  EXPECT_THROW(Gf2Matrix::companion(Gf2Poly{0b110}), std::invalid_argument);
  EXPECT_THROW(Gf2Matrix::companion(Gf2Poly{1}), std::invalid_argument);
}

TEST(Gf2Matrix, HexRowsRoundTrip) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 16; ++n) {
    auto m = random_matrix(n, rng);
    EXPECT_EQ(Gf2Matrix::parse_hex_rows(m.to_hex_rows(',')), m);
  }
  EXPECT_THROW(Gf2Matrix::parse_hex_rows("1,zz"), std::invalid_argument);
}

TEST(Linalg, MinimalPolynomialIsMinimal) {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto m = random_matrix(n, rng);
    const auto mu = minimal_polynomial(m);
    EXPECT_TRUE(evaluate(mu, m).is_zero());
    for (auto [g, e] : factor(mu)) EXPECT_FALSE(evaluate(mu / g, m).is_zero());
  }
}

TEST(Linalg, RcfInvariantFactorsFormDivisibilityChain) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto m = random_invertible(n, rng);
    const auto r = rcf(m);
    int deg = 0;
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
      deg += r.invariant_factors[i].degree();
      if (i + 1 < r.invariant_factors.size()) {
        EXPECT_TRUE(r.invariant_factors[i].divides(r.invariant_factors[i + 1]));
      }
    }
    EXPECT_EQ(deg, n);
    EXPECT_EQ(r.invariant_factors.back(), minimal_polynomial(m));
    EXPECT_EQ(rcf(r.matrix).matrix, r.matrix);
    EXPECT_EQ(r.matrix, rcf_from_invariants(r.invariant_factors));
  }
}

TEST(Linalg, SimilarityMatchesConjugationOrbitsInDimensionThree) {
  std::vector<Gf2Matrix> gl;
  for (const auto& m : all_matrices(3)) {
    if (m.is_invertible()) gl.push_back(m);
  }
  ASSERT_EQ(gl.size(), 168U);
  std::map<Gf2Matrix, int> cls;
  int next = 0;
  for (const auto& m : gl) {
    if (cls.count(m)) continue;
    for (const auto& g : gl) cls[g * m * g.inverse()] = next;
    ++next;
  }
  EXPECT_EQ(next, 6);  // conjugacy classes of GL(3, 2)
  for (std::size_t i = 0; i < gl.size(); i += 7) {
    for (std::size_t j = 0; j < gl.size(); j += 5) {
      EXPECT_EQ(is_similar(gl[i], gl[j]), cls[gl[i]] == cls[gl[j]]);
    }
  }
}

TEST(Linalg, OrderMatchesPowerIteration) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto m = random_invertible(n, rng);
    std::uint64_t k = 1;
    for (Gf2Matrix p = m; !p.is_identity(); p = p * m) ++k;
    EXPECT_EQ(order(m), k);
    for (BitVec x = 0; x < (1U << n); x += 3) {
      std::uint64_t j = 1;
      for (BitVec y = m.apply(x); y != x; y = m.apply(y)) ++j;
      EXPECT_EQ(point_order(m, x), j);
    }
  }
  EXPECT_THROW(order(Gf2Matrix(3)), std::domain_error);
}

TEST(Linalg, FixedSpaceMatchesPointScan) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto m = random_invertible(n, rng);
    for (std::uint64_t i : {1ULL, 2ULL, 3ULL}) {
      const auto fs = fixed_space(m, i);
      const auto mi = m.pow(i);
      std::size_t count = 0;
      for (BitVec x = 0; x < (1U << n); ++x) count += mi.apply(x) == x;
      EXPECT_EQ(count, std::size_t{1} << fs.dim);
      for (auto v : fs.basis) EXPECT_EQ(mi.apply(v), v);
    }
  }
}

TEST(Linalg, CommutantMatchesBruteForceInDimensionThree) {
  const auto all = all_matrices(3);
  for (const auto& m : all) {
    if (!m.is_invertible()) continue;
    std::vector<Gf2Matrix> brute;
    for (const auto& x : all) {
      if (x.is_invertible() && x * m == m * x) brute.push_back(x);
    }
    std::sort(brute.begin(), brute.end());
    const auto c = commutant(m, kUnboundedBudget);
    EXPECT_TRUE(c.exhaustive);
    EXPECT_EQ(c.elements, brute);
  }
}

TEST(Linalg, CommutantMatchesBruteForceInDimensionFour) {
  const auto all = all_matrices(4);
  for (const char* q : {"X^4+X+1", "X^4+X^3+X^2+X+1", "X^2+X+1"}) {
    Gf2Matrix m = Gf2Matrix::companion(Gf2Poly::parse(q));
    if (m.dim() == 2) m = Gf2Matrix::direct_sum(m, m);
    std::vector<Gf2Matrix> brute;
    for (const auto& x : all) {
      if (x * m == m * x && x.is_invertible()) brute.push_back(x);
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(commutant(m, kUnboundedBudget).elements, brute) << q;
  }
}

TEST(Linalg, CommutantBudgetSamplesCommutingElements) {
  const auto m = Gf2Matrix::identity(8);
  const auto c = commutant(m, 100, 9);
  EXPECT_FALSE(c.exhaustive);
  EXPECT_EQ(c.elements.size(), 100U);
  for (const auto& x : c.elements) {
    EXPECT_TRUE(x.is_invertible());
    EXPECT_EQ(x * m, m * x);
  }
}

// Extendable iff restricting the commutant to Ord(M, 1) reaches all of GL(k).
TEST(Linalg, ExtendabilityMatchesRestrictionCount) {
  const auto all = all_matrices(3);
  std::vector<Gf2Matrix> gl;
  for (const auto& m : all) {
    if (m.is_invertible()) gl.push_back(m);
  }
  const std::map<int, std::size_t> gl_size{{0, 1}, {1, 1}, {2, 6}, {3, 168}};
  for (const auto& m : gl) {
    const auto fs = fixed_space(m, 1);
    std::set<std::vector<BitVec>> restrictions;
    for (const auto& x : gl) {
      if (!(x * m == m * x)) continue;
      std::vector<BitVec> img;
      for (auto v : fs.basis) img.push_back(x.apply(v));
      restrictions.insert(img);
    }
    EXPECT_EQ(is_extendable(m), restrictions.size() == gl_size.at(fs.dim)) << m.to_hex_rows(',');
  }
  const auto j2 = Gf2Matrix::companion(Gf2Poly::parse("X^2+1"));
  EXPECT_FALSE(is_extendable(Gf2Matrix::direct_sum(Gf2Matrix::identity(1), j2)));
  EXPECT_TRUE(is_extendable(block_diagonal({j2, j2, j2})));
}
