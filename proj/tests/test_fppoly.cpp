#include <gtest/gtest.h>

#include <random>
#include <set>

#include "reciplab/fppoly.hpp"

using namespace reciplab;

namespace {

std::vector<FpPoly> all_monic(std::uint64_t p, long deg) {
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
  c.back() = 1;
  for (;;) {
    out.push_back(FpPoly(p, c));
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(deg) && ++c[i] == p) c[i++] = 0;
    if (i == static_cast<std::size_t>(deg)) break;
  }
  return out;
}

bool trial_division_irreducible(const FpPoly& a) {
  if (a.degree() < 1) return false;
  for (long d = 1; 2 * d <= a.degree(); ++d)
    for (const auto& g : all_monic(a.p, d))
      if ((a % g).is_zero()) return false;
  return true;
}

FpPoly random_fp(std::mt19937_64& rng, std::uint64_t p, long deg) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rng() % p;
  if (c.back() == 0) c.back() = 1;
  return FpPoly(p, c);
}

}  // namespace

TEST(FpPoly, RejectsNonPrimeModulus) {
  EXPECT_THROW(FpPoly(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(FpPoly(1, {1}), std::invalid_argument);
}

TEST(FpPoly, DivremExamples) {
  auto [q1, r1] = fp_divrem(FpPoly(3, {1, 0, 1}), FpPoly(3, {0, 1}));
  EXPECT_EQ(q1, FpPoly(3, {0, 1}));
  EXPECT_EQ(r1, FpPoly(3, {1}));
  auto [q2, r2] = fp_divrem(FpPoly(2, {0, 0, 0, 1}), FpPoly(2, {0, 0, 0, 1}));
  EXPECT_EQ(q2, FpPoly(2, {1}));
  EXPECT_TRUE(r2.is_zero());
  auto [q3, r3] = fp_divrem(FpPoly(3, {1, 0, 2, 0, 1}), FpPoly(3, {1, 0, 1}));
  EXPECT_EQ(q3, FpPoly(3, {1, 0, 1}));
  EXPECT_TRUE(r3.is_zero());
  EXPECT_THROW(fp_divrem(FpPoly(3, {1}), FpPoly::zero(3)), DivisionByZeroPoly);
  EXPECT_THROW(fp_divrem(FpPoly(3, {1}), FpPoly(5, {1})), ModulusMismatch);
}

TEST(FpPoly, DivremIdentityRandom) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 101}[rng() % 5];
    FpPoly a = random_fp(rng, p, static_cast<long>(rng() % 90));
    FpPoly b = random_fp(rng, p, static_cast<long>(rng() % 80));
    auto [q, r] = fp_divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(FpPoly, KaratsubaAgreesWithSchoolbook) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    std::uint64_t p = 1000003;
    FpPoly a = random_fp(rng, p, 60 + static_cast<long>(rng() % 200));
    FpPoly b = random_fp(rng, p, 60 + static_cast<long>(rng() % 200));
    FpPoly prod = a * b;
    // schoolbook oracle written out here
    std::vector<std::uint64_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        c[i + j] = static_cast<std::uint64_t>((c[i + j] + static_cast<unsigned __int128>(a.coeffs[i]) * b.coeffs[j]) % p);
    EXPECT_EQ(prod, FpPoly(p, c));
  }
}

TEST(FpPoly, GcdExamples) {
  EXPECT_EQ(fp_gcd(FpPoly(5, {-1, 0, 1}), FpPoly(5, {-1, 1})), FpPoly(5, {4, 1}));
  EXPECT_TRUE(fp_gcd(FpPoly(2, {0, 1}), FpPoly(2, {1, 1})).is_one());
  EXPECT_TRUE(fp_gcd(chebyshev(3, 5), chebyshev(4, 5)).is_one());
  EXPECT_THROW(fp_gcd(FpPoly(3, {1}), FpPoly(5, {1})), ModulusMismatch);
}

TEST(FpPoly, FactorExamples) {
  auto f1 = fp_factor(FpPoly(3, {1, 1, 1}));
  ASSERT_EQ(f1.factors.size(), 1u);
  EXPECT_EQ(f1.factors[0].first, FpPoly(3, {2, 1}));
  EXPECT_EQ(f1.factors[0].second, 2);

  auto f2 = fp_factor(FpPoly(3, {1, 0, 1}));
  ASSERT_EQ(f2.factors.size(), 1u);
  EXPECT_EQ(f2.factors[0].first, FpPoly(3, {1, 0, 1}));

  auto f3 = fp_factor(FpPoly(5, {-1, 0, 0, 0, 1}));
  std::set<FpPoly> got;
  for (const auto& [g, e] : f3.factors) {
    EXPECT_EQ(e, 1);
    got.insert(g);
  }
  EXPECT_EQ(got, (std::set<FpPoly>{FpPoly(5, {1, 1}), FpPoly(5, {2, 1}), FpPoly(5, {3, 1}), FpPoly(5, {4, 1})}));
}

TEST(FpPoly, FactorReassemblesWithIrreducibleParts) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 13}[rng() % 5];
    FpPoly a = random_fp(rng, p, 1 + static_cast<long>(rng() % 12));
    // repeated factors on purpose
    if (rng() % 3 == 0) a = a * a;
    std::mt19937_64 frng(t);
    auto f = fp_factor(a, frng);
    EXPECT_EQ(f.product(), a);
    for (const auto& [g, e] : f.factors) {
      EXPECT_EQ(g.coeffs.back(), 1u);
      if (g.degree() <= 6) EXPECT_TRUE(trial_division_irreducible(g)) << g.to_string();
    }
  }
}

TEST(FpPoly, IrreducibleExamples) {
  EXPECT_FALSE(fp_is_irreducible(FpPoly(2, {1, 0, 1})));
  EXPECT_TRUE(fp_is_irreducible(FpPoly(2, {1, 1, 1})));
  EXPECT_TRUE(fp_is_irreducible(FpPoly(2, {1, 1, 0, 0, 1})));
}

TEST(FpPoly, IrreducibleAgreesWithTrialDivision) {
  for (std::uint64_t p : {2, 3, 5})
    for (long d = 1; d <= (p == 2 ? 8 : p == 3 ? 5 : 4); ++d)
      for (const auto& a : all_monic(p, d)) EXPECT_EQ(fp_is_irreducible(a), trial_division_irreducible(a)) << a.to_string();
}

TEST(FpPoly, ChebyshevExamples) {
  EXPECT_EQ(chebyshev(0), (ZPoly{2}));
  EXPECT_EQ(chebyshev(2), (ZPoly{-2, 0, 1}));
  EXPECT_EQ(chebyshev(3), (ZPoly{0, -3, 0, 1}));
  EXPECT_EQ(chebyshev(-3), chebyshev(3));
}

TEST(FpPoly, CountExamples) {
  EXPECT_EQ(count_irreducible_reciprocal(3, 1), 1);
  EXPECT_EQ(count_irreducible_reciprocal(5, 1), 2);
  EXPECT_EQ(count_irreducible_reciprocal(2, 2), 1);
}

TEST(FpPoly, CountMatchesEnumerationWithTrialDivision) {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned long m = 1; m <= (p == 5 ? 3ul : 4ul); ++m) {
      long brute = 0;
      for (const auto& a : enumerate_reciprocal_mod_p(p, m)) brute += trial_division_irreducible(a);
      EXPECT_EQ(count_irreducible_reciprocal(p, m), brute) << "p=" << p << " m=" << m;
    }
}

TEST(FpPoly, EnumerateReciprocal) {
  auto e = enumerate_reciprocal_mod_p(2, 1);
  EXPECT_EQ(std::set<FpPoly>(e.begin(), e.end()), (std::set<FpPoly>{FpPoly(2, {1, 0, 1}), FpPoly(2, {1, 1, 1})}));
  EXPECT_EQ(enumerate_reciprocal_mod_p(3, 1).size(), 3u);
  auto e4 = enumerate_reciprocal_mod_p(2, 2);
  EXPECT_EQ(e4.size(), 4u);
  for (const auto& a : e4) {
    EXPECT_EQ(a.degree(), 4);
    EXPECT_EQ(reversal(a), a);
  }
  EXPECT_THROW(enumerate_reciprocal_mod_p(2, 30, 1000), CapExceeded);
}
