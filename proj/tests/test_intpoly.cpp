#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "reciplab/intpoly.hpp"
#include "reciplab/zfactor.hpp"

using namespace reciplab;

namespace {

ZPoly random_poly(std::mt19937_64& rng, long deg, long lo, long hi, bool monic = false) {
  std::uniform_int_distribution<long> c(lo, hi);
  std::vector<mpz_class> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = c(rng);
  if (monic) v.back() = 1;
  while (v.back() == 0) v.back() = c(rng);
  return ZPoly(v);
}

// Sylvester determinant by fraction-field elimination
mpz_class sylvester_resultant(const ZPoly& p, const ZPoly& q) {
  long m = p.degree(), n = q.degree();
  std::size_t N = static_cast<std::size_t>(m + n);
  if (N == 0) return 1;
  std::vector<std::vector<mpq_class>> M(N, std::vector<mpq_class>(N, 0));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i) M[r][r + (m - i)] = p.coeff(i);
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) M[n + r][r + (n - i)] = q.coeff(i);
  mpq_class det = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && M[piv][c] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t r = c + 1; r < N; ++r) {
      mpq_class f = M[r][c] / M[c][c];
      for (std::size_t k = c; k < N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det.get_num();
}

long long eval_ll(const std::vector<long long>& c, long long x) {
  long long v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// trial division by monic integer candidates, coefficients bounded by binom(k,i)*||P||_2
bool brute_irreducible_monic(const ZPoly& P) {
  long n = P.degree();
  if (n <= 1) return n == 1;
  if (P.coeff(0) == 0) return false;
  mpz_class norm2 = 0;
  for (const auto& c : P.coeffs) norm2 += c * c;
  long norm = static_cast<long>(std::ceil(std::sqrt(norm2.get_d())));
  long long p0 = std::abs(P.coeff(0).get_si());
  std::vector<long long> pvals;
  for (long x : {1, -1, 2, -2, 3}) pvals.push_back(evaluate(P, x).get_si());
  for (long k = 1; k <= n / 2; ++k) {
    std::vector<long> bound(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
      bound[i] = b.get_si() * norm;
    }
    std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
    c[k] = 1;
    std::vector<long long> divs;
    for (long long d = 1; d <= p0; ++d)
      if (p0 % d == 0) divs.push_back(d), divs.push_back(-d);
    std::function<bool(long)> rec = [&](long i) -> bool {
      if (i == k) {
        for (std::size_t t = 0; t < pvals.size(); ++t) {
          long long x = std::vector<long long>{1, -1, 2, -2, 3}[t];
          long long cv = eval_ll(c, x);
          if (cv == 0 ? pvals[t] != 0 : pvals[t] % cv != 0) return false;
        }
        std::vector<mpz_class> z;
        for (long long v : c) z.emplace_back(static_cast<long>(v));
        return divide_exact(P, ZPoly(z)).has_value();
      }
      if (i == 0) {
        for (long long d : divs) {
          c[0] = d;
          if (rec(1)) return true;
        }
        return false;
      }
      for (long v = -bound[i]; v <= bound[i]; ++v) {
        c[i] = v;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return false;
  }
  return true;
}

}  // namespace

TEST(IntPoly, EvaluateExamples) {
  EXPECT_EQ(evaluate(ZPoly{1, 1, 1}, 1), 3);
  EXPECT_EQ(evaluate(ZPoly{}, 5), 0);
  EXPECT_EQ(evaluate(ZPoly{1, 2, 3, 2, 1}, -1), 1);
}

TEST(IntPoly, ResultantExamples) {
  EXPECT_EQ(resultant(ZPoly{-2, 1}, ZPoly{-5, 1}), -3);
  EXPECT_EQ(resultant(ZPoly{1, 0, 1}, ZPoly{0, 1}), 1);
  EXPECT_EQ(resultant(ZPoly{-1, 0, 1}, ZPoly{-4, 0, 1}), 9);
  EXPECT_THROW(resultant(ZPoly{}, ZPoly{1, 1}), std::exception);
}

TEST(IntPoly, ResultantMatchesSylvesterAndSwapSign) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    ZPoly p = random_poly(rng, 1 + static_cast<long>(rng() % 8), -9, 9);
    ZPoly q = random_poly(rng, 1 + static_cast<long>(rng() % 8), -9, 9);
    mpz_class r = resultant(p, q);
    EXPECT_EQ(r, sylvester_resultant(p, q));
    long sgn = (p.degree() * q.degree()) % 2 ? -1 : 1;
    EXPECT_EQ(sgn * r, resultant(q, p));
  }
}

TEST(IntPoly, DiscriminantExamples) {
  EXPECT_EQ(discriminant(ZPoly{1, 1, 1}), -3);
  EXPECT_EQ(discriminant(ZPoly{0, -1, 0, 1}), 4);
  EXPECT_EQ(discriminant(ZPoly{1, 1, 1, 1, 1}), 125);
  EXPECT_THROW(discriminant(ZPoly{7}), std::exception);
}

TEST(IntPoly, DiscriminantOfCyclotomicPrime) {
  // disc(Phi_p) = (-1)^{(p-1)/2} p^{p-2}
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    mpz_class want = ipow(p, p - 2);
    if (((p - 1) / 2) % 2) want = -want;
    EXPECT_EQ(discriminant(cyclotomic(p)), want) << p;
  }
}

TEST(IntPoly, DiscriminantOfProduct) {
  std::mt19937_64 rng(2);
  int done = 0;
  while (done < 200) {
    ZPoly p = random_poly(rng, 1 + static_cast<long>(rng() % 6), -9, 9, true);
    ZPoly q = random_poly(rng, 1 + static_cast<long>(rng() % 6), -9, 9, true);
    mpz_class r = resultant(p, q);
    if (r == 0) continue;
    EXPECT_EQ(discriminant(p * q), discriminant(p) * discriminant(q) * r * r);
    ++done;
  }
}

TEST(IntPoly, NonzeroSquare) {
  EXPECT_TRUE(is_nonzero_square(49));
  EXPECT_FALSE(is_nonzero_square(0));
  EXPECT_FALSE(is_nonzero_square(-4));
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 3001);
  EXPECT_FALSE(is_nonzero_square(big));
  EXPECT_TRUE(is_nonzero_square(big * big));
  EXPECT_FALSE(is_nonzero_square(big * big + 1));
  EXPECT_FALSE(is_nonzero_square(big * big - 1));
}

TEST(ZFactor, Examples) {
  auto f = factor_over_Z(ZPoly{-1, 0, 0, 0, 1});
  ASSERT_EQ(f.factors.size(), 3u);
  std::set<std::string> got;
  for (const auto& [g, e] : f.factors) {
    EXPECT_EQ(e, 1);
    got.insert(g.to_string());
  }
  EXPECT_EQ(got, (std::set<std::string>{"T - 1", "T + 1", "T^2 + 1"}));

  auto g = factor_over_Z(ZPoly{1, 0, 0, 0, 1});
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_EQ(g.factors[0].first, (ZPoly{1, 0, 0, 0, 1}));

  ZPoly q{1, 3, 1};
  auto h = factor_over_Z(q * q);
  ASSERT_EQ(h.factors.size(), 1u);
  EXPECT_EQ(h.factors[0].first, q);
  EXPECT_EQ(h.factors[0].second, 2);
}

TEST(ZFactor, DegreeCap) {
  EXPECT_THROW(factor_over_Z(ZPoly::monomial(130) + ZPoly{1, 1}), DegreeCapExceeded);
}

TEST(ZFactor, ProductsOfIrreduciblesRemultiply) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    ZPoly prod = ZPoly::constant(static_cast<long>(1 + rng() % 3) * ((rng() & 1) ? -1 : 1));
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) prod = prod * random_poly(rng, 1 + static_cast<long>(rng() % 4), -5, 5);
    auto f = factor_over_Z(prod);
    EXPECT_EQ(f.product(), prod);
    for (const auto& [g, e] : f.factors) {
      EXPECT_GT(g.lc(), 0);
      EXPECT_EQ(content(g), 1);
    }
  }
}

TEST(ZFactor, IrreducibilityExamples) {
  EXPECT_TRUE(is_irreducible_over_Z(ZPoly{1, 1, 1}));
  EXPECT_FALSE(is_irreducible_over_Z(ZPoly{-1, 0, 1}));
  EXPECT_TRUE(is_irreducible_over_Z(ZPoly{1, 1, 1, 1, 1}));
}

TEST(ZFactor, IrreducibilityAgreesWithTrialDivision) {
  std::mt19937_64 rng(4);
  int reducible = 0;
  for (int t = 0; t < 300; ++t) {
    ZPoly p = random_poly(rng, 2 + static_cast<long>(rng() % 5), -3, 3, true);
    bool brute = brute_irreducible_monic(p);
    EXPECT_EQ(is_irreducible_over_Z(p), brute) << p.to_string();
    reducible += !brute;
  }
  EXPECT_GT(reducible, 20);
}

TEST(IntPoly, Cyclotomic) {
  EXPECT_EQ(cyclotomic(4), (ZPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_divisor_scan(ZPoly{-1, 0, 0, 0, 1}, 2), (std::vector<unsigned long>{1, 2, 4}));
  EXPECT_EQ(cyclotomic_divisor_scan(ZPoly{1, 1, 1, 1, 1}, 2), (std::vector<unsigned long>{5}));
  // product over d | n of Phi_d is T^n - 1
  for (unsigned long n = 1; n <= 30; ++n) {
    ZPoly prod = ZPoly::constant(1);
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, ZPoly::monomial(n) - ZPoly::constant(1));
    EXPECT_EQ(static_cast<unsigned long>(cyclotomic(n).degree()), euler_phi(n));
  }
}
