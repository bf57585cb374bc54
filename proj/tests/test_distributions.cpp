#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "reciplab/distributions.hpp"

using namespace reciplab;

namespace {

using Law = std::map<std::vector<FpPoly>, mpq_class>;

// every coefficient vector in the support, with its probability
template <class F>
void for_each_outcome(const MeasureSeq& mus, long m, F&& f) {
  std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
  half[static_cast<std::size_t>(m)] = 1;
  std::function<void(long, mpq_class)> rec = [&](long j, mpq_class w) {
    if (j == m) {
      f(make_zrec(half).expand(), w);
      return;
    }
    for (const auto& [x, pw] : mus[static_cast<std::size_t>(j)].atoms) {
      half[static_cast<std::size_t>(j)] = static_cast<long>(x);
      rec(j + 1, w * pw);
    }
  };
  rec(0, mpq_class(1));
}

// law of (A mod D_1, ..., A mod D_r) by direct reduction of each full polynomial
Law brute_law(const MeasureSeq& mus, long m, const std::vector<FpPoly>& Ds) {
  Law law;
  for_each_outcome(mus, m, [&](const ZPoly& A, const mpq_class& w) {
    std::vector<FpPoly> key;
    for (const auto& d : Ds) key.push_back(FpPoly(d.p, A) % d);
    law[key] += w;
  });
  return law;
}

mpq_class brute_delta_one_prime(const MeasureSeq& mus, long m, std::uint64_t p, std::size_t kmax) {
  mpq_class total = 0;
  for (const auto& d : reciprocal_moduli(p, kmax)) {
    if (d.degree() == 0) continue;
    if (p == 2 && (d % FpPoly(2, {1, 0, 1})).is_zero()) continue;
    auto law = brute_law(mus, m, {d});
    mpq_class target(1, static_cast<unsigned long>(std::pow(p, d.degree() / 2)));
    mpq_class best = 0;
    for (const auto& c : rm_set(d, m)) {
      auto it = law.find({c % d});
      mpq_class got = it == law.end() ? mpq_class(0) : it->second;
      best = std::max<mpq_class>(best, abs(got - target));
    }
    total += best;
  }
  return total;
}

MeasureSeq lopsided(long m) { return MeasureSeq::broadcast(Measure({{0, mpq_class(1, 2)}, {1, mpq_class(1, 3)}, {5, mpq_class(1, 6)}}), m); }

}  // namespace

TEST(Measure, Validation) {
  EXPECT_THROW(Measure({{0, mpq_class(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(Measure({{0, mpq_class(-1, 2)}, {1, mpq_class(3, 2)}}), std::invalid_argument);
  EXPECT_THROW(Measure({{100, mpq_class(1)}}, 10), std::invalid_argument);
  EXPECT_THROW(Measure::uniform(3, 2), std::invalid_argument);
  auto u = Measure::uniform(-2, 2);
  EXPECT_EQ(u.mod(3), (std::vector<mpq_class>{mpq_class(1, 5), mpq_class(2, 5), mpq_class(2, 5)}));
  EXPECT_EQ(u.concentration(3), mpq_class(2, 5));
}

TEST(Fourier, Examples) {
  EXPECT_NEAR(std::abs(fourier(Measure::dirac(0), 3, 7) - std::complex<double>(1, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(fourier(Measure::uniform(0, 1), 1, 2)), 0, 1e-15);
  Measure pm({{-1, mpq_class(1, 2)}, {1, mpq_class(1, 2)}});
  EXPECT_NEAR(std::abs(fourier(pm, 1, 4)), 0, 1e-15);
  EXPECT_NEAR(std::abs(fourier(pm, 0.25)), 0, 1e-15);
  EXPECT_NEAR(std::abs(fourier(pm, mpq_class(1, 4))), 0, 1e-15);
}

TEST(Fourier, AgreesWithDirectSum) {
  std::mt19937_64 rng(20);
  Measure mu({{-7, mpq_class(1, 5)}, {3, mpq_class(1, 2)}, {11, mpq_class(3, 10)}});
  for (int t = 0; t < 200; ++t) {
    long long den = 1 + static_cast<long long>(rng() % 1000), num = static_cast<long long>(rng() % 5000) - 2500;
    std::complex<double> want = 0;
    for (const auto& [a, w] : mu.atoms) want += w.get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(a * num) / static_cast<double>(den));
    EXPECT_NEAR(std::abs(fourier(mu, num, den) - want), 0, 1e-9);
  }
}

TEST(FourierCondition, DiracFailsEverywhere) {
  auto r = check_fourier_condition(MeasureSeq::broadcast(Measure::dirac(0), 3), {2, 3, 5, 7}, 1e9);
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.worst, r.bound);
}

TEST(FourierCondition, TwoPointMeasureFails) {
  EXPECT_FALSE(check_fourier_condition(MeasureSeq::broadcast(Measure::uniform(0, 1), 2), {2, 3, 5, 7}, 2).ok);
}

TEST(FourierCondition, Uniform35DependsOnM) {
  auto mus = MeasureSeq::broadcast(Measure::uniform(0, 34), 4);
  auto small = check_fourier_condition(mus, {2, 3, 5, 7}, 1e4);
  EXPECT_FALSE(small.ok) << small.worst << " vs " << small.bound;
  auto huge = check_fourier_condition(mus, {2, 3, 5, 7}, 1e22);
  EXPECT_TRUE(huge.ok) << huge.worst << " vs " << huge.bound;
  EXPECT_FALSE(search_fourier_primes(mus, 1e4, 4, 13).has_value());
  auto found = search_fourier_primes(mus, 1e22, 4, 13);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, (std::vector<std::uint64_t>{2, 3, 5, 7}));
}

TEST(FourierCondition, WorstMatchesDirectMaximum) {
  Measure mu = Measure::uniform(-2, 4);
  auto r = check_fourier_condition(MeasureSeq::broadcast(mu, 1), {2, 3, 5}, 100);
  double worst = 0;
  const long long P = 30;
  for (long long Q : {2, 3, 5, 6, 10, 15, 30}) {
    long long R = P / Q;
    for (long long l = 0; l < R; ++l) {
      double s = 0;
      for (long long k = 0; k < Q; ++k) {
        std::complex<double> z = 0;
        for (const auto& [a, w] : mu.atoms)
          z += w.get_d() * std::polar(1.0, 2 * M_PI * (static_cast<double>(a) * (static_cast<double>(k) / Q + static_cast<double>(l) / R)));
        s += std::abs(z);
      }
      worst = std::max(worst, s / std::sqrt(static_cast<double>(Q)));
    }
  }
  EXPECT_NEAR(r.worst, worst, 1e-9);
}

TEST(Sampler, DiracGivesFixedPolynomial) {
  std::mt19937_64 rng(1);
  auto A = sample_reciprocal(MeasureSeq::broadcast(Measure::dirac(0), 2), 2, rng);
  EXPECT_EQ(A.expand(), (ZPoly{1, 0, 0, 0, 1}));
}

TEST(Sampler, DeterministicPerStream) {
  auto mus = MeasureSeq::broadcast(Measure::uniform(-5, 5), 6);
  auto g1 = substream(42, 7), g2 = substream(42, 7), g3 = substream(42, 8);
  auto a = sample_reciprocal(mus, 6, g1).expand(), b = sample_reciprocal(mus, 6, g2).expand();
  EXPECT_EQ(a, b);
  bool differs = false;
  for (int t = 0; t < 5 && !differs; ++t) differs = sample_reciprocal(mus, 6, g3).expand() != sample_reciprocal(mus, 6, g1).expand();
  EXPECT_TRUE(differs);
}

TEST(Sampler, FrequenciesWithinFourSigma) {
  auto mus = MeasureSeq::broadcast(Measure::uniform(0, 1), 3);
  auto rng = substream(9, 0);
  const int N = 10000;
  std::vector<int> ones(3, 0);
  for (int t = 0; t < N; ++t) {
    auto A = sample_reciprocal(mus, 3, rng).expand();
    for (std::size_t j = 0; j < 3; ++j) ones[j] += A.coeff(3 + j) == 1;
  }
  double sd = std::sqrt(0.25 / N);
  for (int c : ones) EXPECT_LT(std::abs(c / double(N) - 0.5), 4 * sd);

  Measure skew({{-3, mpq_class(1, 3)}, {8, mpq_class(2, 3)}});
  MeasureSampler s(skew);
  int hits = 0;
  for (int t = 0; t < N; ++t) hits += s(rng) == 8;
  EXPECT_LT(std::abs(hits / double(N) - 2.0 / 3), 4 * std::sqrt(2.0 / 9 / N));
}

TEST(ModDLaw, UniformMod3OnTSquaredPlusOne) {
  auto mus = MeasureSeq::broadcast(Measure::uniform(0, 2), 2);
  FpPoly d(3, {1, 0, 1});
  auto law = exact_mod_D_distribution(mus, 2, d);
  EXPECT_EQ(law.total(), 1);
  for (long long c = 0; c < 3; ++c) EXPECT_EQ(law.at({FpPoly(3, {c})}), mpq_class(1, 3));
  EXPECT_EQ(law.probs.size(), 3u);
}

TEST(ModDLaw, DiracIsSingleAtom) {
  auto law = exact_mod_D_distribution(MeasureSeq::broadcast(Measure::dirac(0), 3), 3, FpPoly(2, {1, 1, 1}));
  ASSERT_EQ(law.probs.size(), 1u);
  EXPECT_EQ(law.at({(FpPoly(2, {1, 0, 0, 0, 0, 0, 1}))}), 1);
}

TEST(ModDLaw, MatchesBruteForceAndLivesInRm) {
  for (std::uint64_t p : {2, 3, 5})
    for (long m = 1; m <= 4; ++m)
      for (const auto& d : reciprocal_moduli(p, 2)) {
        if (d.degree() == 0 || static_cast<long>(half_degree(d)) > m) continue;
        auto mus = lopsided(m);
        auto law = exact_mod_D_distribution(mus, m, d);
        auto brute = brute_law(mus, m, {d});
        EXPECT_EQ(law.total(), 1);
        auto rm = rm_set(d, m);
        std::set<FpPoly> rms;
        for (const auto& c : rm) rms.insert(c % d);
        for (const auto& [key, w] : brute) {
          EXPECT_EQ(law.at(key), w) << d.to_string() << " m=" << m;
          EXPECT_TRUE(rms.count(key[0])) << "residue outside R_m(D)";
        }
        EXPECT_EQ(law.probs.size(), brute.size());
      }
  EXPECT_THROW(exact_mod_D_distribution(lopsided(1), 1, FpPoly(3, {1, 0, 0, 0, 1})), std::invalid_argument);
  EXPECT_THROW(exact_mod_D_distribution(lopsided(1), 3, FpPoly(3, {1, 0, 1})), SizeMismatch);
}

TEST(ModDLaw, JointTwoPrimesMatchesBruteForce) {
  auto mus = lopsided(3);
  std::vector<FpPoly> Ds{FpPoly(2, {1, 1, 1}), FpPoly(3, {1, 0, 1})};
  auto law = exact_mod_D_distribution(mus, 3, Ds);
  for (const auto& [key, w] : brute_law(mus, 3, Ds)) EXPECT_EQ(law.at(key), w);
  EXPECT_EQ(law.total(), 1);
}

TEST(DeltaR, UniformModPIsZero) {
  for (std::uint64_t p : {2, 3, 5})
    for (long m = 1; m <= 4; ++m) {
      auto mus = MeasureSeq::broadcast(Measure::uniform(0, static_cast<long long>(p) - 1), static_cast<std::size_t>(m));
      EXPECT_EQ(delta_R(mus, m, {p}, std::min<long>(m, 2)), 0) << p << " " << m;
    }
}

TEST(DeltaR, MatchesBruteForceOnePrime) {
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 4; ++m)
      for (std::size_t kmax = 1; kmax <= std::min<std::size_t>(2, m); ++kmax) {
        for (const auto& mus : {lopsided(m), MeasureSeq::broadcast(Measure::dirac(0), m), MeasureSeq::broadcast(Measure::uniform(0, 1), m)})
          EXPECT_EQ(delta_R(mus, m, {p}, kmax), brute_delta_one_prime(mus, m, p, kmax)) << p << " " << m << " " << kmax;
      }
}

TEST(DeltaR, DiracPositive) {
  auto mus = MeasureSeq::broadcast(Measure::dirac(0), 2);
  mpq_class d = delta_R(mus, 2, {2}, 1);
  EXPECT_GT(d, 0);
  EXPECT_EQ(d, brute_delta_one_prime(mus, 2, 2, 1));
}

TEST(DeltaR, EdgeCases) {
  auto mus = lopsided(3);
  EXPECT_EQ(delta_R(mus, 3, {2, 3}, 0), 0);
  EXPECT_THROW(delta_R(mus, 3, {2, 3, 5}, 1), CapExceeded);
  EXPECT_THROW(delta_R(mus, 2, {3}, 3), std::invalid_argument);
}

TEST(DeltaR, TwoPrimesIncludeMarginals) {
  // with one coordinate trivial the joint term reduces to the single-prime term
  auto mus = lopsided(2);
  mpq_class joint = delta_R(mus, 2, {2, 3}, 1);
  EXPECT_GE(joint, delta_R(mus, 2, {2}, 1) + delta_R(mus, 2, {3}, 1));
}

TEST(DeltaTrace, MatchesTraceReduction) {
  // oracle: reduce the trace polynomial of every outcome
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 3; ++m) {
      auto mus = lopsided(m);
      auto mods = enumerate_reciprocal_mod_p(p, 1);
      mods.push_back(FpPoly(p, {1, 1}));
      mods.push_back(FpPoly(p, {1, 2, 0, 1}));
      for (const auto& dd : mods) {
        std::map<FpPoly, mpq_class> law;
        for_each_outcome(mus, m, [&](const ZPoly& A, const mpq_class& w) { law[FpPoly(p, to_trace(A)) % dd] += w; });
        mpq_class target(1, static_cast<unsigned long>(std::pow(p, dd.degree())));
        mpq_class best = 0;
        for (const auto& [c, w] : law) best = std::max<mpq_class>(best, abs(w - target));
        if (law.size() < std::pow(p, dd.degree())) best = std::max(best, target);
        EXPECT_EQ(delta_trace_term(mus, m, dd), best) << dd.to_string();
      }
    }
  auto dirac = MeasureSeq::broadcast(Measure::dirac(0), 2);
  EXPECT_EQ(delta_trace_term(dirac, 2, FpPoly(2, {1, 1})), mpq_class(1, 2));
  EXPECT_EQ(delta_trace_term(dirac, 2, FpPoly(2, {1})), 0);
  EXPECT_EQ(delta_trace(MeasureSeq::broadcast(Measure::uniform(0, 2), 3), 3, 3, 2), 0);
}

TEST(Sigma, ZeroResidueGivesOne) {
  auto mus = lopsided(4);
  EXPECT_DOUBLE_EQ(sigma(mus, 4, {FpPoly::zero(3)}, {FpPoly(3, {1, 0, 1})}), 1.0);
  EXPECT_THROW(sigma(mus, 4, {}, {FpPoly(3, {1, 0, 1})}), SizeMismatch);
}

TEST(FourierExpectation, MatchesEnumeration) {
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 3; ++m) {
      auto mus = lopsided(m);
      for (const auto& d : enumerate_reciprocal_mod_p(p, 1)) {
        for (long long b0 = 0; b0 < static_cast<long long>(p); ++b0)
          for (long long b1 = 0; b1 < static_cast<long long>(p); ++b1) {
            FpPoly b(p, {b0, b1});
            std::complex<double> want = 0;
            for_each_outcome(mus, m, [&](const ZPoly& A, const mpq_class& w) {
              std::uint64_t r = laurent_residue((FpPoly(p, A) * b) % d, d, 0);
              want += w.get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(r) / static_cast<double>(p));
            });
            EXPECT_NEAR(std::abs(fourier_expectation(mus, m, b, d) - want), 0, 1e-12);
          }
      }
    }
}

TEST(NumericChecks, InversionAndDivisibilityBound) {
  auto inv = fourier_inversion_check(3, 3, 2);
  EXPECT_GT(inv.checked, 0u);
  EXPECT_EQ(inv.violations, 0u) << inv.max_error;
  auto div = div_probability_bound_check(lopsided(4), 4, 3, 2);
  EXPECT_GT(div.checked, 0u);
  EXPECT_EQ(div.violations, 0u) << div.worst_ratio;
  // divisibility probability, oracle by enumeration
  auto mus = MeasureSeq::broadcast(Measure::uniform(0, 1), 4);
  double delta = 0.5;
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& d : enumerate_reciprocal_mod_p(3, k)) {
      auto brute = brute_law(mus, 4, {d});
      auto it = brute.find({FpPoly::zero(3)});
      double pr = it == brute.end() ? 0 : it->second.get_d();
      EXPECT_LE(pr, std::exp(-delta * static_cast<double>(k)) + 1e-12);
    }
  auto lin = linf_check(lopsided(4), 4, 3, 2);
  EXPECT_EQ(lin.violations, 0u) << lin.max_error;
}
