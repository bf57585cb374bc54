#pragma once
// Property suites with brute-force oracles, shared by the CLI and the acceptance run.
#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "distributions.hpp"
#include "fppoly.hpp"
#include "galois.hpp"
#include "hyperoct.hpp"
#include "intpoly.hpp"
#include "reciprocal.hpp"
#include "residues.hpp"

namespace reciplab {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;
  std::vector<std::string> info;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failure_notes.size() < 20) failure_notes.push_back(what);
    }
  }
  bool ok() const { return failures == 0; }
};

namespace detail {

/// T^m B(T + 1/T) by direct substitution
inline ZPoly substitute_trace(const ZPoly& b, long m) {
  ZPoly out;
  ZPoly t2p1{1, 0, 1};
  ZPoly pw = ZPoly::constant(1);
  for (long i = 0; i <= b.degree(); ++i) {
    out = out + (b.coeff(static_cast<std::size_t>(i)) * pw).shift(static_cast<std::size_t>(m - i));
    pw = pw * t2p1;
  }
  return out;
}

inline ZPoly random_reciprocal(std::mt19937_64& rng, long m, long lo, long hi) {
  std::uniform_int_distribution<long> coef(lo, hi);
  std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
  for (long j = 0; j < m; ++j) half[static_cast<std::size_t>(j)] = coef(rng);
  half[static_cast<std::size_t>(m)] = 1;
  return make_zrec(half).expand();
}

inline std::vector<MeasureSeq> small_measure_family(long m) {
  std::vector<Measure> base{
      Measure::dirac(0),
      Measure::uniform(0, 1),
      Measure({{0, mpq_class(1, 2)}, {1, mpq_class(1, 3)}, {5, mpq_class(1, 6)}}),
      Measure({{-1, mpq_class(1, 4)}, {2, mpq_class(3, 4)}}),
      Measure::uniform(-2, 0),
  };
  std::vector<MeasureSeq> out;
  for (const auto& mu : base) out.push_back(MeasureSeq::broadcast(mu, static_cast<std::size_t>(std::max<long>(m, 1))));
  MeasureSeq mixed;
  for (long j = 0; j < std::max<long>(m, 1); ++j) mixed.per.push_back(base[static_cast<std::size_t>(j) % base.size()]);
  out.push_back(mixed);
  return out;
}

inline void enumerate_support(const MeasureSeq& mus, long m,
                              const std::function<void(const std::vector<long long>&, const mpq_class&)>& f) {
  std::vector<long long> a(static_cast<std::size_t>(m));
  std::function<void(long, const mpq_class&)> rec = [&](long j, const mpq_class& w) {
    if (j == m) {
      f(a, w);
      return;
    }
    for (const auto& [x, q] : mus[static_cast<std::size_t>(j)].atoms) {
      a[static_cast<std::size_t>(j)] = x;
      rec(j + 1, w * q);
    }
  };
  rec(0, mpq_class(1));
}

inline FpPoly reciprocal_mod_p(const std::vector<long long>& a, std::uint64_t p) {
  std::vector<mpz_class> half(a.size() + 1);
  for (std::size_t j = 0; j < a.size(); ++j) half[j] = static_cast<long>(a[j]);
  half[a.size()] = 1;
  return FpPoly(p, make_zrec(half).expand());
}

}  // namespace detail

/// Chebyshev identities: T^j C_j(T + 1/T) = T^{2j} + 1, C_j C_l = C_{j+l} + C_{j-l}, reduction mod p
inline SuiteResult verify_chebyshev() {
  SuiteResult r{"chebyshev"};
  for (long j = 0; j <= 64; ++j) {
    ZPoly want = ZPoly::monomial(2 * j) + ZPoly::constant(1);
    r.check(detail::substitute_trace(chebyshev(j), j) == want, "T^j C_j(T+1/T) != T^2j + 1 at j=" + std::to_string(j));
    for (std::uint64_t p : {2, 3, 5, 7}) r.check(chebyshev(j, p) == FpPoly(p, chebyshev(j)), "C_j mod p, j=" + std::to_string(j));
  }
  for (long j = 0; j <= 12; ++j)
    for (long l = 0; l <= j; ++l)
      r.check(chebyshev(j) * chebyshev(l) == chebyshev(j + l) + chebyshev(j - l),
              "product rule at " + std::to_string(j) + "," + std::to_string(l));
  for (long j = -32; j <= 32; ++j)
    r.check(chebyshev(j).shift(1) == chebyshev(j + 1) + chebyshev(j - 1), "T C_j = C_{j+1} + C_{j-1} at j=" + std::to_string(j));
  auto two_val = [](long a) {
    int v = 0;
    while (a % 2 == 0) a /= 2, ++v;
    return v;
  };
  for (std::uint64_t p : {3, 5, 7})
    for (long a = 1; a <= 20; ++a)
      for (long b = 1; b <= 20; ++b)
        if (two_val(a) != two_val(b))
          r.check(fp_gcd(chebyshev(a, p), chebyshev(b, p)).is_one(),
                  "gcd(C_a, C_b) != 1 mod " + std::to_string(p) + " at " + std::to_string(a) + "," + std::to_string(b));
  FpPoly t2 = FpPoly::monomial(2, 1);
  for (long a = 1; a <= 20; ++a)
    r.check(fp_gcd(chebyshev(a, 2) / t2, chebyshev(a + 1, 2) / t2).is_one(), "gcd(C_a/T, C_{a+1}/T) != 1 mod 2 at " + std::to_string(a));
  return r;
}

/// trace map round trips and the substitution identity, over Z and F_p
inline SuiteResult verify_trace(std::uint64_t seed = 11) {
  SuiteResult r{"trace"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 300; ++t) {
    long m = 1 + static_cast<long>(rng() % 15);
    ZPoly A = detail::random_reciprocal(rng, m, -20, 20);
    ZPoly B = to_trace(A);
    r.check(B.degree() == m && B.lc() == 1, "trace degree or leading coefficient");
    r.check(detail::substitute_trace(B, m) == A, "T^m A_R(T+1/T) != A for " + A.to_string());
    r.check(from_trace(B, static_cast<std::size_t>(m)).expand() == A, "from_trace(to_trace(A)) != A");
    for (std::uint64_t p : {2, 3, 5}) {
      FpPoly ap(p, A);
      r.check(to_trace(ap) == FpPoly(p, B), "trace commutes with reduction mod p");
    }
    long m2 = 1 + static_cast<long>(rng() % 8);
    ZPoly A2 = detail::random_reciprocal(rng, m2, -20, 20);
    r.check(to_trace(A * A2) == B * to_trace(A2), "trace is not multiplicative");
  }
  // gcd(A, B) = 1 iff gcd(A_R, B_R) = 1, over all monic trace polynomials of degree 1..3
  for (std::uint64_t p : {2, 3}) {
    std::vector<FpPoly> monics;
    for (long d = 1; d <= 3; ++d) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
      c.back() = 1;
      for (;;) {
        monics.push_back(FpPoly(p, c));
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(d) && ++c[i] == p) c[i++] = 0;
        if (i == static_cast<std::size_t>(d)) break;
      }
    }
    for (const auto& g : monics)
      for (const auto& h : monics) {
        bool trace_coprime = fp_gcd(g, h).is_one();
        FpPoly a = from_trace(g, static_cast<std::size_t>(g.degree())).expand();
        FpPoly b = from_trace(h, static_cast<std::size_t>(h.degree())).expand();
        r.check(fp_gcd(a, b).is_one() == trace_coprime, "coprimality not preserved by the trace map");
      }
  }
  // factor shapes reassemble; semi-irreducible but reducible means exceptional
  for (int t = 0; t < 300; ++t) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
    long m = 1 + static_cast<long>(rng() % 8);
    std::vector<std::uint64_t> half(static_cast<std::size_t>(m) + 1);
    for (auto& c : half) c = rng() % p;
    half.back() = 1;
    FpPoly A = make_fprec(p, half).expand();
    auto shape = factor_shape(A);
    r.check(shape.product(p) == A, "factor shape does not reassemble " + A.to_string());
    for (const auto& f : shape.reciprocal_factors) r.check(is_reciprocal(f) && fp_is_irreducible(f), "reciprocal bucket");
    for (const auto& [j, jr] : shape.pairs) r.check(fp_gcd(j, jr).is_one(), "paired factors not coprime");
  }
  for (int t = 0; t < 300; ++t) {
    long m = 1 + static_cast<long>(rng() % 6);
    ZPoly A = detail::random_reciprocal(rng, m, -3, 3);
    if (gcd(A, derivative(A)).degree() > 0) continue;
    auto rec = to_recpoly(A);
    if (is_semi_irreducible(rec)) {
      auto kind = classify_reducibility(rec).kind;
      r.check(kind != Reducibility::ReciprocalDivisor, "semi-irreducible A with a reciprocal divisor: " + A.to_string());
    }
  }
  return r;
}

/// reciprocal Euclid: existence and uniqueness of brmod, image coincidence, lacunary surjectivity
inline SuiteResult verify_euclid() {
  SuiteResult r{"euclid"};
  std::size_t lacunary = 0;
  for (std::uint64_t p : {2, 3})
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& d : enumerate_reciprocal_mod_p(p, k))
        for (std::size_t m = 0; m <= 6; ++m) {
          std::string where = "p=" + std::to_string(p) + " D=" + d.to_string() + " m=" + std::to_string(m);
          if (m + 1 >= k) r.check(image_coincidence(d, static_cast<long>(m)), "image coincidence " + where);
          if (m + 1 < k) continue;
          // residue -> number of target elements with that residue
          std::map<FpPoly, int> hits;
          std::vector<std::uint64_t> coef(k, 0);
          for (;;) {
            FpPoly x = FpPoly::zero(p);
            for (std::size_t i = 0; i < k; ++i)
              if (coef[i]) {
                FpPoly term = FpPoly::monomial(p, static_cast<long>(m + i));
                if (i) term = term + FpPoly::monomial(p, static_cast<long>(m - i));
                x = x + coef[i] * term;
              }
            ++hits[x % d];
            std::size_t i = 0;
            while (i < k && ++coef[i] == p) coef[i++] = 0;
            if (i == k) break;
          }
          std::vector<std::uint64_t> half(m + 1, 0);
          for (;;) {
            ShiftedRecPoly<FpRing> c{FpRing{p}, half};
            FpPoly R = brmod(c, d, m);
            auto it = hits.find(c.expand() % d);
            r.check(it != hits.end() && it->second == 1, "brmod not unique or missing " + where);
            r.check(R % d == c.expand() % d, "brmod residue " + where);
            std::size_t i = 0;
            while (i <= m && ++half[i] == p) half[i++] = 0;
            if (i > m) break;
          }
          if (p == 2 && (d % FpPoly(2, {1, 0, 1})).is_zero()) continue;
          for (std::size_t j = 1; j + 2 * k - 1 <= m; ++j) {
            ++lacunary;
            r.check(surjectivity_check_lacunary(p, j, k, m, d),
                    "lacunary surjectivity j=" + std::to_string(j) + " " + where);
          }
        }
  r.info.push_back("lacunary cases checked: " + std::to_string(lacunary));
  return r;
}

/// |N_m(D)| = p^k by counting the kernel of the psi functionals, and the divisor-shift property
inline SuiteResult verify_residues(std::vector<std::uint64_t> primes = {2, 3, 5}, std::size_t max_k = 3) {
  SuiteResult r{"residues"};
  for (auto p : primes)
    for (std::size_t k = 1; k <= max_k; ++k)
      for (const auto& d : enumerate_reciprocal_mod_p(p, k))
        for (long m = static_cast<long>(k); m <= static_cast<long>(k) + 3; ++m) {
          // psi_mj on the monomial basis, then every residue by linearity
          std::vector<std::vector<std::uint64_t>> table(k, std::vector<std::uint64_t>(2 * k));
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < 2 * k; ++i)
              table[j][i] = psi_mj(FpPoly::monomial(p, static_cast<long>(i)), d, m, static_cast<long>(j));
          std::uint64_t total = 1, zeros = 0, want = 1;
          for (std::size_t i = 0; i < 2 * k; ++i) total *= p;
          for (std::size_t i = 0; i < k; ++i) want *= p;
          for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t x = idx;
            std::vector<std::uint64_t> b(2 * k);
            for (auto& c : b) {
              c = x % p;
              x /= p;
            }
            bool zero = true;
            for (std::size_t j = 0; j < k && zero; ++j) {
              std::uint64_t s = 0;
              for (std::size_t i = 0; i < 2 * k; ++i) s = (s + table[j][i] * b[i]) % p;
              zero = s == 0;
            }
            zeros += zero;
          }
          r.check(zeros == want, "|N_m(D)| != p^k for D=" + d.to_string() + " p=" + std::to_string(p) + " m=" + std::to_string(m));
          r.check(major_space(d, m).basis.size() == k, "major_space dimension");
        }
  // membership agrees with the character-side definition: res(C B / D) = 0 for all C in R_m(D)
  for (std::uint64_t p : {2, 3})
    for (const auto& d : reciprocal_moduli(p, 2)) {
      if (d.degree() == 0) continue;
      for (long m = d.degree() / 2; m <= d.degree() / 2 + 2; ++m) {
        auto space = major_space(d, m);
        auto rm = rm_set(d, m);
        std::uint64_t total = 1;
        for (long i = 0; i < d.degree(); ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          FpPoly b = residue_from_index(p, idx, static_cast<std::size_t>(d.degree()));
          bool trivial = true;
          for (const auto& c : rm) trivial = trivial && laurent_residue((c * b) % d, d, 0) == 0;
          r.check(space.contains(b) == trivial, "character oracle D=" + d.to_string());
        }
      }
    }
  // B in N_m(D) iff B D' in N_m(D D')
  for (std::uint64_t p : {2, 3})
    for (long m = 0; m <= 6; ++m)
      for (const auto& d : reciprocal_moduli(p, 2))
        for (const auto& d2 : reciprocal_moduli(p, 1)) {
          if (d.degree() == 0 || d.degree() + d2.degree() > 6) continue;
          auto small = major_space(d, m);
          auto big = major_space(d * d2, m);
          std::uint64_t total = 1;
          for (long i = 0; i < d.degree(); ++i) total *= p;
          for (std::uint64_t idx = 0; idx < total; ++idx) {
            FpPoly b = residue_from_index(p, idx, static_cast<std::size_t>(d.degree()));
            r.check(small.contains(b) == big.contains(b * d2), "divisor shift property");
          }
        }
  return r;
}

inline SuiteResult verify_crossing() {
  SuiteResult r{"crossing"};
  auto run = [&](std::uint64_t p, long m) {
    auto rep = crossing_check(p, m, 4);
    r.check(rep.ok(), "p=" + std::to_string(p) + " m=" + std::to_string(m) + ": " + rep.counterexample);
    r.info.push_back("p=" + std::to_string(p) + " m=" + std::to_string(m) + " coprime pairs " +
                     std::to_string(rep.coprime_pairs) + ", minimal pairs " + std::to_string(rep.minimal_pairs) +
                     ", crossing checks " + std::to_string(rep.crossing_pairs_checked));
  };
  for (long m = 0; m <= 4; ++m) run(2, m);
  for (long m = 0; m <= 3; ++m) run(3, m);
  return r;
}

/// Fourier inversion and expectation by enumeration, L-infinity bound, exact Delta^R facts
inline SuiteResult verify_fourier() {
  SuiteResult r{"fourier"};
  const double tol = 1e-10;
  for (std::uint64_t p : {2, 3})
    for (long m = 0; m <= 3; ++m) {
      auto inv = fourier_inversion_check(p, m, 2, tol);
      r.check(inv.violations == 0, "Fourier inversion p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  // expectation: enumeration over the support against the closed form
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 3; ++m)
      for (const auto& mus : detail::small_measure_family(m))
        for (const auto& d : reciprocal_moduli(p, 2)) {
          if (d.degree() == 0) continue;
          std::uint64_t total = 1;
          for (long i = 0; i < d.degree(); ++i) total *= p;
          for (std::uint64_t idx = 0; idx < total; ++idx) {
            FpPoly b = residue_from_index(p, idx, static_cast<std::size_t>(d.degree()));
            std::complex<double> direct = 0;
            detail::enumerate_support(mus, m, [&](const std::vector<long long>& a, const mpq_class& w) {
              FpPoly A = detail::reciprocal_mod_p(a, p);
              std::uint64_t res = laurent_residue((A * b) % d, d, 0);
              direct += w.get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(res) / static_cast<double>(p));
            });
            r.check(std::abs(direct - fourier_expectation(mus, m, b, d)) < tol, "Fourier expectation mismatch");
          }
        }
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 3; ++m)
      for (const auto& mus : detail::small_measure_family(m)) {
        auto li = linf_check(mus, m, p, 2, tol);
        r.check(li.violations == 0, "L-infinity bound p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
  for (std::uint64_t p : {2, 3})
    for (long m = 2; m <= 4; ++m)
      for (const auto& mus : detail::small_measure_family(m)) {
        auto rep = div_probability_bound_check(mus, m, p, std::min<std::size_t>(2, static_cast<std::size_t>(m)));
        r.check(rep.violations == 0, "P(D | A_p) bound p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
  // perfect equidistribution
  for (std::uint64_t p : {2, 3, 5})
    for (long m = 1; m <= 6; ++m) {
      auto mus = MeasureSeq::broadcast(Measure::uniform(0, static_cast<long long>(p) - 1), static_cast<std::size_t>(m));
      for (std::size_t k = 1; k <= std::min<std::size_t>(2, static_cast<std::size_t>(m)); ++k)
        r.check(delta_R(mus, m, {p}, k) == 0, "Delta^R nonzero for uniform mod p, p=" + std::to_string(p) +
                                                   " m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
  // Delta correspondence and marginal consistency
  for (std::uint64_t p : {2, 3})
    for (long m = 1; m <= 4; ++m)
      for (const auto& mus : detail::small_measure_family(m))
        for (std::size_t k = 1; k <= std::min<std::size_t>(2, static_cast<std::size_t>(m)); ++k)
          r.check(delta_trace(mus, m, p, k) <= delta_R(mus, m, {p}, k), "Delta_R,p > Delta^R_p");
  for (std::uint64_t p : {2, 3}) {
    long m = 3;
    auto mus = detail::small_measure_family(m)[2];
    for (const auto& d0 : reciprocal_moduli(p, 1))
      for (const auto& d1 : reciprocal_moduli(p, 1)) {
        FpPoly d = d0 * d1;
        if (d.degree() == 0 || d0.degree() == 0) continue;
        auto big = exact_mod_D_distribution(mus, m, d);
        auto small = exact_mod_D_distribution(mus, m, d0);
        std::map<std::uint64_t, mpq_class> folded;
        for (const auto& [key, w] : big.probs) {
          FpPoly c = residue_from_index(p, key[0], static_cast<std::size_t>(d.degree()));
          folded[residue_index(c % d0, static_cast<std::size_t>(d0.degree()))] += w;
        }
        bool same = folded.size() == small.probs.size();
        for (const auto& [key, w] : small.probs) same = same && folded[key[0]] == w;
        r.check(same, "marginal consistency D=" + d.to_string());
      }
  }
  return r;
}

/// Delta(A) = (-1)^m A(1) A(-1) Delta(A_R)^2 and the Littlewood obstruction
inline SuiteResult verify_discriminant(std::uint64_t seed = 5, std::size_t trials = 1000) {
  SuiteResult r{"discriminant"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    long m = 1 + static_cast<long>(rng() % 10);
    ZPoly A = detail::random_reciprocal(rng, m, -9, 9);
    mpz_class dr = discriminant(to_trace(A));
    mpz_class rhs = evaluate(A, 1) * evaluate(A, -1) * dr * dr;
    if (m % 2) rhs = -rhs;
    r.check(discriminant(A) == rhs, "identity fails for " + A.to_string());
  }
  for (long m : {5, 6, 9, 10}) {
    std::size_t squares = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
      for (long j = 0; j < m; ++j) half[static_cast<std::size_t>(j)] = (mask >> j & 1) ? -1 : 1;
      half[static_cast<std::size_t>(m)] = 1;
      squares += is_nonzero_square(discriminant(make_zrec(half).expand()));
    }
    r.check(squares == 0, "Littlewood square discriminant at m=" + std::to_string(m));
    r.info.push_back("Littlewood m=" + std::to_string(m) + ": " + std::to_string(squares) + " of " +
                     std::to_string(1ull << m) + " have a nonzero square discriminant");
  }
  return r;
}

inline SuiteResult verify_hyperoct(std::uint64_t seed = 9) {
  SuiteResult r{"hyperoct"};
  for (std::size_t m = 3; m <= 6; ++m)
    for (auto k : {ActingGroup::Alternating, ActingGroup::Symmetric}) {
      auto subs = invariant_subgroups(m, k);
      std::multiset<std::size_t> dims;
      for (const auto& s : subs) dims.insert(s.size());
      bool shape = subs.size() == 4 && dims == std::multiset<std::size_t>{0, 1, m - 1, m};
      r.check(shape, "invariant subgroups at m=" + std::to_string(m));
    }
  auto g = SignedPerm::from_cycles({-1, 1, -1, 1}, {{1, 2}});
  r.check(cycles_to_string(cycle_decomposition(g)) == "(1 2 -1 -2)(3 -3)", "worked example");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 10000; ++t) {
    std::size_t m = 1 + rng() % 8;
    auto rnd = [&] {
      std::vector<int> e(m), p(m);
      std::iota(p.begin(), p.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      for (auto& x : e) x = (rng() & 1) ? -1 : 1;
      return SignedPerm(e, p);
    };
    auto a = rnd(), b = rnd();
    int k = static_cast<int>(1 + rng() % m) * ((rng() & 1) ? -1 : 1);
    r.check(act(compose(a, b), k) == act(a, act(b, k)), "action respects composition");
    auto f = subgroup_flags(a), fb = subgroup_flags(b), fab = subgroup_flags(compose(a, b));
    r.check(f.inG4 == (f.inG1 && f.inG3), "G4 = G1 and G3");
    r.check(!(f.inG1 && f.inG2) || f.inG3, "G1 and G2 imply G3");
    r.check(!(f.inG1 && fb.inG1) || fab.inG1, "G1 closed");
    r.check(!(f.inG2 && fb.inG2) || fab.inG2, "G2 closed");
    r.check(!(f.inG3 && fb.inG3) || fab.inG3, "G3 closed");
    r.check(!(f.inG4 && fb.inG4) || fab.inG4, "G4 closed");
    r.check(!(f.inG5 && fb.inG5) || fab.inG5, "G5 closed");
  }
  // an m-cycle lifts to one 2m-cycle or two m-cycles depending on the sign product
  for (std::size_t m = 1; m <= 8; ++m)
    for (int t = 0; t < 50; ++t) {
      std::vector<int> cyc(m), e(m);
      std::iota(cyc.begin(), cyc.end(), 1);
      std::shuffle(cyc.begin(), cyc.end(), rng);
      for (auto& x : e) x = (rng() & 1) ? -1 : 1;
      auto g = SignedPerm::from_cycles(e, {cyc});
      auto ct = cycle_type(g);
      std::vector<int> want = g.sign_product() == -1 ? std::vector<int>{static_cast<int>(2 * m)}
                                                     : std::vector<int>{static_cast<int>(m), static_cast<int>(m)};
      r.check(ct == want, "long cycle lift at m=" + std::to_string(m));
    }
  auto rep = random_subgroup_classification(5, 1000, rng);
  r.check(rep.violations == 0, "subgroup trichotomy violated " + std::to_string(rep.violations) + " times");
  std::string labels;
  for (const auto& [l, c] : rep.labels) labels += " " + l + "=" + std::to_string(c);
  r.info.push_back("m=5 random subgroups:" + labels);
  return r;
}

/// S_p(2m) by formula against brute-force enumeration, plus the simple lower bound
inline SuiteResult verify_counts() {
  SuiteResult r{"counts"};
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t m = 1; m <= 5; ++m) {
      mpz_class brute = 0;
      for_each_reciprocal_mod_p(p, m, [&](const FpPoly& a) {
        if (fp_is_irreducible(a)) ++brute;
      });
      mpz_class formula = count_irreducible_reciprocal(p, m);
      r.check(brute == formula, "count mismatch p=" + std::to_string(p) + " m=" + std::to_string(m));
      double bound = std::pow(static_cast<double>(p), static_cast<double>(m)) / (2.0 * static_cast<double>(m)) -
                     std::pow(static_cast<double>(p), static_cast<double>(m) / 3.0) / static_cast<double>(m);
      r.check(formula.get_d() > bound, "lower bound fails p=" + std::to_string(p) + " m=" + std::to_string(m));
      r.info.push_back("p=" + std::to_string(p) + " m=" + std::to_string(m) + " S=" + formula.get_str() +
                       " brute=" + brute.get_str() + " bound=" + std::to_string(bound));
    }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"chebyshev", "trace",        "euclid",   "residues", "crossing",
                                              "fourier",   "discriminant", "hyperoct", "counts"};
  return names;
}

inline SuiteResult run_suite(const std::string& name) {
  if (name == "chebyshev") return verify_chebyshev();
  if (name == "trace") return verify_trace();
  if (name == "euclid") return verify_euclid();
  if (name == "residues") return verify_residues();
  if (name == "crossing") return verify_crossing();
  if (name == "fourier") return verify_fourier();
  if (name == "discriminant") return verify_discriminant();
  if (name == "hyperoct") return verify_hyperoct();
  if (name == "counts") return verify_counts();
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace reciplab
