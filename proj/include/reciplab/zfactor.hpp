#pragma once
// Factorization over Z: squarefree split, mod-p factoring, Hensel lifting, subset recombination.
#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fppoly.hpp"
#include "intpoly.hpp"

namespace reciplab {

struct ZFactorization {
  mpz_class unit = 1;  // signed content
  std::vector<std::pair<ZPoly, int>> factors;

  ZPoly product() const {
    ZPoly r = ZPoly::constant(unit);
    for (const auto& [f, e] : factors)
      for (int i = 0; i < e; ++i) r *= f;
    return r;
  }
};

/// order: degree, then coefficients from T^0 upward
inline bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
}

inline std::vector<std::uint64_t> first_primes(std::size_t count, std::uint64_t start = 2) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = start; out.size() < count; ++q)
    if (is_prime_u64(q)) out.push_back(q);
  return out;
}

namespace detail {

inline ZPoly mod_nonneg(const ZPoly& f, const mpz_class& m) {
  ZPoly r = f;
  for (auto& c : r.coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  r.trim();
  return r;
}

inline ZPoly mod_symmetric(const ZPoly& f, const mpz_class& m) {
  ZPoly r = mod_nonneg(f, m);
  mpz_class half = m / 2;
  for (auto& c : r.coeffs)
    if (c > half) c -= m;
  r.trim();
  return r;
}

/// lift f = g*h (mod p) to mod p^K; g0 monic, gcd(g0,h0)=1
inline std::pair<ZPoly, ZPoly> hensel2(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, unsigned K) {
  const std::uint64_t p = g0.p;
  auto [one, s, t] = fp_xgcd(g0, h0);
  if (!one.is_one()) throw std::logic_error("Hensel lifting needs coprime factors");
  ZPoly g = g0.lift(), h = h0.lift();
  mpz_class q = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < K; ++j) {
    ZPoly e = f - g * h;
    for (auto& c : e.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    FpPoly ep(p, e);
    auto [quo, dg] = fp_divrem(t * ep, g0);
    FpPoly dh = s * ep + quo * h0;
    g += q * dg.lift();
    h += q * dh.lift();
    q *= static_cast<unsigned long>(p);
    g = mod_nonneg(g, q);
    h = mod_nonneg(h, q);
  }
  return {g, h};
}

inline void hensel_all(const ZPoly& f, const std::vector<FpPoly>& facs, unsigned K, const mpz_class& M,
                       std::vector<ZPoly>& out) {
  const std::uint64_t p = facs.front().p;
  if (facs.size() == 1) {
    mpz_class inv;
    mpz_class l = f.lc();
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), M.get_mpz_t());
    out.push_back(mod_nonneg(inv * f, M));
    return;
  }
  std::size_t half = facs.size() / 2;
  std::vector<FpPoly> a(facs.begin(), facs.begin() + half), b(facs.begin() + half, facs.end());
  FpPoly g0 = FpPoly::one(p);
  for (const auto& x : a) g0 *= x;
  FpPoly h0 = FpPoly(p, f) / g0;
  auto [g, h] = hensel2(f, g0, h0, K);
  hensel_all(g, a, K, M, out);
  hensel_all(h, b, K, M, out);
}

/// subset sums of the factor degrees, as a bitmask over 0..n
inline std::vector<bool> degree_set(const std::vector<int>& degs, long n) {
  std::vector<bool> ok(n + 1, false);
  ok[0] = true;
  for (int d : degs)
    for (long s = n; s >= d; --s)
      if (ok[s - d]) ok[s] = true;
  return ok;
}

/// irreducible factors of a primitive squarefree f with positive lc and deg >= 1
inline std::vector<ZPoly> zassenhaus(ZPoly f) {
  long n = f.degree();
  if (n <= 1) return {f};
  // candidate primes
  std::vector<std::pair<std::uint64_t, std::vector<FpPoly>>> tries;
  std::vector<bool> possible(n + 1, true);
  std::mt19937_64 rng(0xfac7012u);
  for (std::uint64_t q = 2; tries.size() < 5; ++q) {
    if (!is_prime_u64(q)) continue;
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), q)) continue;
    FpPoly fp(q, f);
    if (!fp_is_squarefree(fp)) continue;
    auto degs = fp_factor_degrees(fp);
    if (degs.size() == 1) return {f};
    auto ds = degree_set(degs, n);
    for (long i = 0; i <= n; ++i) possible[i] = possible[i] && ds[i];
    bool only_trivial = true;
    for (long i = 1; i < n; ++i) only_trivial = only_trivial && !possible[i];
    if (only_trivial) return {f};
    std::vector<FpPoly> fl;
    for (const auto& [g, e] : fp_factor(fp, rng).factors) fl.push_back(g);
    tries.emplace_back(q, std::move(fl));
  }
  auto best = std::min_element(tries.begin(), tries.end(),
                               [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
  const std::uint64_t p = best->first;
  const std::vector<FpPoly>& modfac = best->second;
  // coefficient bound for factors, scaled by lc
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs) norm2 += c * c;
  mpz_class norm = isqrt(norm2) + 1;
  mpz_class bound = 2 * abs(f.lc()) * (mpz_class(1) << n) * norm;
  unsigned K = 1;
  mpz_class M = static_cast<unsigned long>(p);
  while (M <= bound) {
    M *= static_cast<unsigned long>(p);
    ++K;
  }
  std::vector<ZPoly> lifted;
  hensel_all(f, modfac, K, M, lifted);

  std::vector<ZPoly> found;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::size_t s = 1;
  while (2 * s <= idx.size()) {
    bool hit = false;
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    for (;;) {
      ZPoly cand = ZPoly::constant(f.lc());
      for (auto c : comb) cand = mod_symmetric(cand * lifted[idx[c]], M);
      cand = primitive_part(cand);
      bool divides = true;
      if (f.coeffs[0] != 0 && (cand.coeffs.empty() || cand.coeffs[0] == 0 ||
                               !mpz_divisible_p(f.coeffs[0].get_mpz_t(), cand.coeffs[0].get_mpz_t())))
        divides = false;
      std::optional<ZPoly> quo;
      if (divides) quo = divide_exact(f, cand);
      if (quo) {
        found.push_back(cand);
        f = *quo;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(idx[i]);
        idx = std::move(rest);
        hit = true;
        break;
      }
      // next combination
      long i = static_cast<long>(s) - 1;
      while (i >= 0 && comb[i] == idx.size() - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (f.degree() > 0) found.push_back(f);
  return found;
}

/// Musser's squarefree decomposition of a primitive polynomial with positive lc
inline std::vector<std::pair<ZPoly, int>> squarefree_z(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (f.degree() < 1) return out;
  ZPoly c = gcd(f, derivative(f));
  ZPoly w = *divide_exact(f, c);
  int i = 1;
  while (w.degree() > 0) {
    ZPoly y = gcd(w, c);
    ZPoly z = *divide_exact(w, y);
    if (z.degree() > 0) out.emplace_back(primitive_part(z), i);
    ++i;
    w = y;
    c = *divide_exact(c, y);
  }
  return out;
}

}  // namespace detail

inline ZFactorization factor_over_Z(const ZPoly& P, long cap = 128) {
  if (P.is_zero()) throw std::invalid_argument("factorization of zero");
  if (P.degree() > cap) throw DegreeCapExceeded("degree above the factorization cap");
  ZFactorization res;
  mpz_class c = content(P);
  if (P.lc() < 0) c = -c;
  res.unit = c;
  ZPoly f = primitive_part(P);
  for (const auto& [g, e] : detail::squarefree_z(f))
    for (auto& h : detail::zassenhaus(g)) res.factors.emplace_back(primitive_part(h), e);
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return zpoly_less(a.first, b.first); });
  return res;
}

/// true iff P is primitive of positive degree and irreducible over Q
inline bool is_irreducible_over_Z(const ZPoly& P, long cap = 128) {
  if (P.degree() < 1) return false;
  if (P.degree() > cap) throw DegreeCapExceeded("degree above the factorization cap");
  if (content(P) != 1) return false;
  if (P.degree() == 1) return true;
  int tried = 0;
  for (std::uint64_t q = 2; tried < 8; ++q) {
    if (!is_prime_u64(q) || mpz_divisible_ui_p(P.lc().get_mpz_t(), q)) continue;
    ++tried;
    FpPoly fp(q, P);
    if (fp_is_irreducible(fp)) return true;
  }
  auto fz = factor_over_Z(P, cap);
  return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

}  // namespace reciplab
