#pragma once
// Laurent residues, reciprocal remainders, major residues and good representatives over F_p.
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fppoly.hpp"
#include "linalg.hpp"
#include "reciprocal.hpp"

namespace reciplab {

inline FpVec to_vec(const FpPoly& b, std::size_t n) {
  FpVec v(n, 0);
  for (std::size_t i = 0; i < b.coeffs.size() && i < n; ++i) v[i] = b.coeffs[i];
  return v;
}
inline FpPoly from_vec(std::uint64_t p, const FpVec& v) { return FpPoly::unchecked(p, v); }

/// coefficient of T^{-1} in the expansion at infinity of T^i B / D
inline std::uint64_t laurent_residue(const FpPoly& b, const FpPoly& d, long i) {
  if (d.is_zero()) throw DivisionByZeroPoly();
  if (b.p != d.p) throw ModulusMismatch();
  if (b.is_zero()) return 0;
  const std::uint64_t p = d.p;
  long dd = d.degree(), n = b.degree() + i;
  if (n - dd < -1) return 0;
  long lo = std::min(i, -1L);
  std::vector<std::uint64_t> r(n - lo + 1, 0);
  for (long k = 0; k <= b.degree(); ++k) r[k + i - lo] = b.coeffs[k];
  std::uint64_t inv = mod_inv(d.lc(), p);
  for (long e = n - dd; e >= -1; --e) {
    std::uint64_t q = r[e + dd - lo] * inv % p;
    if (e == -1) return q;
    if (!q) continue;
    for (long t = 0; t <= dd; ++t) r[e + t - lo] = (r[e + t - lo] + (p - q) * d.coeffs[t]) % p;
  }
  return 0;
}

/// T^e mod D for any integer e (negative powers need T invertible mod D)
inline FpPoly pow_t_mod(long e, const FpPoly& d) {
  const std::uint64_t p = d.p;
  if (e >= 0) return FpPoly::monomial(p, static_cast<std::size_t>(e)) % d;
  auto [g, s, t] = fp_xgcd(FpPoly::monomial(p, 1), d);
  if (!g.is_one()) throw std::invalid_argument("T is not invertible modulo D");
  return fp_powmod(s, static_cast<std::uint64_t>(-e), d);
}

/// res(T^e B/D) with T^e read in F_p[T]/(D) when e < 0
inline std::uint64_t shifted_residue(const FpPoly& b, const FpPoly& d, long e) {
  if (e >= 0) return laurent_residue(b, d, e);
  return laurent_residue((pow_t_mod(e, d) * b) % d, d, 0);
}

/// psi^{(m,j)}(B/D) as an F_p numerator
inline std::uint64_t psi_mj(const FpPoly& b, const FpPoly& d, long m, long j) {
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  if (j == 0) return shifted_residue(b, d, m);
  return (shifted_residue(b, d, m - j) + shifted_residue(b, d, m + j)) % d.p;
}

inline std::size_t half_degree(const FpPoly& d) {
  if (d.degree() < 0 || d.degree() % 2) throw std::invalid_argument("modulus must have even degree");
  return static_cast<std::size_t>(d.degree() / 2);
}

/// reciprocal remainder of C (shifted reciprocal at level m) modulo D of degree 2k
inline FpPoly brmod(const ShiftedRecPoly<FpRing>& c, const FpPoly& d, std::size_t m) {
  if (c.level() != m) throw SizeMismatch("C must be m-shifted reciprocal");
  if (!is_reciprocal(d) || d.lc() != 1) throw std::invalid_argument("D must be monic reciprocal");
  std::size_t k = half_degree(d);
  if (k == 0) throw std::invalid_argument("brmod needs deg D >= 2");
  FpPoly cx = c.expand();
  FpPoly r;
  if (k > m) {
    r = cx;
  } else {
    FpPoly rr = to_trace(c) % to_trace(d);
    r = from_trace(rr, m).expand();
  }
  if (!((cx - r) % d).is_zero()) throw std::logic_error("brmod: D does not divide C - R");
  // R lies in T^(m-k+1) R^sh(k-1)
  long lo = static_cast<long>(m) - static_cast<long>(k) + 1, hi = static_cast<long>(m + k) - 1;
  for (long i = 0; i <= r.degree(); ++i) {
    if (r.coeffs[i] && (i < lo || i > hi)) throw std::logic_error("brmod: remainder outside the target space");
    long mirror = 2 * static_cast<long>(m) - i;
    if (mirror >= 0 && r.coeff(static_cast<std::size_t>(mirror)) != r.coeffs[i])
      throw std::logic_error("brmod: remainder not centred at T^m");
  }
  return r;
}

/// generators of R_m(D): T^m and T^(m-j) + T^(m+j), j = 1..k-1, reduced mod D
inline std::vector<FpPoly> rm_basis(const FpPoly& d, long m) {
  std::size_t k = half_degree(d);
  std::vector<FpPoly> out;
  if (k == 0) return out;
  out.push_back(pow_t_mod(m, d));
  for (long j = 1; j < static_cast<long>(k); ++j) out.push_back(pow_t_mod(m - j, d) + pow_t_mod(m + j, d));
  return out;
}

/// all F_p-combinations of the given residues
inline std::vector<FpPoly> span_elements(std::uint64_t p, const std::vector<FpPoly>& basis, std::size_t n,
                                         unsigned long long cap = 1000000ull) {
  mpz_class total = ipow(mpz_class(static_cast<unsigned long>(p)), basis.size());
  if (total > mpz_class(std::to_string(cap))) throw CapExceeded("span too large to enumerate");
  std::vector<FpVec> bv;
  for (const auto& b : basis) bv.push_back(to_vec(b, n));
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> coef(basis.size(), 0);
  for (;;) {
    FpVec v(n, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coef[i])
        for (std::size_t t = 0; t < n; ++t) v[t] = (v[t] + coef[i] * bv[i][t]) % p;
    out.push_back(from_vec(p, v));
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

inline std::vector<FpPoly> rm_set(const FpPoly& d, long m, unsigned long long cap = 1000000ull) {
  auto basis = rm_basis(d, m);
  if (basis.empty()) return {FpPoly::zero(d.p)};
  auto out = span_elements(d.p, basis, 2 * half_degree(d), cap);
  std::set<FpPoly> distinct(out.begin(), out.end());
  if (distinct.size() != out.size()) throw RankViolation("R_m(D) has fewer than p^k elements");
  return out;
}

struct MajorResidueSpace {
  std::uint64_t p = 2;
  FpPoly D;
  long m = 0;
  std::size_t k = 0;
  std::vector<FpPoly> basis;
  std::vector<FpVec> echelon;  // rref of the basis
  std::vector<std::size_t> pivots;

  bool contains(const FpPoly& b) const {
    FpPoly r = b % D;
    for (std::size_t j = 0; j < k; ++j)
      if (psi_mj(r, D, m, static_cast<long>(j))) return false;
    return true;
  }
  /// canonical representative of the coset B + N_m(D)
  FpVec coset_key(const FpPoly& b) const { return reduce_by(echelon, pivots, to_vec(b % D, 2 * k), p); }
  std::vector<FpPoly> elements() const {
    if (k == 0) return {FpPoly::zero(p)};
    return span_elements(p, basis, 2 * k);
  }
};

inline MajorResidueSpace major_space(const FpPoly& d, long m) {
  MajorResidueSpace s;
  s.p = d.p;
  s.D = d;
  s.m = m;
  s.k = half_degree(d);
  if (s.k == 0) return s;
  std::vector<FpVec> rows(s.k, FpVec(2 * s.k, 0));
  for (std::size_t j = 0; j < s.k; ++j)
    for (std::size_t t = 0; t < 2 * s.k; ++t) rows[j][t] = psi_mj(FpPoly::monomial(d.p, t), d, m, static_cast<long>(j));
  auto ker = kernel(rows, 2 * s.k, d.p);
  if (ker.size() != s.k) throw RankViolation("major residue space has the wrong dimension");
  for (const auto& v : ker) s.basis.push_back(from_vec(d.p, v));
  s.echelon = ker;
  s.pivots = rref(s.echelon, d.p);
  return s;
}

inline bool is_major(const FpPoly& b, const FpPoly& d, long m) {
  std::size_t k = half_degree(d);
  FpPoly r = b % d;
  for (std::size_t j = 0; j < k; ++j)
    if (psi_mj(r, d, m, static_cast<long>(j))) return false;
  return true;
}

/// images of T^(m-k+1) R^sh(k-1) and R^sh(m) in F_p[T]/(D) agree
inline bool image_coincidence(const FpPoly& d, long m) {
  std::size_t k = half_degree(d);
  std::vector<FpVec> a, b, ab;
  for (const auto& x : rm_basis(d, m)) a.push_back(to_vec(x, 2 * k));
  b.push_back(to_vec(pow_t_mod(m, d), 2 * k));
  for (long j = 1; j <= m; ++j) b.push_back(to_vec(pow_t_mod(m - j, d) + pow_t_mod(m + j, d), 2 * k));
  ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  std::size_t ra = rank(a, d.p), rb = rank(b, d.p), rab = rank(ab, d.p);
  return ra == rb && rb == rab;
}

/// brmod of the lacunary space R_p(j,k) spans the whole target space
inline bool surjectivity_check_lacunary(std::uint64_t p, std::size_t j, std::size_t k, std::size_t m, const FpPoly& d) {
  if (d.p != p || half_degree(d) != k || k == 0) throw std::invalid_argument("D must lie in R_p(k), k >= 1");
  if (j + 2 * k - 1 > m) throw std::invalid_argument("lacunary space needs j + 2k - 1 <= m");
  if (p == 2 && (d % FpPoly(2, {1, 0, 1})).is_zero()) throw std::invalid_argument("T^2+1 divides D at p = 2");
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    std::vector<std::uint64_t> half(m + 1, 0);
    half[j + i] = 1;
    FpPoly r = brmod(ShiftedRecPoly<FpRing>{FpRing{p}, half}, d, m);
    rows.push_back(to_vec(r, 2 * m + 1));
  }
  return rank(rows, p) == k;
}

/// monic reciprocal D of degree 2k for k = 0..max_k, in order of degree
inline std::vector<FpPoly> reciprocal_moduli(std::uint64_t p, std::size_t max_k) {
  std::vector<FpPoly> out;
  for (std::size_t k = 0; k <= max_k; ++k) {
    auto v = enumerate_reciprocal_mod_p(p, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

using GoodReps = std::map<FpPoly, std::vector<FpPoly>>;

/// system of good representatives L_m(D) for all monic reciprocal D of degree <= 2 max_k
inline GoodReps good_representatives(std::uint64_t p, long m, std::size_t max_k, unsigned long long cap = 1000000ull) {
  mpz_class states = ipow(mpz_class(static_cast<unsigned long>(p)), 2 * max_k);
  if (states > mpz_class(std::to_string(cap))) throw CapExceeded("p^(2 max_k) above the cap");
  GoodReps L;
  for (const auto& d : reciprocal_moduli(p, max_k)) {
    std::size_t k = half_degree(d);
    if (k == 0) {
      L[d] = {FpPoly::zero(p)};
      continue;
    }
    auto N = major_space(d, m);
    std::vector<FpPoly> unit;
    for (std::size_t t = 0; t < 2 * k; ++t) unit.push_back(FpPoly::monomial(p, t));
    std::vector<FpPoly> all = span_elements(p, unit, 2 * k, cap);
    struct Best {
      long deg = -1;
      std::vector<std::pair<FpVec, FpPoly>> cands;  // (padded vector, residue) with that rgcd degree
    };
    std::map<FpVec, Best> cosets;
    for (const auto& b : all) {
      FpPoly K = b.is_zero() ? d : reciprocal_gcd(b, d);
      long dk = K.degree();
      Best& slot = cosets[N.coset_key(b)];
      // property (3): B/K is the chosen representative modulo D/K
      bool ok = true;
      if (!K.is_one()) {
        FpPoly H = d / K;
        FpPoly G = b.is_zero() ? FpPoly::zero(p) : b / K;
        const auto& lh = L.at(H);
        ok = std::find(lh.begin(), lh.end(), G) != lh.end();
      }
      if (dk > slot.deg) {
        slot.deg = dk;
        slot.cands.clear();
      }
      if (dk == slot.deg && ok) slot.cands.emplace_back(to_vec(b, 2 * k), b);
    }
    std::vector<FpPoly> reps;
    for (auto& [key, best] : cosets) {
      if (best.cands.empty()) throw std::logic_error("no good representative for a coset");
      auto it = std::min_element(best.cands.begin(), best.cands.end(),
                                 [](const auto& x, const auto& y) { return x.first < y.first; });
      reps.push_back(it->second);
    }
    mpz_class want = ipow(mpz_class(static_cast<unsigned long>(p)), k);
    if (mpz_class(static_cast<unsigned long>(reps.size())) != want) throw RankViolation("wrong number of cosets");
    std::sort(reps.begin(), reps.end());
    L[d] = std::move(reps);
  }
  return L;
}

/// (G, H) with G in L_m(H) and (G, H)_r = 1
inline std::vector<std::pair<FpPoly, FpPoly>> minimal_pairs(const GoodReps& L) {
  std::vector<std::pair<FpPoly, FpPoly>> out;
  for (const auto& [h, reps] : L)
    for (const auto& g : reps) {
      if (h.is_one()) {
        out.emplace_back(g, h);
        continue;
      }
      if (!g.is_zero() && reciprocal_gcd(g, h).is_one()) out.emplace_back(g, h);
    }
  return out;
}

struct CrossingReport {
  std::uint64_t p = 2;
  long m = 0;
  std::size_t max_deg = 0;
  std::size_t coprime_pairs = 0;
  std::size_t bijection_failures = 0;
  std::size_t minimal_pairs = 0;
  std::size_t crossing_pairs_checked = 0;
  std::size_t crossing_failures = 0;
  std::string counterexample;
  bool ok() const { return bijection_failures == 0 && crossing_failures == 0; }
};

inline CrossingReport crossing_check(std::uint64_t p, long m, std::size_t max_deg) {
  CrossingReport rep;
  rep.p = p;
  rep.m = m;
  rep.max_deg = max_deg;
  auto mods = reciprocal_moduli(p, max_deg / 2);
  std::map<FpPoly, MajorResidueSpace> spaces;
  for (const auto& d : mods) spaces.emplace(d, major_space(d, m));
  for (const auto& d0 : mods)
    for (const auto& d1 : mods) {
      if (!fp_gcd(d0, d1).is_one()) continue;
      ++rep.coprime_pairs;
      FpPoly dd = d0 * d1;
      auto target = major_space(dd, m);
      std::set<FpPoly> image;
      bool bad = false;
      for (const auto& b0 : spaces.at(d0).elements())
        for (const auto& b1 : spaces.at(d1).elements()) {
          FpPoly psi = (b0 * d1 - b1 * d0) % dd;
          if (dd.degree() > 0 && !target.contains(psi)) bad = true;
          image.insert(psi);
        }
      mpz_class want = ipow(mpz_class(static_cast<unsigned long>(p)), half_degree(dd));
      if (bad || mpz_class(static_cast<unsigned long>(image.size())) != want) {
        ++rep.bijection_failures;
        if (rep.counterexample.empty()) rep.counterexample = "bijection fails for D0=" + d0.to_string() + ", D1=" + d1.to_string();
      }
    }
  auto L = good_representatives(p, m, max_deg / 2);
  auto mins = minimal_pairs(L);
  rep.minimal_pairs = mins.size();
  for (const auto& [g0, h0] : mins)
    for (const auto& [g1, h1] : mins) {
      ++rep.crossing_pairs_checked;
      FpPoly hh = h0 * h1;
      if (hh.degree() == 0) continue;  // both (0, 1)
      FpPoly x = (g0 * h1 - g1 * h0) % hh;
      if (is_major(x, hh, m) && !(g0 == g1 && h0 == h1)) {
        ++rep.crossing_failures;
        if (rep.counterexample.empty())
          rep.counterexample = "crossing residues (" + g0.to_string() + ", " + h0.to_string() + ") and (" +
                               g1.to_string() + ", " + h1.to_string() + ")";
      }
    }
  return rep;
}

}  // namespace reciplab
