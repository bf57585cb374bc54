#pragma once
// Dense polynomials over a prime field F_p (p < 2^32).
#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intpoly.hpp"

namespace reciplab {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

namespace detail {

using Vec = std::vector<std::uint64_t>;

inline Vec schoolbook(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  Vec r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  return r;
}

inline Vec karatsuba(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.size() < 64 || b.size() < 64) return schoolbook(a, b, p);
  std::size_t h = std::max(a.size(), b.size()) / 2;
  auto lo = [&](const Vec& v) { return Vec(v.begin(), v.begin() + std::min(h, v.size())); };
  auto hi = [&](const Vec& v) { return v.size() > h ? Vec(v.begin() + h, v.end()) : Vec{}; };
  auto add = [&](const Vec& x, const Vec& y) {
    Vec r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = (r[i] + y[i]) % p;
    return r;
  };
  Vec a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  Vec z0 = karatsuba(a0, b0, p);
  Vec z2 = karatsuba(a1, b1, p);
  Vec z1 = karatsuba(add(a0, a1), add(b0, b1), p);
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    std::uint64_t v = z1[i];
    if (i < z0.size()) v = (v + p - z0[i]) % p;
    if (i < z2.size()) v = (v + p - z2[i]) % p;
    r[i + h] = (r[i + h] + v) % p;
  }
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] = (r[i] + z0[i]) % p;
  for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * h] = (r[i + 2 * h] + z2[i]) % p;
  return r;
}

}  // namespace detail

struct FpPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> coeffs;

  FpPoly() = default;
  FpPoly(std::uint64_t prime, std::vector<std::uint64_t> c) : p(prime), coeffs(std::move(c)) {
    check_prime();
    for (auto& x : coeffs) x %= p;
    trim();
  }
  FpPoly(std::uint64_t prime, std::initializer_list<long long> c) : p(prime) {
    check_prime();
    for (long long v : c) coeffs.push_back(static_cast<std::uint64_t>(((v % (long long)p) + (long long)p) % (long long)p));
    trim();
  }
  FpPoly(std::uint64_t prime, const ZPoly& z) : p(prime) {
    check_prime();
    coeffs.reserve(z.coeffs.size());
    for (const auto& c : z.coeffs) coeffs.push_back(reduce_mod(c, p));
    trim();
  }
  static FpPoly unchecked(std::uint64_t prime, std::vector<std::uint64_t> c) {
    FpPoly r;
    r.p = prime;
    r.coeffs = std::move(c);
    r.trim();
    return r;
  }
  static FpPoly zero(std::uint64_t prime) { return unchecked(prime, {}); }
  static FpPoly one(std::uint64_t prime) { return unchecked(prime, {1}); }
  static FpPoly monomial(std::uint64_t prime, std::size_t e, std::uint64_t c = 1) {
    std::vector<std::uint64_t> v(e + 1, 0);
    v[e] = c % prime;
    return unchecked(prime, std::move(v));
  }

  void check_prime() const {
    if (p >= (1ull << 32) || !is_prime_u64(p)) throw std::invalid_argument("modulus must be a prime below 2^32");
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::uint64_t lc() const { return coeffs.empty() ? 0 : coeffs.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.coeffs == b.coeffs; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }
  /// degree first, then coefficients from T^0 upward
  friend bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    return a.coeffs < b.coeffs;
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw ModulusMismatch();
    std::vector<std::uint64_t> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r[i] = (r[i] + b.coeffs[i]) % a.p;
    return unchecked(a.p, std::move(r));
  }
  friend FpPoly operator-(const FpPoly& a) {
    FpPoly r = a;
    for (auto& c : r.coeffs) c = c ? a.p - c : 0;
    return r;
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw ModulusMismatch();
    return unchecked(a.p, detail::karatsuba(a.coeffs, b.coeffs, a.p));
  }
  friend FpPoly operator*(std::uint64_t s, const FpPoly& a) {
    FpPoly r = a;
    s %= a.p;
    for (auto& c : r.coeffs) c = c * s % a.p;
    r.trim();
    return r;
  }
  FpPoly& operator+=(const FpPoly& b) { return *this = *this + b; }
  FpPoly& operator-=(const FpPoly& b) { return *this = *this - b; }
  FpPoly& operator*=(const FpPoly& b) { return *this = *this * b; }

  FpPoly shift(std::size_t e) const {
    if (is_zero()) return *this;
    std::vector<std::uint64_t> v(e, 0);
    v.insert(v.end(), coeffs.begin(), coeffs.end());
    return unchecked(p, std::move(v));
  }
  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (long i = degree(); i >= 0; --i) r = (r * x + coeffs[i]) % p;
    return r;
  }
  /// lift to Z with representatives in [0,p)
  ZPoly lift() const {
    std::vector<mpz_class> v;
    for (auto c : coeffs) v.emplace_back(static_cast<unsigned long>(c));
    return ZPoly(std::move(v));
  }
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      std::uint64_t c = coeffs[i];
      if (!c) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i > 0) os << "T";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
};

inline FpPoly make_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return mod_inv(a.lc(), a.p) * a;
}

inline std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) throw ModulusMismatch();
  if (b.is_zero()) throw DivisionByZeroPoly();
  const std::uint64_t p = a.p;
  long db = b.degree();
  if (a.degree() < db) return {FpPoly::zero(p), a};
  std::vector<std::uint64_t> r = a.coeffs, q(a.degree() - db + 1, 0);
  std::uint64_t inv = mod_inv(b.lc(), p);
  for (long s = a.degree() - db; s >= 0; --s) {
    std::uint64_t t = r[s + db] * inv % p;
    q[s] = t;
    if (!t) continue;
    for (long i = 0; i <= db; ++i) r[s + i] = (r[s + i] + (p - t) * b.coeffs[i]) % p;
  }
  r.resize(db);
  return {FpPoly::unchecked(p, std::move(q)), FpPoly::unchecked(p, std::move(r))};
}

inline FpPoly operator%(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).second; }
inline FpPoly operator/(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).first; }

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  if (a.p != b.p) throw ModulusMismatch();
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// returns (g, s, t) with s*a + t*b = g monic
inline std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.p;
  FpPoly r0 = a, r1 = b, s0 = FpPoly::one(p), s1 = FpPoly::zero(p), t0 = FpPoly::zero(p), t1 = FpPoly::one(p);
  while (!r1.is_zero()) {
    auto [q, r] = fp_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = mod_inv(r0.lc(), p);
  return {inv * r0, inv * s0, inv * t0};
}

inline FpPoly fp_powmod(FpPoly base, const mpz_class& e, const FpPoly& mod) {
  FpPoly r = FpPoly::one(mod.p) % mod;
  base = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % mod;
  }
  return r;
}
inline FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod) {
  return fp_powmod(base, mpz_class(static_cast<unsigned long>(e)), mod);
}

inline FpPoly fp_derivative(const FpPoly& a) {
  if (a.degree() < 1) return FpPoly::zero(a.p);
  std::vector<std::uint64_t> v(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) v[i - 1] = a.coeffs[i] * (i % a.p) % a.p;
  return FpPoly::unchecked(a.p, std::move(v));
}

inline FpPoly reversal(const FpPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("reversal of the zero polynomial");
  return FpPoly::unchecked(a.p, std::vector<std::uint64_t>(a.coeffs.rbegin(), a.coeffs.rend()));
}

inline bool is_reciprocal(const FpPoly& a) {
  if (a.is_zero() || a.degree() % 2 != 0) return false;
  std::size_t n = a.coeffs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a.coeffs[i] != a.coeffs[n - 1 - i]) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin's test
inline bool fp_is_irreducible(const FpPoly& a) {
  long n = a.degree();
  if (n < 1) throw std::invalid_argument("irreducibility of a constant");
  if (n == 1) return true;
  FpPoly f = make_monic(a);
  FpPoly x = FpPoly::monomial(a.p, 1);
  // frob[i] = T^(p^i) mod f
  std::vector<FpPoly> frob{x % f};
  for (long i = 1; i <= n; ++i) frob.push_back(fp_powmod(frob.back(), a.p, f));
  if (frob[n] != x % f) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(n))) {
    FpPoly h = frob[n / q] - x;
    if (!fp_gcd(h, f).is_one()) return false;
  }
  return true;
}

struct FpFactorization {
  std::uint64_t prime = 2;
  std::uint64_t unit = 1;
  std::vector<std::pair<FpPoly, int>> factors;  // monic irreducibles, sorted

  FpPoly product() const {
    FpPoly r = FpPoly::unchecked(prime, {unit});
    for (const auto& [f, e] : factors)
      for (int i = 0; i < e; ++i) r *= f;
    return r;
  }
};

namespace detail {

inline FpPoly pth_root(const FpPoly& a) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < a.coeffs.size(); i += a.p) v.push_back(a.coeffs[i]);
  return FpPoly::unchecked(a.p, std::move(v));
}

/// monic squarefree parts with multiplicities
inline void squarefree(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  FpPoly c = fp_gcd(f, fp_derivative(f));
  FpPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(make_monic(fac), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(make_monic(pth_root(c)), mult * static_cast<int>(f.p), out);
}

/// distinct-degree factorization of a monic squarefree polynomial
inline std::vector<std::pair<FpPoly, int>> ddf(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const std::uint64_t p = f.p;
  FpPoly x = FpPoly::monomial(p, 1);
  FpPoly h = x % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = fp_powmod(h, p, f);
    FpPoly g = fp_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<int>(f.degree()));
  return out;
}

template <class Rng>
FpPoly random_poly(std::uint64_t p, long deg_below, Rng& rng) {
  std::vector<std::uint64_t> v(deg_below);
  for (auto& c : v) c = rng() % p;
  return FpPoly::unchecked(p, std::move(v));
}

template <class Rng>
void edf(const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
  long n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.p;
  for (;;) {
    FpPoly a = random_poly(p, n, rng);
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly s = a % f, t = a % f;
      for (int i = 1; i < d; ++i) {
        s = (s * s) % f;
        t += s;
      }
      b = t;
    } else {
      mpz_class e = ipow(mpz_class(static_cast<unsigned long>(p)), d);
      e = (e - 1) / 2;
      b = fp_powmod(a, e, f) - FpPoly::one(p);
    }
    if (b.is_zero()) continue;
    FpPoly g = fp_gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

template <class Rng>
FpFactorization fp_factor(const FpPoly& a, Rng& rng) {
  if (a.is_zero()) throw std::invalid_argument("factorization of zero");
  FpFactorization res;
  res.prime = a.p;
  res.unit = a.lc();
  std::vector<std::pair<FpPoly, int>> sqf;
  detail::squarefree(make_monic(a), 1, sqf);
  std::map<FpPoly, int> acc;
  for (const auto& [g, e] : sqf) {
    for (const auto& [h, d] : detail::ddf(g)) {
      std::vector<FpPoly> parts;
      detail::edf(h, d, rng, parts);
      for (auto& q : parts) acc[make_monic(q)] += e;
    }
  }
  for (auto& [f, e] : acc) res.factors.emplace_back(f, e);
  return res;
}

inline FpFactorization fp_factor(const FpPoly& a) {
  std::mt19937_64 rng(0x5eed1234u);
  return fp_factor(a, rng);
}

/// degrees of the irreducible factors of a squarefree polynomial (with repetition), via distinct-degree only
inline std::vector<int> fp_factor_degrees(const FpPoly& a) {
  std::vector<int> out;
  for (const auto& [g, d] : detail::ddf(make_monic(a)))
    for (long i = 0; i < g.degree() / d; ++i) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool fp_is_squarefree(const FpPoly& a) {
  if (a.degree() < 1) return true;
  return fp_gcd(a, fp_derivative(a)).degree() == 0;
}

/// C_0 = 2, C_1 = T, C_{j+1} = T C_j - C_{j-1}; C_{-j} = C_j
inline ZPoly chebyshev(long j) {
  if (j < 0) j = -j;
  ZPoly prev{2}, cur{0, 1};
  if (j == 0) return prev;
  for (long i = 1; i < j; ++i) {
    ZPoly next = cur.shift(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}
inline FpPoly chebyshev(long j, std::uint64_t p) { return FpPoly(p, chebyshev(j)); }

inline long mobius(unsigned long n) {
  long r = 1;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    n /= f;
    if (n % f == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

/// number of monic irreducible reciprocal polynomials of degree 2m over F_p
inline mpz_class count_irreducible_reciprocal(std::uint64_t p, unsigned long m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  mpz_class P(static_cast<unsigned long>(p));
  bool pow2 = (m & (m - 1)) == 0;
  mpz_class num;
  if (p > 2 && pow2) {
    num = ipow(P, m) - 1;
  } else {
    num = 0;
    for (unsigned long d = 1; d <= m; d += 2) {
      if (m % d) continue;
      num += mobius(d) * ipow(P, m / d);
    }
  }
  mpz_class den = 2 * m;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("count formula not integral");
  return num / den;
}

/// monic reciprocal polynomial of degree 2m from half coefficients a_0..a_{m-1} (a_m = 1)
inline FpPoly reciprocal_from_half_fp(std::uint64_t p, const std::vector<std::uint64_t>& half) {
  std::size_t m = half.size() - 1;
  std::vector<std::uint64_t> v(2 * m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    v[m + i] = half[i] % p;
    v[m - i] = half[i] % p;
  }
  return FpPoly::unchecked(p, std::move(v));
}

/// calls f on each of the p^m monic reciprocal polynomials of degree 2m
template <class F>
void for_each_reciprocal_mod_p(std::uint64_t p, unsigned long m, F&& f, unsigned long long cap = 10000000ull) {
  mpz_class total = ipow(mpz_class(static_cast<unsigned long>(p)), m);
  if (total > mpz_class(std::to_string(cap))) throw CapExceeded("p^m exceeds the enumeration cap");
  std::vector<std::uint64_t> half(m + 1, 0);
  half[m] = 1;
  for (;;) {
    f(reciprocal_from_half_fp(p, half));
    std::size_t i = 0;
    while (i < m && ++half[i] == p) half[i++] = 0;
    if (i == m) break;
  }
}

inline std::vector<FpPoly> enumerate_reciprocal_mod_p(std::uint64_t p, unsigned long m, unsigned long long cap = 10000000ull) {
  std::vector<FpPoly> out;
  for_each_reciprocal_mod_p(p, m, [&](const FpPoly& a) { out.push_back(a); }, cap);
  return out;
}

}  // namespace reciplab
