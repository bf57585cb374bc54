#pragma once
// Dense polynomials over Z with exact big-integer coefficients.
#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace reciplab {

struct ZPoly {
  std::vector<mpz_class> coeffs;  // coeffs[i] multiplies T^i

  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(); }
  ZPoly(std::initializer_list<long> c) {
    for (long v : c) coeffs.emplace_back(v);
    trim();
  }
  static ZPoly constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }
  static ZPoly monomial(std::size_t e, const mpz_class& c = 1) {
    std::vector<mpz_class> v(e + 1, 0);
    v[e] = c;
    return ZPoly(std::move(v));
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  const mpz_class& lc() const { return coeffs.back(); }
  mpz_class coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : mpz_class(0); }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r[i] += b.coeffs[i];
    return ZPoly(std::move(r));
  }
  friend ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return ZPoly(std::move(r));
  }
  friend ZPoly operator*(const mpz_class& s, const ZPoly& a) {
    ZPoly r = a;
    for (auto& c : r.coeffs) c *= s;
    r.trim();
    return r;
  }
  ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
  ZPoly& operator-=(const ZPoly& b) { return *this = *this - b; }
  ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }

  /// multiply by T^e
  ZPoly shift(std::size_t e) const {
    if (is_zero()) return {};
    std::vector<mpz_class> v(e, 0);
    v.insert(v.end(), coeffs.begin(), coeffs.end());
    return ZPoly(std::move(v));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const mpz_class& c = coeffs[i];
      if (c == 0) continue;
      mpz_class a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || a != 1) os << a.get_str();
      if (i > 0) os << "T";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
};

inline mpz_class evaluate(const ZPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (long i = p.degree(); i >= 0; --i) r = r * x + p.coeffs[i];
  return r;
}

inline ZPoly derivative(const ZPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> v(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) v[i - 1] = p.coeffs[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(v));
}

/// nonnegative gcd of the coefficients
inline mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// primitive part with positive leading coefficient
inline ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return {};
  mpz_class g = content(p);
  if (p.lc() < 0) g = -g;
  ZPoly r = p;
  for (auto& c : r.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

inline ZPoly divexact_scalar(const ZPoly& p, const mpz_class& s) {
  ZPoly r = p;
  for (auto& c : r.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return r;
}

/// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B
inline ZPoly prem(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  ZPoly r = a;
  long db = b.degree();
  if (r.degree() < db) return r;
  long e = r.degree() - db + 1;
  const mpz_class& lb = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    long s = r.degree() - db;
    mpz_class lr = r.lc();
    for (auto& c : r.coeffs) c *= lb;
    for (long i = 0; i <= db; ++i) r.coeffs[i + s] -= lr * b.coeffs[i];
    r.trim();
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r.coeffs) c *= f;
  }
  return r;
}

/// quotient A/B when B divides A in Z[T], otherwise nullopt
inline std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  if (a.is_zero()) return ZPoly{};
  long da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs, q(da - db + 1, 0);
  const mpz_class& lb = b.lc();
  for (long s = da - db; s >= 0; --s) {
    mpz_class& top = r[s + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[s] = t;
    for (long i = 0; i <= db; ++i) r[s + i] -= t * b.coeffs[i];
  }
  for (long i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return ZPoly(std::move(q));
}

inline mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Res(P,Q) = lc(P)^deg Q * prod Q(alpha) over roots of P; subresultant PRS.
inline mpz_class resultant(ZPoly a, ZPoly b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  mpz_class s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() * b.degree()) % 2 != 0) s = -1;
  }
  if (b.degree() == 0) return s * ipow(b.coeffs[0], static_cast<unsigned long>(a.degree()));
  mpz_class ca = content(a), cb = content(b);
  a = divexact_scalar(a, ca);
  b = divexact_scalar(b, cb);
  mpz_class t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  mpz_class g = 1, h = 1;
  for (;;) {
    long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    ZPoly r = prem(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divexact_scalar(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      mpz_class num = ipow(g, static_cast<unsigned long>(delta));
      mpz_class den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      long da = a.degree();
      mpz_class num = ipow(b.lc(), static_cast<unsigned long>(da));
      mpz_class den = ipow(h, static_cast<unsigned long>(da - 1));
      mpz_class hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * hh;
    }
  }
}

inline mpz_class discriminant(const ZPoly& p) {
  long d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  mpz_class r = resultant(p, derivative(p));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 != 0) q = -q;
  return q;
}

/// floor(sqrt(n)) for n >= 0 by Newton iteration
inline mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  if (n < 2) return n;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x = 1;
  x <<= (bits + 1) / 2;  // x >= sqrt(n)
  for (;;) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

inline bool is_nonzero_square(const mpz_class& n) {
  if (n <= 0) return false;
  mpz_class r = isqrt(n);
  return r * r == n;
}

/// gcd over Z via primitive remainder sequence; positive leading coefficient
inline ZPoly gcd(const ZPoly& x, const ZPoly& y) {
  if (x.is_zero()) return primitive_part(y);
  if (y.is_zero()) return primitive_part(x);
  mpz_class c;
  mpz_class cx = content(x), cy = content(y);
  mpz_gcd(c.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  ZPoly a = primitive_part(x), b = primitive_part(y);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return c * primitive_part(a);
}

inline ZPoly cyclotomic(unsigned long d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  ZPoly q = ZPoly::monomial(d) - ZPoly{1};
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto r = divide_exact(q, cyclotomic(e));
    q = *r;
  }
  return q;
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    while (n % f == 0) n /= f;
    r -= r / f;
  }
  if (n > 1) r -= r / n;
  return r;
}

/// all d with phi(d) <= 2*k0 and Phi_d dividing A
inline std::vector<unsigned long> cyclotomic_divisor_scan(const ZPoly& a, unsigned long k0) {
  std::vector<unsigned long> out;
  // phi(d) >= sqrt(d/2), so d <= 2*(2k0)^2 covers every candidate
  unsigned long bound = 2 * (2 * k0) * (2 * k0) + 2;
  for (unsigned long d = 1; d <= bound; ++d) {
    if (euler_phi(d) > 2 * k0) continue;
    if (divide_exact(a, cyclotomic(d))) out.push_back(d);
  }
  return out;
}

inline ZPoly reversal(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reversal of the zero polynomial");
  std::vector<mpz_class> v(p.coeffs.rbegin(), p.coeffs.rend());
  return ZPoly(std::move(v));
}

inline bool is_reciprocal(const ZPoly& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return false;
  std::size_t n = p.coeffs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p.coeffs[i] != p.coeffs[n - 1 - i]) return false;
  return true;
}

}  // namespace reciplab
