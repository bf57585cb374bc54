#pragma once
// Reciprocal polynomials, the trace correspondence and reciprocal factor structure.
#include <gmpxx.h>

#include <map>
#include <vector>

#include "fppoly.hpp"
#include "intpoly.hpp"
#include "zfactor.hpp"

namespace reciplab {

/// Coefficient ring for Z.
struct IntRing {
  using value = mpz_class;
  using poly = ZPoly;
  value zero() const { return 0; }
  value from(const mpz_class& v) const { return v; }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  poly make(std::vector<value> v) const { return ZPoly(std::move(v)); }
  friend bool operator==(const IntRing&, const IntRing&) { return true; }
};

/// Coefficient ring F_p.
struct FpRing {
  std::uint64_t p;
  using value = std::uint64_t;
  using poly = FpPoly;
  value zero() const { return 0; }
  value from(const mpz_class& v) const { return reduce_mod(v, p); }
  value add(value a, value b) const { return (a + b) % p; }
  value sub(value a, value b) const { return (a + p - b) % p; }
  value mul(value a, value b) const { return a * b % p; }
  poly make(std::vector<value> v) const { return FpPoly::unchecked(p, std::move(v)); }
  friend bool operator==(const FpRing& a, const FpRing& b) { return a.p == b.p; }
};

inline mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// c_l + ... + c_0 T^l + ... + c_l T^{2l}, stored as half = (c_0..c_l)
template <class Ring>
struct ShiftedRecPoly {
  Ring ring;
  std::vector<typename Ring::value> half;

  std::size_t level() const { return half.size() - 1; }
  typename Ring::poly expand() const {
    std::size_t l = level();
    std::vector<typename Ring::value> v(2 * l + 1, ring.zero());
    for (std::size_t i = 0; i <= l; ++i) {
      v[l + i] = half[i];
      v[l - i] = half[i];
    }
    return ring.make(std::move(v));
  }
  friend ShiftedRecPoly operator+(const ShiftedRecPoly& a, const ShiftedRecPoly& b) {
    if (a.half.size() != b.half.size()) throw SizeMismatch("shifted reciprocal levels differ");
    ShiftedRecPoly r = a;
    for (std::size_t i = 0; i < r.half.size(); ++i) r.half[i] = a.ring.add(a.half[i], b.half[i]);
    return r;
  }
  friend bool operator==(const ShiftedRecPoly& a, const ShiftedRecPoly& b) { return a.half == b.half; }
};

/// monic reciprocal polynomial of degree 2m: half = (a_0..a_m), a_m = 1
template <class Ring>
struct RecPoly : ShiftedRecPoly<Ring> {
  RecPoly() = default;
  RecPoly(Ring r, std::vector<typename Ring::value> h) : ShiftedRecPoly<Ring>{r, std::move(h)} {
    if (this->half.empty() || this->half.back() != this->ring.from(1))
      throw std::invalid_argument("reciprocal polynomial must be monic");
  }
  std::size_t m() const { return this->level(); }
};

using ZRecPoly = RecPoly<IntRing>;
using FpRecPoly = RecPoly<FpRing>;

inline ZRecPoly make_zrec(std::vector<mpz_class> half) { return ZRecPoly(IntRing{}, std::move(half)); }
inline FpRecPoly make_fprec(std::uint64_t p, std::vector<std::uint64_t> half) {
  for (auto& c : half) c %= p;
  return FpRecPoly(FpRing{p}, std::move(half));
}

/// half coefficients of a dense reciprocal polynomial of even degree
template <class Poly>
auto half_of(const Poly& a) {
  if (!is_reciprocal(a)) throw std::invalid_argument("polynomial is not reciprocal");
  std::size_t m = static_cast<std::size_t>(a.degree() / 2);
  using V = std::decay_t<decltype(a.coeffs[0])>;
  std::vector<V> h(a.coeffs.begin() + m, a.coeffs.end());
  return h;
}

inline ZRecPoly to_recpoly(const ZPoly& a) { return make_zrec(half_of(a)); }
inline FpRecPoly to_recpoly(const FpPoly& a) { return make_fprec(a.p, half_of(a)); }

namespace detail {

/// T^(l-d) (T^2+1)^d as a dense vector of length 2l+1
template <class Ring>
std::vector<typename Ring::value> trace_basis(const Ring& ring, std::size_t l, std::size_t d) {
  std::vector<typename Ring::value> v(2 * l + 1, ring.zero());
  for (std::size_t t = 0; t <= d; ++t) v[l - d + 2 * t] = ring.from(binom(d, t));
  return v;
}

}  // namespace detail

/// A_R with A = T^l A_R(T + 1/T); computed by the binomial formula and by peeling, which must agree
template <class Ring>
typename Ring::poly to_trace(const ShiftedRecPoly<Ring>& a) {
  const Ring& ring = a.ring;
  const std::size_t l = a.level();
  std::vector<typename Ring::value> b(l + 1, ring.zero());
  for (std::size_t i = 0; i <= l; ++i) {
    typename Ring::value s = a.half[i];
    for (std::size_t j = 1; i + 2 * j <= l; ++j) {
      mpz_class w = binom(i + j, j) + (i + j >= 1 ? binom(i + j - 1, j - 1) : mpz_class(0));
      if (j % 2) w = -w;
      s = ring.add(s, ring.mul(ring.from(w), a.half[i + 2 * j]));
    }
    b[i] = s;
  }
  // peel off T^(l-d)(T^2+1)^d from the top
  std::vector<typename Ring::value> cur(2 * l + 1, ring.zero());
  for (std::size_t i = 0; i <= l; ++i) cur[l + i] = cur[l - i] = a.half[i];
  for (std::size_t d = l + 1; d-- > 0;) {
    auto top = cur[l + d];
    if (top != b[d]) throw std::logic_error("trace formula disagrees with the division route");
    auto basis = detail::trace_basis(ring, l, d);
    for (std::size_t t = 0; t < basis.size(); ++t) cur[t] = ring.sub(cur[t], ring.mul(top, basis[t]));
  }
  for (const auto& c : cur)
    if (c != ring.zero()) throw std::logic_error("input is not shifted reciprocal");
  return ring.make(std::move(b));
}

/// G^{R,l} = T^l G(T + 1/T)
template <class Ring>
ShiftedRecPoly<Ring> from_trace(const Ring& ring, const typename Ring::poly& g, std::size_t l) {
  if (g.degree() > static_cast<long>(l)) throw std::invalid_argument("level below the degree of G");
  std::vector<typename Ring::value> half(l + 1, ring.zero());
  auto bc = [&](std::size_t i) { return i < g.coeffs.size() ? g.coeffs[i] : ring.zero(); };
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; i + 2 * j <= l; ++j)
      half[i] = ring.add(half[i], ring.mul(bc(i + 2 * j), ring.from(binom(i + 2 * j, i + j))));
  std::vector<typename Ring::value> dense(2 * l + 1, ring.zero());
  for (std::size_t d = 0; d <= l; ++d) {
    auto basis = detail::trace_basis(ring, l, d);
    for (std::size_t t = 0; t < basis.size(); ++t) dense[t] = ring.add(dense[t], ring.mul(bc(d), basis[t]));
  }
  for (std::size_t i = 0; i <= l; ++i)
    if (dense[l + i] != half[i] || dense[l - i] != half[i]) throw std::logic_error("inverse trace formula disagrees with expansion");
  return ShiftedRecPoly<Ring>{ring, std::move(half)};
}

inline ShiftedRecPoly<IntRing> from_trace(const ZPoly& g, std::size_t l) { return from_trace(IntRing{}, g, l); }
inline ShiftedRecPoly<FpRing> from_trace(const FpPoly& g, std::size_t l) { return from_trace(FpRing{g.p}, g, l); }

inline ZPoly to_trace(const ZPoly& a) { return to_trace<IntRing>(to_recpoly(a)); }
inline FpPoly to_trace(const FpPoly& a) { return to_trace<FpRing>(to_recpoly(a)); }

namespace detail {

/// greatest reciprocal divisor assembled from a factorization: factors given with multiplicities
template <class Poly, class Rev>
Poly assemble_reciprocal(Poly acc, const std::vector<std::pair<Poly, int>>& facs, Rev rev_norm) {
  std::map<std::size_t, int> seen;
  for (std::size_t i = 0; i < facs.size(); ++i) {
    const auto& [f, e] = facs[i];
    if (f.coeffs[0] == 0) continue;  // T
    Poly r = rev_norm(f);
    if (r == f) {
      int use = f.degree() % 2 ? 2 * (e / 2) : e;
      for (int k = 0; k < use; ++k) acc = acc * f;
      continue;
    }
    if (seen.count(i)) continue;
    for (std::size_t j = i + 1; j < facs.size(); ++j) {
      if (facs[j].first != r) continue;
      seen[j] = 1;
      int use = std::min(e, facs[j].second);
      for (int k = 0; k < use; ++k) acc = acc * f * r;
    }
  }
  return acc;
}

}  // namespace detail

/// monic reciprocal divisor of maximal degree common to A and B over F_p
inline FpPoly reciprocal_gcd(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("reciprocal gcd of zero");
  FpPoly g = fp_gcd(a, b);
  auto fac = fp_factor(g);
  FpPoly r = detail::assemble_reciprocal(FpPoly::one(a.p), fac.factors,
                                         [](const FpPoly& f) { return make_monic(reversal(f)); });
  r = make_monic(r);
  if (!r.is_one() && !is_reciprocal(r)) throw ShapeViolation("assembled reciprocal gcd is not reciprocal");
  return r;
}

/// over Q: primitive reciprocal divisor of maximal degree with positive lc
inline ZPoly reciprocal_gcd(const ZPoly& a, const ZPoly& b, long cap = 128) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("reciprocal gcd of zero");
  ZPoly g = gcd(a, b);
  auto fac = factor_over_Z(g, cap);
  ZPoly r = detail::assemble_reciprocal(ZPoly{1}, fac.factors, [](const ZPoly& f) { return primitive_part(reversal(f)); });
  r = primitive_part(r);
  if (r.degree() > 0 && !is_reciprocal(r)) throw ShapeViolation("assembled reciprocal gcd is not reciprocal");
  return r;
}

inline bool is_semi_irreducible(const ZRecPoly& a) { return is_irreducible_over_Z(to_trace(a)); }
inline bool is_semi_irreducible(const FpRecPoly& a) {
  if (a.m() == 0) return false;
  return fp_is_irreducible(to_trace(a));
}

struct FactorShape {
  std::uint64_t unit = 1;
  int a = 0;  // exponent of (T-1) is 2a
  int b = 0;  // exponent of (T+1) is 2b
  std::vector<FpPoly> reciprocal_factors;
  std::vector<std::pair<FpPoly, FpPoly>> pairs;
  bool char2_folded = false;  // p = 2: T+1 = T-1, everything reported in a

  FpPoly product(std::uint64_t p) const {
    FpPoly r = FpPoly::unchecked(p, {unit});
    FpPoly tm = FpPoly(p, {-1, 1}), tp = FpPoly(p, {1, 1});
    for (int i = 0; i < 2 * a; ++i) r *= tm;
    for (int i = 0; i < 2 * b; ++i) r *= tp;
    for (const auto& f : reciprocal_factors) r *= f;
    for (const auto& [j, jr] : pairs) r *= j * jr;
    return r;
  }
};

inline FactorShape factor_shape(const FpPoly& A) {
  if (!is_reciprocal(A)) throw std::invalid_argument("factor_shape needs a reciprocal polynomial");
  const std::uint64_t p = A.p;
  FactorShape s;
  s.char2_folded = (p == 2);
  auto fac = fp_factor(A);
  s.unit = fac.unit;
  FpPoly tm(p, {-1, 1}), tp(p, {1, 1});
  std::map<FpPoly, int> mult;
  for (const auto& [f, e] : fac.factors) mult[f] = e;
  for (const auto& [f, e] : fac.factors) {
    if (f == tm || f == tp) {
      if (e % 2) throw ShapeViolation("odd exponent at T-1 or T+1");
      (f == tm ? s.a : s.b) = e / 2;
      continue;
    }
    FpPoly r = make_monic(reversal(f));
    if (r == f) {
      for (int i = 0; i < e; ++i) s.reciprocal_factors.push_back(f);
      continue;
    }
    auto it = mult.find(r);
    if (it == mult.end() || it->second != e) throw ShapeViolation("factor without a matching reversal");
    if (f < r)
      for (int i = 0; i < e; ++i) s.pairs.emplace_back(f, r);
  }
  if (s.product(p) != A) throw ShapeViolation("factor shape does not multiply back");
  return s;
}

struct Reducibility {
  enum Kind { Irreducible, ReciprocalDivisor, Exceptional } kind = Irreducible;
  ZPoly poly;  // D for ReciprocalDivisor, I for Exceptional
};

inline const char* to_string(Reducibility::Kind k) {
  switch (k) {
    case Reducibility::Irreducible: return "irreducible";
    case Reducibility::ReciprocalDivisor: return "reciprocal_divisor";
    default: return "exceptional";
  }
}

/// checks A = +-I*I_rev
inline bool is_exceptional_pair(const ZPoly& A, const ZPoly& I) {
  ZPoly prod = I * reversal(I);
  return prod == A || -prod == A;
}

inline Reducibility classify_reducibility(const ZRecPoly& a, long cap = 128) {
  ZPoly A = a.expand();
  if (A.degree() > cap) throw DegreeCapExceeded("degree above the factorization cap");
  ZPoly tr = to_trace(a);
  auto ft = factor_over_Z(tr, cap);
  Reducibility out;
  if (!(ft.factors.size() == 1 && ft.factors[0].second == 1)) {
    const ZPoly& g = ft.factors.front().first;  // smallest degree first
    ZPoly D = from_trace(g, static_cast<std::size_t>(g.degree())).expand();
    if (!divide_exact(A, D) || 2 * g.degree() > static_cast<long>(a.m()))
      throw ShapeViolation("reciprocal divisor check failed");
    out.kind = Reducibility::ReciprocalDivisor;
    out.poly = D;
    return out;
  }
  auto fa = factor_over_Z(A, cap);
  if (fa.factors.size() == 1 && fa.factors[0].second == 1) return out;
  const ZPoly& I = fa.factors.front().first;
  if (!is_exceptional_pair(A, I)) throw ShapeViolation("semi-irreducible but not an exceptional pair");
  out.kind = Reducibility::Exceptional;
  out.poly = I;
  return out;
}

}  // namespace reciplab
