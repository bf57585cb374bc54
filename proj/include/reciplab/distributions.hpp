#pragma once
// Coefficient measures, Fourier transforms and exact laws of A mod D.
#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fppoly.hpp"
#include "reciprocal.hpp"
#include "residues.hpp"

namespace reciplab {

/// finitely supported probability measure on Z with exact weights
struct Measure {
  std::map<long long, mpq_class> atoms;

  Measure() = default;
  explicit Measure(std::map<long long, mpq_class> a, long long bound = 1000000000LL) : atoms(std::move(a)) {
    mpq_class total = 0;
    for (auto& [x, w] : atoms) {
      w.canonicalize();
      if (w <= 0) throw std::invalid_argument("measure weights must be positive");
      if (x > bound || x < -bound) throw std::invalid_argument("atom outside the support bound");
      total += w;
    }
    if (total != 1) throw std::invalid_argument("measure weights must sum to 1");
  }
  static Measure dirac(long long a) { return Measure({{a, mpq_class(1)}}); }
  static Measure uniform(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("empty uniform range");
    std::map<long long, mpq_class> a;
    mpq_class w(1, static_cast<unsigned long>(hi - lo + 1));
    for (long long x = lo; x <= hi; ++x) a[x] = w;
    return Measure(std::move(a));
  }

  /// projection to Z/nZ
  std::vector<mpq_class> mod(std::uint64_t n) const {
    std::vector<mpq_class> out(n, 0);
    for (const auto& [x, w] : atoms) {
      long long r = x % static_cast<long long>(n);
      if (r < 0) r += static_cast<long long>(n);
      out[static_cast<std::size_t>(r)] += w;
    }
    return out;
  }
  /// largest mass of a residue class mod p
  mpq_class concentration(std::uint64_t p) const {
    auto v = mod(p);
    return *std::max_element(v.begin(), v.end());
  }
  friend bool operator==(const Measure& a, const Measure& b) { return a.atoms == b.atoms; }
};

/// mu_hat(num/den) = sum mu(a) e(a num/den), with a*num reduced exactly mod den
inline std::complex<double> fourier(const Measure& mu, long long num, long long den) {
  std::complex<double> s = 0;
  for (const auto& [a, w] : mu.atoms) {
    __int128 t = static_cast<__int128>(a) * num % den;
    if (t < 0) t += den;
    double ang = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(den);
    s += w.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}
inline std::complex<double> fourier(const Measure& mu, const mpq_class& theta) {
  mpz_class num = theta.get_num(), den = theta.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return fourier(mu, r.get_si(), den.get_si());
}
inline std::complex<double> fourier(const Measure& mu, double theta) {
  std::complex<double> s = 0;
  for (const auto& [a, w] : mu.atoms) s += w.get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(a) * theta);
  return s;
}

/// mu_0..mu_{m-1}
struct MeasureSeq {
  std::vector<Measure> per;

  static MeasureSeq broadcast(const Measure& mu, std::size_t m) { return MeasureSeq{std::vector<Measure>(m, mu)}; }
  std::size_t size() const { return per.size(); }
  const Measure& operator[](std::size_t j) const { return per.at(j); }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// independent generator for (seed, stream)
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(seed)), static_cast<std::uint32_t>(splitmix64(seed) >> 32),
                    static_cast<std::uint32_t>(splitmix64(stream ^ 0xa5a5a5a5ull)),
                    static_cast<std::uint32_t>(splitmix64(stream ^ 0xa5a5a5a5ull) >> 32)};
  return std::mt19937_64(seq);
}

/// inverse-CDF sampler with exact thresholds floor(F(x) * 2^64)
class MeasureSampler {
 public:
  explicit MeasureSampler(const Measure& mu) {
    mpq_class cum = 0;
    mpz_class two64 = mpz_class(1) << 64;
    for (const auto& [x, w] : mu.atoms) {
      cum += w;
      mpq_class scaled = cum * two64;
      mpz_class t = scaled.get_num() / scaled.get_den();
      values_.push_back(x);
      unsigned __int128 v = 0;
      if (t >= two64) {
        v = static_cast<unsigned __int128>(1) << 64;
      } else {
        mpz_class hi = t >> 32, lo = t - (hi << 32);
        v = (static_cast<unsigned __int128>(hi.get_ui()) << 32) | lo.get_ui();
      }
      thresholds_.push_back(v);
    }
  }
  template <class Rng>
  long long operator()(Rng& rng) const {
    unsigned __int128 u = static_cast<std::uint64_t>(rng());
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (u < thresholds_[i]) return values_[i];
    return values_.back();
  }

 private:
  std::vector<long long> values_;
  std::vector<unsigned __int128> thresholds_;
};

/// a_m = 1 and a_j ~ mu_j independently
template <class Rng>
ZRecPoly sample_reciprocal(const std::vector<MeasureSampler>& samplers, std::size_t m, Rng& rng) {
  std::vector<mpz_class> half(m + 1);
  for (std::size_t j = 0; j < m; ++j) half[j] = static_cast<long>(samplers.at(j)(rng));
  half[m] = 1;
  return make_zrec(std::move(half));
}
template <class Rng>
ZRecPoly sample_reciprocal(const MeasureSeq& mus, std::size_t m, Rng& rng) {
  std::vector<MeasureSampler> s;
  for (std::size_t j = 0; j < m; ++j) s.emplace_back(mus[j]);
  return sample_reciprocal(s, m, rng);
}

struct FourierConditionResult {
  bool ok = true;
  double worst = 0;  // largest normalised sum seen
  double bound = 0;
  std::size_t j = 0;
  std::uint64_t Q = 0, ell = 0;
};

/// (1/sqrt Q) sum_k |mu_j(k/Q + l/R)| <= 1 - m^{-1/10} for all QR = P, Q > 1, all l
inline FourierConditionResult check_fourier_condition(const MeasureSeq& mus, const std::vector<std::uint64_t>& primes,
                                                      double m) {
  FourierConditionResult res;
  res.bound = 1.0 - std::pow(m, -0.1);
  std::uint64_t P = 1;
  for (auto q : primes) P *= q;
  std::vector<const Measure*> distinct;
  std::vector<std::size_t> index;
  for (std::size_t j = 0; j < mus.size(); ++j) {
    bool seen = false;
    for (auto* d : distinct) seen = seen || (*d == mus[j]);
    if (!seen) {
      distinct.push_back(&mus[j]);
      index.push_back(j);
    }
  }
  res.ok = true;
  res.worst = -1;
  for (std::size_t t = 0; t < distinct.size(); ++t) {
    const Measure& mu = *distinct[t];
    for (std::uint64_t mask = 1; mask < (1ull << primes.size()); ++mask) {
      std::uint64_t Q = 1;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) Q *= primes[i];
      std::uint64_t R = P / Q;
      for (std::uint64_t l = 0; l < R; ++l) {
        double s = 0;
        for (std::uint64_t k = 0; k < Q; ++k)
          s += std::abs(fourier(mu, static_cast<long long>((k * R + l * Q) % P), static_cast<long long>(P)));
        s /= std::sqrt(static_cast<double>(Q));
        if (s > res.worst) {
          res.worst = s;
          res.j = index[t];
          res.Q = Q;
          res.ell = l;
        }
      }
    }
  }
  res.ok = res.worst <= res.bound;
  return res;
}

/// first set of `count` distinct primes (lexicographic, each <= max_prime) passing the Fourier condition
inline std::optional<std::vector<std::uint64_t>> search_fourier_primes(const MeasureSeq& mus, double m, std::size_t count,
                                                                       std::uint64_t max_prime) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t q = 2; q <= max_prime; ++q)
    if (is_prime_u64(q)) ps.push_back(q);
  std::vector<std::size_t> c(count);
  for (std::size_t i = 0; i < count; ++i) c[i] = i;
  if (ps.size() < count) return std::nullopt;
  for (;;) {
    std::vector<std::uint64_t> pick;
    for (auto i : c) pick.push_back(ps[i]);
    if (check_fourier_condition(mus, pick, m).ok) return pick;
    long i = static_cast<long>(count) - 1;
    while (i >= 0 && c[i] == ps.size() - count + i) --i;
    if (i < 0) return std::nullopt;
    ++c[i];
    for (std::size_t t = i + 1; t < count; ++t) c[t] = c[t - 1] + 1;
  }
}

/// residue (deg < n) <-> base-p integer
inline std::uint64_t residue_index(const FpPoly& r, std::size_t n) {
  std::uint64_t idx = 0;
  for (std::size_t i = n; i-- > 0;) idx = idx * r.p + r.coeff(i);
  return idx;
}
inline FpPoly residue_from_index(std::uint64_t p, std::uint64_t idx, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = idx % p;
    idx /= p;
  }
  return FpPoly::unchecked(p, std::move(v));
}

namespace detail {

inline std::uint64_t add_index(std::uint64_t x, std::uint64_t y, std::uint64_t p, std::size_t n) {
  std::uint64_t out = 0, scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return out;
}

inline std::uint64_t scale_index(std::uint64_t x, std::uint64_t a, std::uint64_t p, std::size_t n) {
  std::uint64_t out = 0, scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out += (x % p * a % p) * scale;
    x /= p;
    scale *= p;
  }
  return out;
}

}  // namespace detail

/// exact law of (A_p mod D_p)_p over a tuple of primes
struct ModDDistribution {
  std::vector<std::uint64_t> primes;
  std::vector<FpPoly> D;
  long m = 0;
  std::map<std::vector<std::uint64_t>, mpq_class> probs;  // key: residue index per prime

  mpq_class at(const std::vector<FpPoly>& c) const {
    std::vector<std::uint64_t> key;
    for (std::size_t i = 0; i < D.size(); ++i) key.push_back(residue_index(c[i] % D[i], static_cast<std::size_t>(D[i].degree())));
    auto it = probs.find(key);
    return it == probs.end() ? mpq_class(0) : it->second;
  }
  mpq_class total() const {
    mpq_class s = 0;
    for (const auto& [k, w] : probs) s += w;
    return s;
  }
};

/// law of A mod D by convolving a_0 T^m and a_j (T^{m-j} + T^{m+j}), translated by 1 + T^{2m}
inline ModDDistribution exact_mod_D_distribution(const MeasureSeq& mus, long m, const std::vector<FpPoly>& Ds,
                                                 unsigned long long cap = 1000000ull) {
  if (static_cast<long>(mus.size()) < m) throw SizeMismatch("need a measure for each a_j, j < m");
  ModDDistribution out;
  out.m = m;
  out.D = Ds;
  std::uint64_t joint_mod = 1;
  mpz_class states = 1;
  for (const auto& d : Ds) {
    out.primes.push_back(d.p);
    joint_mod *= d.p;
    states *= ipow(mpz_class(static_cast<unsigned long>(d.p)), static_cast<unsigned long>(d.degree()));
    if (half_degree(d) > static_cast<std::size_t>(m)) throw std::invalid_argument("exact law needs k <= m");
  }
  if (states > mpz_class(std::to_string(cap))) throw CapExceeded("state space above the cap");
  const std::size_t r = Ds.size();
  auto reduce = [&](const FpPoly& x, std::size_t i) {
    return residue_index(x % Ds[i], static_cast<std::size_t>(Ds[i].degree()));
  };
  std::vector<std::uint64_t> start;
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly f = FpPoly::monomial(Ds[i].p, 2 * m) + FpPoly::one(Ds[i].p);
    start.push_back(reduce(f, i));
  }
  std::map<std::vector<std::uint64_t>, mpq_class> cur{{start, mpq_class(1)}};
  for (long j = 0; j < m; ++j) {
    std::vector<std::uint64_t> vj;
    for (std::size_t i = 0; i < r; ++i) {
      FpPoly v = j == 0 ? FpPoly::monomial(Ds[i].p, m) : FpPoly::monomial(Ds[i].p, m - j) + FpPoly::monomial(Ds[i].p, m + j);
      vj.push_back(reduce(v, i));
    }
    auto law = mus[static_cast<std::size_t>(j)].mod(joint_mod);
    std::map<std::vector<std::uint64_t>, mpq_class> next;
    for (const auto& [x, w] : cur)
      for (std::uint64_t a = 0; a < joint_mod; ++a) {
        if (law[a] == 0) continue;
        std::vector<std::uint64_t> y(r);
        for (std::size_t i = 0; i < r; ++i) {
          std::size_t n = static_cast<std::size_t>(Ds[i].degree());
          y[i] = detail::add_index(x[i], detail::scale_index(vj[i], a % Ds[i].p, Ds[i].p, n), Ds[i].p, n);
        }
        next[y] += w * law[a];
      }
    cur = std::move(next);
  }
  out.probs = std::move(cur);
  return out;
}
inline ModDDistribution exact_mod_D_distribution(const MeasureSeq& mus, long m, const FpPoly& D,
                                                 unsigned long long cap = 1000000ull) {
  return exact_mod_D_distribution(mus, m, std::vector<FpPoly>{D}, cap);
}

namespace detail {

inline bool admissible_modulus(const FpPoly& d) {
  return !(d.p == 2 && (d % FpPoly(2, {1, 0, 1})).is_zero());
}

/// all residue tuples in R_m(D_1) x ... x R_m(D_r)
inline std::vector<std::vector<FpPoly>> rm_tuples(const std::vector<FpPoly>& Ds, long m) {
  std::vector<std::vector<FpPoly>> out{{}};
  for (const auto& d : Ds) {
    std::vector<std::vector<FpPoly>> next;
    for (const auto& c : rm_set(d, m))
      for (const auto& t : out) {
        auto u = t;
        u.push_back(c);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// one term of Delta^R: max over C in R_m(D) of |P(A = C mod D) - ||D||^{-1/2}|
inline mpq_class delta_term(const MeasureSeq& mus, long m, const std::vector<FpPoly>& Ds, unsigned long long cap = 1000000ull) {
  auto law = exact_mod_D_distribution(mus, m, Ds, cap);
  mpz_class norm = 1;
  for (const auto& d : Ds) norm *= ipow(mpz_class(static_cast<unsigned long>(d.p)), half_degree(d));
  mpq_class target(1, norm);
  target.canonicalize();
  mpq_class best = 0;
  for (const auto& c : detail::rm_tuples(Ds, m)) {
    mpq_class diff = abs(law.at(c) - target);
    if (diff > best) best = diff;
  }
  return best;
}

/// Delta^R over tuples of reciprocal moduli of degree <= 2 kmax per prime
inline mpq_class delta_R(const MeasureSeq& mus, long m, const std::vector<std::uint64_t>& primes, std::size_t kmax,
                         unsigned long long cap = 1000000ull) {
  if (primes.size() > 2) throw CapExceeded("exact Delta^R supports at most two primes");
  if (static_cast<long>(kmax) > m) throw std::invalid_argument("kmax must not exceed m");
  if (kmax == 0) return 0;
  std::vector<std::vector<FpPoly>> per;
  for (auto q : primes) {
    std::vector<FpPoly> ok;
    for (const auto& d : reciprocal_moduli(q, kmax))
      if (detail::admissible_modulus(d)) ok.push_back(d);
    per.push_back(ok);
  }
  std::vector<std::vector<FpPoly>> tuples{{}};
  for (const auto& list : per) {
    std::vector<std::vector<FpPoly>> next;
    for (const auto& t : tuples)
      for (const auto& d : list) {
        auto u = t;
        u.push_back(d);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  mpq_class total = 0;
  for (const auto& t : tuples) {
    bool trivial = true;
    for (const auto& d : t) trivial = trivial && d.degree() == 0;
    if (trivial) continue;
    total += delta_term(mus, m, t, cap);
  }
  return total;
}

/// trace-side term: max over all C mod D of |P(A_R = C mod D) - p^{-deg D}|
inline mpq_class delta_trace_term(const MeasureSeq& mus, long m, const FpPoly& d) {
  const std::uint64_t p = d.p;
  const std::size_t n = static_cast<std::size_t>(d.degree());
  if (n == 0) return 0;
  auto idx = [&](const FpPoly& x) { return residue_index(x % d, n); };
  std::map<std::uint64_t, mpq_class> cur{{idx(chebyshev(m, p)), mpq_class(1)}};
  for (long j = 0; j < m; ++j) {
    FpPoly v = j == 0 ? FpPoly::one(p) : chebyshev(j, p);
    std::uint64_t vi = idx(v);
    auto law = mus[static_cast<std::size_t>(j)].mod(p);
    std::map<std::uint64_t, mpq_class> next;
    for (const auto& [x, w] : cur)
      for (std::uint64_t a = 0; a < p; ++a)
        if (law[a] != 0) next[detail::add_index(x, detail::scale_index(vi, a, p, n), p, n)] += w * law[a];
    cur = std::move(next);
  }
  mpq_class target(1, ipow(mpz_class(static_cast<unsigned long>(p)), n));
  target.canonicalize();
  mpz_class total_states = ipow(mpz_class(static_cast<unsigned long>(p)), n);
  mpq_class best = 0;
  for (const auto& [x, w] : cur) best = std::max<mpq_class>(best, abs(w - target));
  if (mpz_class(static_cast<unsigned long>(cur.size())) < total_states) best = std::max<mpq_class>(best, target);
  return best;
}

/// Delta_{R,p}: monic D of degree 1..kmax with T not dividing D
inline mpq_class delta_trace(const MeasureSeq& mus, long m, std::uint64_t p, std::size_t kmax) {
  mpq_class total = 0;
  for (std::size_t deg = 1; deg <= kmax; ++deg) {
    std::vector<std::uint64_t> c(deg + 1, 0);
    c[deg] = 1;
    for (;;) {
      if (c[0] != 0) total += delta_trace_term(mus, m, FpPoly::unchecked(p, c));
      std::size_t i = 0;
      while (i < deg && ++c[i] == p) c[i++] = 0;
      if (i == deg) break;
    }
  }
  return total;
}

/// |prod_j mu_j(psi^{(m,j)}(B/D))| summed over the primes of the tuple
inline double sigma(const MeasureSeq& mus, long m, const std::vector<FpPoly>& Bs, const std::vector<FpPoly>& Ds) {
  if (Bs.size() != Ds.size()) throw SizeMismatch("B and D tuples differ in length");
  long long P = 1;
  for (const auto& d : Ds) P *= static_cast<long long>(d.p);
  double prod = 1;
  for (long j = 0; j < m; ++j) {
    long long num = 0;
    for (std::size_t i = 0; i < Ds.size(); ++i) {
      long long p = static_cast<long long>(Ds[i].p);
      std::uint64_t v = half_degree(Ds[i]) == 0 ? 0 : psi_mj(Bs[i] % Ds[i], Ds[i], m, j);
      num = (num + static_cast<long long>(v) * (P / p)) % P;
    }
    prod *= std::abs(fourier(mus[static_cast<std::size_t>(j)], num, P));
  }
  return prod;
}

/// closed form of E[e(psi(A B/D))] at one prime
inline std::complex<double> fourier_expectation(const MeasureSeq& mus, long m, const FpPoly& b, const FpPoly& d) {
  const long long p = static_cast<long long>(d.p);
  std::uint64_t fixed = (laurent_residue(b, d, 0) + laurent_residue(b, d, 2 * m)) % d.p;
  std::complex<double> r = std::polar(1.0, 2.0 * M_PI * static_cast<double>(fixed) / static_cast<double>(p));
  for (long j = 0; j < m; ++j)
    r *= fourier(mus[static_cast<std::size_t>(j)], static_cast<long long>(psi_mj(b, d, m, j)), p);
  return r;
}

struct DivBoundReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_ratio = 0;  // max P(D | A) / e^{-delta k}
};

/// P(D | A_p) <= e^{-delta k} for all reciprocal D of degree 2k, 1 <= k <= kmax
inline DivBoundReport div_probability_bound_check(const MeasureSeq& mus, long m, std::uint64_t p, std::size_t kmax) {
  DivBoundReport rep;
  mpq_class conc = 0;
  for (long j = 0; j < m; ++j) conc = std::max<mpq_class>(conc, mus[static_cast<std::size_t>(j)].concentration(p));
  double delta = 1.0 - conc.get_d();
  for (std::size_t k = 1; k <= kmax; ++k)
    for (const auto& d : enumerate_reciprocal_mod_p(p, k)) {
      auto law = exact_mod_D_distribution(mus, m, d);
      double pr = law.at({FpPoly::zero(p)}).get_d();
      double bound = std::exp(-delta * static_cast<double>(k));
      ++rep.checked;
      rep.worst_ratio = std::max(rep.worst_ratio, pr / bound);
      if (pr > bound * (1 + 1e-12)) ++rep.violations;
    }
  return rep;
}

struct NumericCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_error = 0;
};

/// (1/||D||^{1/2}) sum_{B in L_m(D)} e(res(CB/D)/p) against 1_{C = 0} for every C in R_m(D)
inline NumericCheck fourier_inversion_check(std::uint64_t p, long m, std::size_t max_k, double tol = 1e-10) {
  NumericCheck out;
  auto L = good_representatives(p, m, max_k);
  for (const auto& [d, reps] : L) {
    std::size_t k = half_degree(d);
    double scale = std::pow(static_cast<double>(p), -static_cast<double>(k));
    for (const auto& c : rm_set(d, m)) {
      std::complex<double> s = 0;
      for (const auto& b : reps) {
        std::uint64_t r = k == 0 ? 0 : laurent_residue((c * b) % d, d, 0);
        s += std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(p));
      }
      s *= scale;
      double want = c.is_zero() || k == 0 ? 1.0 : 0.0;
      double err = std::abs(s - want);
      ++out.checked;
      out.max_error = std::max(out.max_error, err);
      if (err > tol) ++out.violations;
    }
  }
  return out;
}

/// max over j and s = 1..p-1 of |mu_j(s/p)|
inline double fourier_beta(const MeasureSeq& mus, long m, std::uint64_t p) {
  double beta = 0;
  for (long j = 0; j < m; ++j)
    for (std::uint64_t s = 1; s < p; ++s)
      beta = std::max(beta, std::abs(fourier(mus[static_cast<std::size_t>(j)], static_cast<long long>(s), static_cast<long long>(p))));
  return beta;
}

/// sigma <= beta^{floor((m+k)/(2k))} on every minor residue B mod D, D reciprocal of degree 2k, 1 <= k <= kmax
inline NumericCheck linf_check(const MeasureSeq& mus, long m, std::uint64_t p, std::size_t kmax, double tol = 1e-10) {
  NumericCheck out;
  double beta = fourier_beta(mus, m, p);
  for (std::size_t k = 1; k <= kmax && static_cast<long>(k) <= m + 1; ++k)
    for (const auto& d : enumerate_reciprocal_mod_p(p, k)) {
      if (!detail::admissible_modulus(d)) continue;
      auto major = major_space(d, m);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < 2 * k; ++i) total *= p;
      double bound = std::pow(beta, static_cast<double>((static_cast<std::size_t>(m) + k) / (2 * k)));
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        FpPoly b = residue_from_index(p, idx, 2 * k);
        if (major.contains(b)) continue;
        double s = sigma(mus, m, {b}, {d});
        ++out.checked;
        out.max_error = std::max(out.max_error, s - bound);
        if (s > bound + tol) ++out.violations;
      }
    }
  return out;
}

}  // namespace reciplab
