#pragma once
// Monte Carlo and exhaustive experiments over random reciprocal polynomials.
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "distributions.hpp"
#include "galois.hpp"
#include "intpoly.hpp"
#include "reciprocal.hpp"
#include "zfactor.hpp"

namespace reciplab {

inline constexpr double wilson_z = 1.959963984540054;

struct Interval {
  double low = 0, high = 0;
};

/// Wilson score interval for k successes in n trials
inline Interval wilson_interval(double k, double n, double z = wilson_z) {
  if (n <= 0) return {0, 1};
  double ph = k / n, z2 = z * z;
  double denom = 1 + z2 / n;
  double centre = (ph + z2 / (2 * n)) / denom;
  double half = z / denom * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

struct SampleOutcome {
  bool irreducible = false;
  long min_divisor_half_degree = -1;  // smallest k with a reciprocal divisor of degree 2k, -1 if none
  bool exceptional = false;
  bool disc_square = false;
  std::string galois;  // empty when not classified
  bool structural_ok = true;
  std::string note;
};

struct AnalysisOptions {
  bool galois = false;
  long direct_disc_max_m = 20;
};

/// irreducibility, divisor structure, discriminant squareness and optionally the Galois verdict
inline SampleOutcome analyze_sample(const ZRecPoly& a, const AnalysisOptions& opt = {}) {
  SampleOutcome out;
  const long m = static_cast<long>(a.m());
  ZPoly A = a.expand();
  ZPoly B = to_trace(a);
  mpz_class pm = evaluate(A, 1) * evaluate(A, -1);
  if (m % 2) pm = -pm;

  if (m >= 1 && !is_irreducible_over_Z(B)) {
    auto fb = factor_over_Z(B);
    const ZPoly& g = fb.factors.front().first;
    ZPoly D = from_trace(g, static_cast<std::size_t>(g.degree())).expand();
    out.min_divisor_half_degree = g.degree();
    if (!divide_exact(A, D) || 2 * g.degree() > m) {
      out.structural_ok = false;
      out.note = "trace factor " + g.to_string() + " does not give a small reciprocal divisor";
    }
  } else {
    mpz_class apm = abs(pm);
    bool maybe_pair = apm == 0 || isqrt(apm) * isqrt(apm) == apm;
    if (!maybe_pair || is_irreducible_over_Z(A)) {
      out.irreducible = true;
    } else {
      auto fa = factor_over_Z(A);
      const ZPoly& I = fa.factors.front().first;
      out.exceptional = true;
      if (I.degree() != m || !is_exceptional_pair(A, I)) {
        out.structural_ok = false;
        out.note = "semi-irreducible but not +-I*I_rev";
      }
    }
  }

  if (m <= opt.direct_disc_max_m) {
    out.disc_square = is_nonzero_square(discriminant(A));
  } else {
    out.disc_square = is_nonzero_square(pm) && discriminant(B) != 0;
  }

  if (opt.galois) {
    if (!out.irreducible) {
      out.galois = "reducible";
    } else {
      std::string v = classify_galois(A).verdict;
      if (v.rfind("other", 0) == 0) v = "other";
      out.galois = v;
    }
  }
  return out;
}

enum class SamplingMode { Auto, Exhaustive, MonteCarlo };

inline const char* to_string(SamplingMode s) {
  switch (s) {
    case SamplingMode::Exhaustive: return "exhaustive";
    case SamplingMode::MonteCarlo: return "montecarlo";
    default: return "auto";
  }
}

struct ExperimentConfig {
  MeasureSeq measures;  // at least max(m_grid) entries
  std::vector<long> m_grid;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  SamplingMode mode = SamplingMode::Auto;
  std::vector<std::string> statistics{"irreducible", "reciprocal_divisor", "exceptional", "disc_square"};
  std::size_t divisor_k_max = 3;
  long galois_max_m = 8;
  std::size_t workers = 1;
};

struct ExperimentRow {
  long m = 0;
  std::string statistic;
  double estimate = 0, ci_low = 0, ci_high = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string mode;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  std::size_t structural_violations = 0;
  std::vector<std::string> violation_notes;  // first few
};

inline const std::vector<std::string>& galois_labels() {
  static const std::vector<std::string> labels{"C2wrSm", "G1", "G2", "G3", "G4", "subset_C2xSm", "other", "inconclusive", "reducible"};
  return labels;
}

namespace detail {

inline bool wants(const ExperimentConfig& c, const std::string& s) {
  return std::find(c.statistics.begin(), c.statistics.end(), s) != c.statistics.end();
}

/// index i -> coefficient tuple over the supports (mixed radix, a_0 fastest)
inline std::pair<std::vector<mpz_class>, mpq_class> exhaustive_point(const MeasureSeq& mus, long m, std::size_t i) {
  std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
  mpq_class w = 1;
  for (long j = 0; j < m; ++j) {
    const auto& atoms = mus[static_cast<std::size_t>(j)].atoms;
    std::size_t r = i % atoms.size();
    i /= atoms.size();
    auto it = std::next(atoms.begin(), static_cast<long>(r));
    half[static_cast<std::size_t>(j)] = static_cast<long>(it->first);
    w *= it->second;
  }
  half[static_cast<std::size_t>(m)] = 1;
  return {half, w};
}

template <class F>
void parallel_for(std::size_t n, std::size_t workers, F&& f) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  for (long m : cfg.m_grid) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (cfg.measures.size() < static_cast<std::size_t>(m)) throw SizeMismatch("fewer measures than m");
    mpz_class space = 1;
    for (long j = 0; j < m; ++j) space *= static_cast<unsigned long>(cfg.measures[static_cast<std::size_t>(j)].atoms.size());
    bool exhaustive = cfg.mode == SamplingMode::Exhaustive ||
                      (cfg.mode == SamplingMode::Auto && space <= static_cast<unsigned long>(cfg.samples));
    if (exhaustive && space > static_cast<unsigned long>(enumeration_cap(10000000ULL))) throw CapExceeded("exhaustive space above the cap");
    const std::size_t n = exhaustive ? space.get_ui() : cfg.samples;

    AnalysisOptions opt;
    opt.galois = detail::wants(cfg, "galois") && m <= cfg.galois_max_m;
    std::vector<MeasureSampler> samplers;
    for (long j = 0; j < m; ++j) samplers.emplace_back(cfg.measures[static_cast<std::size_t>(j)]);

    std::vector<SampleOutcome> outcomes(n);
    std::vector<mpq_class> weights(exhaustive ? n : 0);
    detail::parallel_for(n, cfg.workers, [&](std::size_t i) {
      if (exhaustive) {
        auto [half, w] = detail::exhaustive_point(cfg.measures, m, i);
        weights[i] = w;
        outcomes[i] = analyze_sample(make_zrec(std::move(half)), opt);
      } else {
        auto rng = substream(cfg.seed, (static_cast<std::uint64_t>(m) << 32) | i);
        outcomes[i] = analyze_sample(sample_reciprocal(samplers, static_cast<std::size_t>(m), rng), opt);
      }
    });

    for (std::size_t i = 0; i < n; ++i)
      if (!outcomes[i].structural_ok) {
        ++rep.structural_violations;
        if (rep.violation_notes.size() < 10)
          rep.violation_notes.push_back("m=" + std::to_string(m) + " sample " + std::to_string(i) + ": " + outcomes[i].note);
      }

    auto emit = [&](const std::string& name, auto pred) {
      ExperimentRow row;
      row.m = m;
      row.statistic = name;
      row.n = n;
      row.seed = cfg.seed;
      row.mode = exhaustive ? "exhaustive" : "montecarlo";
      if (exhaustive) {
        mpq_class p = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (pred(outcomes[i])) p += weights[i];
        row.estimate = row.ci_low = row.ci_high = p.get_d();
      } else {
        std::size_t k = 0;
        for (const auto& o : outcomes) k += pred(o) ? 1 : 0;
        row.estimate = static_cast<double>(k) / static_cast<double>(n);
        auto ci = wilson_interval(static_cast<double>(k), static_cast<double>(n));
        row.ci_low = ci.low;
        row.ci_high = ci.high;
      }
      rep.rows.push_back(row);
    };
    if (detail::wants(cfg, "irreducible")) emit("irreducible", [](const SampleOutcome& o) { return o.irreducible; });
    if (detail::wants(cfg, "reciprocal_divisor"))
      for (std::size_t k = 1; k <= cfg.divisor_k_max; ++k)
        emit("recip_divisor_deg_le_" + std::to_string(2 * k), [k](const SampleOutcome& o) {
          return o.min_divisor_half_degree > 0 && o.min_divisor_half_degree <= static_cast<long>(k);
        });
    if (detail::wants(cfg, "exceptional")) emit("exceptional", [](const SampleOutcome& o) { return o.exceptional; });
    if (detail::wants(cfg, "disc_square")) emit("disc_square", [](const SampleOutcome& o) { return o.disc_square; });
    if (opt.galois)
      for (const auto& label : galois_labels())
        emit("galois_" + label, [&label](const SampleOutcome& o) { return o.galois == label; });
  }
  return rep;
}

/// FNV-1a, used for the config hash in report headers
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

/// CSV with '#' metadata lines
inline void write_csv(std::ostream& os, const ExperimentReport& rep, const std::vector<std::string>& meta) {
  for (const auto& line : meta) os << "# " << line << "\n";
  os << "m,statistic,estimate,ci_low,ci_high,n,seed,mode\n";
  for (const auto& r : rep.rows)
    os << r.m << "," << r.statistic << "," << format_double(r.estimate) << "," << format_double(r.ci_low) << ","
       << format_double(r.ci_high) << "," << r.n << "," << r.seed << "," << r.mode << "\n";
}

}  // namespace reciplab
