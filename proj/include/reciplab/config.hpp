#pragma once
// JSON forms of measures, experiment configs and Galois reports.
#include <gmpxx.h>

#include <json.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "distributions.hpp"
#include "experiment.hpp"
#include "galois.hpp"

namespace reciplab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

namespace detail {

inline mpq_class parse_weight(const Json& w) {
  try {
    if (w.is_string()) {
      mpq_class q(w.get<std::string>());
      q.canonicalize();
      return q;
    }
    if (w.is_number_integer()) return mpq_class(w.get<long>());
  } catch (const std::invalid_argument&) {
  }
  throw ConfigError("weight must be an integer or a string \"n/d\": " + w.dump());
}

inline long long get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ConfigError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<long long>();
}

inline void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown field '" + k + "' in " + where);
}

}  // namespace detail

/// {"type":"uniform","lo","hi"} or {"type":"atoms","weights":[[a,"n/d"],...]}
inline Measure measure_from_json(const Json& j, long long bound = 1000000000LL) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) throw ConfigError("measure needs a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "uniform") {
      detail::reject_unknown(j, {"type", "lo", "hi"}, "uniform measure");
      long long lo = detail::get_int(j, "lo"), hi = detail::get_int(j, "hi");
      if (hi < lo) throw ConfigError("uniform measure with hi < lo");
      if (hi - lo >= 10000000) throw ConfigError("uniform support too large");
      Measure mu = Measure::uniform(lo, hi);
      return Measure(mu.atoms, bound);
    }
    if (type == "atoms") {
      detail::reject_unknown(j, {"type", "weights"}, "atoms measure");
      if (!j.contains("weights") || !j.at("weights").is_array()) throw ConfigError("atoms measure needs a 'weights' array");
      std::map<long long, mpq_class> atoms;
      for (const auto& pair : j.at("weights")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
          throw ConfigError("each weight must be [integer, \"n/d\"]");
        long long a = pair[0].get<long long>();
        if (atoms.count(a)) throw ConfigError("duplicate atom " + std::to_string(a));
        atoms[a] = detail::parse_weight(pair[1]);
      }
      return Measure(std::move(atoms), bound);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown measure type '" + type + "'");
}

/// broadcast a single measure to length m, or read {"type":"per_index","list":[...]}
inline MeasureSeq measure_seq_from_json(const Json& j, std::size_t m, long long bound = 1000000000LL) {
  if (j.is_object() && j.value("type", "") == "per_index") {
    detail::reject_unknown(j, {"type", "list"}, "per_index measure");
    if (!j.contains("list") || !j.at("list").is_array()) throw ConfigError("per_index measure needs a 'list'");
    MeasureSeq seq;
    for (const auto& e : j.at("list")) seq.per.push_back(measure_from_json(e, bound));
    if (seq.size() < m) throw ConfigError("per_index list shorter than the largest m");
    return seq;
  }
  return MeasureSeq::broadcast(measure_from_json(j, bound), m);
}

inline Json measure_to_json(const Measure& mu) {
  Json w = Json::array();
  for (const auto& [a, q] : mu.atoms) w.push_back(Json::array({a, q.get_str()}));
  return Json{{"type", "atoms"}, {"weights", w}};
}

struct LoadedConfig {
  ExperimentConfig experiment;
  std::optional<std::vector<std::uint64_t>> primes;  // Fourier condition check, if given
  std::string format = "csv";
  Json raw;
};

inline SamplingMode sampling_mode_from_string(const std::string& s) {
  if (s == "auto") return SamplingMode::Auto;
  if (s == "exhaustive") return SamplingMode::Exhaustive;
  if (s == "montecarlo") return SamplingMode::MonteCarlo;
  throw ConfigError("mode must be auto, exhaustive or montecarlo");
}

inline LoadedConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  detail::reject_unknown(j,
                         {"measure", "m", "samples", "seed", "mode", "statistics", "divisor_k_max", "galois_max_m",
                          "primes", "format", "support_bound", "workers"},
                         "config");
  LoadedConfig out;
  out.raw = j;
  auto& c = out.experiment;
  if (!j.contains("m")) throw ConfigError("missing 'm'");
  const Json& mj = j.at("m");
  if (mj.is_number_integer()) {
    c.m_grid = {mj.get<long>()};
  } else if (mj.is_array() && !mj.empty()) {
    for (const auto& x : mj) {
      if (!x.is_number_integer()) throw ConfigError("'m' entries must be integers");
      c.m_grid.push_back(x.get<long>());
    }
  } else {
    throw ConfigError("'m' must be an integer or a non-empty array");
  }
  long max_m = 0;
  for (long m : c.m_grid) {
    if (m < 1 || m > 100000) throw ConfigError("m out of range: " + std::to_string(m));
    max_m = std::max(max_m, m);
  }
  long long bound = j.contains("support_bound") ? detail::get_int(j, "support_bound") : 1000000000LL;
  if (!j.contains("measure")) throw ConfigError("missing 'measure'");
  c.measures = measure_seq_from_json(j.at("measure"), static_cast<std::size_t>(max_m), bound);

  if (j.contains("samples")) {
    long long s = detail::get_int(j, "samples");
    if (s < 1) throw ConfigError("samples must be positive");
    c.samples = static_cast<std::size_t>(s);
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) throw ConfigError("seed must be an integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw ConfigError("mode must be a string");
    c.mode = sampling_mode_from_string(j.at("mode").get<std::string>());
  }
  if (j.contains("statistics")) {
    if (!j.at("statistics").is_array()) throw ConfigError("statistics must be an array");
    static const std::set<std::string> known{"irreducible", "reciprocal_divisor", "exceptional", "disc_square", "galois"};
    c.statistics.clear();
    for (const auto& s : j.at("statistics")) {
      if (!s.is_string() || !known.count(s.get<std::string>())) throw ConfigError("unknown statistic " + s.dump());
      c.statistics.push_back(s.get<std::string>());
    }
  }
  if (j.contains("divisor_k_max")) {
    long long k = detail::get_int(j, "divisor_k_max");
    if (k < 1) throw ConfigError("divisor_k_max must be positive");
    c.divisor_k_max = static_cast<std::size_t>(k);
  }
  if (j.contains("galois_max_m")) c.galois_max_m = static_cast<long>(detail::get_int(j, "galois_max_m"));
  if (j.contains("workers")) {
    long long w = detail::get_int(j, "workers");
    if (w < 1) throw ConfigError("workers must be positive");
    c.workers = static_cast<std::size_t>(w);
  }
  if (j.contains("primes")) {
    if (!j.at("primes").is_array()) throw ConfigError("primes must be an array");
    std::vector<std::uint64_t> ps;
    for (const auto& x : j.at("primes")) {
      if (!x.is_number_integer() || x.get<long long>() < 2 || !is_prime_u64(x.get<std::uint64_t>()))
        throw ConfigError("primes must be primes");
      ps.push_back(x.get<std::uint64_t>());
    }
    out.primes = ps;
  }
  if (j.contains("format")) {
    if (!j.at("format").is_string()) throw ConfigError("format must be a string");
    out.format = j.at("format").get<std::string>();
    if (out.format != "csv" && out.format != "jsonlines") throw ConfigError("format must be csv or jsonlines");
  }
  return out;
}

inline Json galois_report_to_json(const GaloisReport& r) {
  Json j{{"m", r.m},
         {"irreducible", r.irreducible},
         {"disc_square", r.disc_square},
         {"g2_square", r.g2_square},
         {"g3_square", r.g3_square},
         {"c2sm_excluded", r.c2sm_excluded},
         {"proj_certificate", r.proj_certificate},
         {"verdict", r.verdict},
         {"method", r.method}};
  if (r.witness) j["witness"] = {{"p", r.witness->p}, {"I", r.witness->I.to_string()}, {"d", r.witness->d}};
  return j;
}

inline Json row_to_json(const ExperimentRow& r) {
  return Json{{"m", r.m},       {"statistic", r.statistic}, {"estimate", r.estimate}, {"ci_low", r.ci_low},
              {"ci_high", r.ci_high}, {"n", r.n},         {"seed", r.seed},         {"mode", r.mode}};
}

/// one JSON object per line; the first line carries the metadata
inline void write_jsonlines(std::ostream& os, const ExperimentReport& rep, const Json& meta) {
  os << Json{{"meta", meta}}.dump() << "\n";
  for (const auto& r : rep.rows) os << row_to_json(r).dump() << "\n";
}

}  // namespace reciplab
