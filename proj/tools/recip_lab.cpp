// recip-lab: experiments, verification suites, counting and Galois classification.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reciplab/config.hpp"
#include "reciplab/reciplab.hpp"

#ifndef RECIPLAB_GIT_DESCRIBE
#define RECIPLAB_GIT_DESCRIBE "unknown"
#endif

namespace {

using namespace reciplab;

enum Exit { Ok = 0, Violation = 1, Usage = 2, IoError = 3, Cap = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t workers = 0;
  std::string out;
  std::string format;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoFailure("cannot open " + path + " for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (file_.fail()) throw IoFailure("write failed");
    }
  }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<mpz_class> parse_coefficients(std::string text) {
  std::vector<mpz_class> out;
  for (char& c : text)
    if (c == '\n' || c == ';' || c == ' ' || c == '\t') c = ',';
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    mpz_class v;
    if (v.set_str(tok, 10) != 0) throw UsageError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no coefficients given");
  return out;
}

int cmd_verify(const std::string& suite, Output& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    names = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  bool all_ok = true;
  for (const auto& n : names) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(n);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_ok = all_ok && r.ok();
    auto& os = out.os();
    os << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures << " failures ("
       << format_double(secs) << " s)\n";
    for (const auto& line : r.info) os << "     " << line << "\n";
    for (const auto& f : r.failure_notes) os << "     failure: " << f << "\n";
  }
  return all_ok ? Ok : Violation;
}

int cmd_experiment(const std::string& path, const Globals& g, Output& out) {
  Json raw;
  try {
    raw = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  LoadedConfig cfg = config_from_json(raw);
  if (g.seed_set) cfg.experiment.seed = g.seed;
  if (g.workers) cfg.experiment.workers = g.workers;
  if (!g.format.empty()) cfg.format = g.format;

  Json effective = raw;
  effective["seed"] = cfg.experiment.seed;
  const std::string dumped = effective.dump();
  std::ostringstream hash;
  hash << std::hex << fnv1a64(dumped);

  std::vector<std::string> meta{"recip-lab " RECIPLAB_GIT_DESCRIBE, "config_hash " + hash.str(),
                                "seed " + std::to_string(cfg.experiment.seed), "config " + dumped};
  Json jmeta{{"git", RECIPLAB_GIT_DESCRIBE}, {"config_hash", hash.str()}, {"seed", cfg.experiment.seed}, {"config", effective}};
  if (cfg.primes) {
    Json fc = Json::array();
    for (long m : cfg.experiment.m_grid) {
      auto res = check_fourier_condition(cfg.experiment.measures, *cfg.primes, static_cast<double>(m));
      meta.push_back("fourier_condition m=" + std::to_string(m) + " ok=" + (res.ok ? "true" : "false") +
                     " worst=" + format_double(res.worst) + " bound=" + format_double(res.bound) +
                     " j=" + std::to_string(res.j) + " Q=" + std::to_string(res.Q) + " l=" + std::to_string(res.ell));
      fc.push_back({{"m", m}, {"ok", res.ok}, {"worst", res.worst}, {"bound", res.bound}, {"j", res.j}, {"Q", res.Q}, {"l", res.ell}});
    }
    jmeta["fourier_condition"] = fc;
  }

  ExperimentReport rep = run_experiment(cfg.experiment);
  meta.push_back("structural_violations " + std::to_string(rep.structural_violations));
  jmeta["structural_violations"] = rep.structural_violations;
  if (cfg.format == "jsonlines")
    write_jsonlines(out.os(), rep, jmeta);
  else
    write_csv(out.os(), rep, meta);
  for (const auto& n : rep.violation_notes) std::cerr << "structural violation: " << n << "\n";
  return rep.structural_violations ? Violation : Ok;
}

int cmd_classify(const std::string& input, bool half, const Globals& g, Output& out) {
  std::string text = input;
  if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
  auto coeffs = parse_coefficients(text);
  ZPoly A;
  if (half) {
    if (coeffs.back() != 1) throw UsageError("half coefficients a_0..a_m need a_m = 1");
    A = make_zrec(coeffs).expand();
  } else {
    // highest degree first, as written
    std::reverse(coeffs.begin(), coeffs.end());
    A = ZPoly(coeffs);
    if (A.degree() < 2 || A.degree() % 2 || A.lc() != 1 || !is_reciprocal(A))
      throw UsageError("input is not a monic reciprocal polynomial of even degree; give full coefficients "
                       "(highest first, e.g. 1,1,1,1,1) or use --half with a_0..a_m");
  }
  GaloisReport r;
  try {
    r = classify_galois(A);
  } catch (const NotSquarefree&) {
    throw UsageError("polynomial is not squarefree");
  }
  auto& os = out.os();
  Json j = galois_report_to_json(r);
  j["polynomial"] = A.to_string();
  if (g.format == "jsonlines") {
    os << j.dump() << "\n";
  } else {
    for (const char* key : {"polynomial", "m", "irreducible", "disc_square", "g2_square", "g3_square", "c2sm_excluded",
                            "proj_certificate", "verdict", "method"})
      os << key << ": " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << "\n";
    if (r.witness) os << "witness: p=" << r.witness->p << " I=" << r.witness->I.to_string() << " d=" << r.witness->d << "\n";
  }
  return r.consistent() ? Ok : Violation;
}

int cmd_delta(const std::string& measure, long m, const std::vector<std::uint64_t>& primes, std::size_t kmax,
              bool trace, Output& out) {
  Json mj;
  try {
    mj = Json::parse(measure);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("measure is not valid JSON: ") + e.what());
  }
  if (m < 1) throw UsageError("m must be positive");
  for (auto p : primes)
    if (!is_prime_u64(p)) throw UsageError(std::to_string(p) + " is not prime");
  MeasureSeq mus = measure_seq_from_json(mj, static_cast<std::size_t>(m));
  mpq_class d = delta_R(mus, m, primes, kmax);
  auto& os = out.os();
  os << "delta_R " << d.get_str() << "\n";
  if (trace) {
    if (primes.size() != 1) throw UsageError("--trace needs exactly one prime");
    os << "delta_trace " << delta_trace(mus, m, primes[0], kmax).get_str() << "\n";
  }
  return Ok;
}

int cmd_count(std::uint64_t p, unsigned long m, bool brute, Output& out) {
  if (!is_prime_u64(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (m < 1) throw UsageError("m must be positive");
  mpz_class s = count_irreducible_reciprocal(p, m);
  auto& os = out.os();
  os << s.get_str() << "\n";
  if (brute) {
    mpz_class b = 0;
    for_each_reciprocal_mod_p(p, m, [&](const FpPoly& a) {
      if (fp_is_irreducible(a)) ++b;
    }, enumeration_cap(10000000ULL));
    os << "brute " << b.get_str() << "\n";
    return b == s ? Ok : Violation;
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recip-lab: random reciprocal polynomials"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed override");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output path");
  app.add_option("--format", g.format, "csv or jsonlines")->check(CLI::IsMember({"csv", "jsonlines"}));
  app.set_version_flag("--version", std::string("recip-lab ") + RECIPLAB_GIT_DESCRIBE);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", suite, "chebyshev|trace|euclid|residues|crossing|fourier|discriminant|hyperoct|counts|all")->required();

  std::string config;
  auto* experiment = app.add_subcommand("experiment", "run a sampling experiment from a JSON config");
  experiment->add_option("config", config, "config path")->required();

  std::string poly;
  bool half = false;
  auto* classify = app.add_subcommand("classify", "Galois report for a reciprocal polynomial");
  classify->add_option("polynomial", poly, "comma separated coefficients, or @file")->required();
  classify->add_flag("--half", half, "coefficients are a_0..a_m");

  std::string measure;
  long m = 0;
  std::vector<std::uint64_t> primes;
  std::size_t kmax = 1;
  bool trace = false;
  auto* delta = app.add_subcommand("delta", "exact equidistribution defect");
  delta->add_option("--measure", measure, "measure JSON")->required();
  delta->add_option("-m", m, "half degree")->required();
  delta->add_option("--primes", primes, "primes (at most 2)")->required()->delimiter(',');
  delta->add_option("--kmax", kmax, "largest half degree of D");
  delta->add_flag("--trace", trace, "also print the trace-side defect");

  std::uint64_t p = 0;
  unsigned long cm = 0;
  bool brute = false;
  auto* count = app.add_subcommand("count", "number of monic irreducible reciprocal polynomials of degree 2m mod p");
  count->add_option("p", p)->required();
  count->add_option("m", cm)->required();
  count->add_flag("--brute", brute, "compare with enumeration");

  // allow global flags after the subcommand too
  for (auto* sub : {verify, experiment, classify, delta, count}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }
  g.seed_set = app.count("--seed") > 0;

  try {
    Output out(g.out);
    int code = Ok;
    if (*verify) code = cmd_verify(suite, out);
    else if (*experiment) code = cmd_experiment(config, g, out);
    else if (*classify) code = cmd_classify(poly, half, g, out);
    else if (*delta) code = cmd_delta(measure, m, primes, kmax, trace, out);
    else if (*count) code = cmd_count(p, cm, brute, out);
    out.close();
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return Usage;
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return IoError;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return Cap;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return Cap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::logic_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  }
}
