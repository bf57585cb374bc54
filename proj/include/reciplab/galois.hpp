#pragma once
// Galois group facts for reciprocal polynomials: discriminant squares, Frobenius
// witnesses, cycle-type certificates for the trace polynomial, small-m lattice search.
#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fppoly.hpp"
#include "hyperoct.hpp"
#include "intpoly.hpp"
#include "reciprocal.hpp"
#include "zfactor.hpp"

namespace reciplab {

struct FrobeniusWitness {
  std::uint64_t p = 0;
  FpPoly I;
  std::size_t d = 0;  // deg I = 4d
};

/// first prime (A_p squarefree) with an irreducible reciprocal factor of degree 4d dividing A_p once
inline std::optional<FrobeniusWitness> frobenius_witness(const ZPoly& A, const std::vector<std::uint64_t>& primes) {
  for (auto p : primes) {
    if ((A.lc() % static_cast<unsigned long>(p)) == 0) continue;
    FpPoly ap(p, A);
    if (!fp_is_squarefree(ap)) continue;
    for (const auto& [f, e] : fp_factor(ap).factors)
      if (e == 1 && f.degree() % 4 == 0 && is_reciprocal(f))
        return FrobeniusWitness{p, f, static_cast<std::size_t>(f.degree() / 4)};
  }
  return std::nullopt;
}

/// joint Frobenius pattern: cycle type on the 2m roots and on the m blocks
struct FrobeniusPattern {
  std::uint64_t p = 0;
  std::vector<int> roots;
  std::vector<int> blocks;
};

/// patterns at the first `count` primes where both A and A_R stay squarefree of full degree
inline std::vector<FrobeniusPattern> frobenius_patterns(const ZPoly& A, const ZPoly& AR, std::size_t count) {
  std::vector<FrobeniusPattern> out;
  for (std::uint64_t q = 2; out.size() < count && q < 100000; ++q) {
    if (!is_prime_u64(q)) continue;
    FpPoly ap(q, A), rp(q, AR);
    if (ap.degree() != A.degree() || rp.degree() != AR.degree()) continue;
    if (!fp_is_squarefree(ap) || !fp_is_squarefree(rp)) continue;
    out.push_back({q, fp_factor_degrees(ap), fp_factor_degrees(rp)});
  }
  return out;
}

namespace detail {

inline bool is_prime_small(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// a power of an element with this cycle type is a single cycle of length ell (other lengths coprime to ell)
inline bool powers_to_cycle(const std::vector<int>& t, int ell) {
  int hits = 0;
  for (int c : t) {
    if (c == ell) ++hits;
    else if (c % ell == 0) return false;
  }
  return hits == 1;
}

}  // namespace detail

/// heuristic proj(G) certificate from Frobenius cycle types of the trace polynomial: "S_m", "A_m" or "none"
inline std::string proj_certificate(const std::vector<FrobeniusPattern>& pats, std::size_t m, bool trace_disc_square,
                                    bool trace_irreducible) {
  if (!trace_irreducible) return "none";
  const int mm = static_cast<int>(m);
  if (m <= 2) return trace_disc_square ? "A_m" : "S_m";
  bool primitive = false, giant = false;
  for (const auto& pat : pats) {
    const auto& t = pat.blocks;
    if (t.size() == 2 && (t[0] == 1 || t[1] == 1) && t.back() == mm - 1) primitive = true;
    for (int ell : t)
      if (detail::is_prime_small(ell) && 2 * ell > mm && detail::powers_to_cycle(t, ell)) primitive = true;
    if (detail::powers_to_cycle(t, 2) || detail::powers_to_cycle(t, 3)) giant = true;
    for (int ell : t)
      if (detail::is_prime_small(ell) && ell <= mm - 3 && detail::powers_to_cycle(t, ell)) giant = true;
  }
  if (m == 3) primitive = true;
  if (!(primitive && giant)) return "none";
  return trace_disc_square ? "A_m" : "S_m";
}

/// every subgroup of C2 wr S_m for m <= 4, as membership vectors
inline const std::vector<std::vector<char>>& all_subgroups(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<char>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m > 4) throw CapExceeded("subgroup lattice only for m <= 4");
  Hyperoctahedral W(m);
  const std::size_t n = W.order();
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<std::uint16_t>(W.multiply(a, b));
  std::size_t id = W.index(SignedPerm::identity(m));
  auto close = [&](const std::vector<std::size_t>& gens) {
    std::vector<char> in(n, 0);
    std::vector<std::size_t> q{id};
    in[id] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto g : gens) {
        std::size_t y = table[q[i]][g];
        if (!in[y]) {
          in[y] = 1;
          q.push_back(y);
        }
      }
    return in;
  };
  std::set<std::vector<char>> found;
  std::vector<std::pair<std::vector<char>, std::vector<std::size_t>>> frontier;
  std::vector<std::size_t> cyclic_gens;
  {
    std::set<std::vector<char>> cyc;
    for (std::size_t g = 0; g < n; ++g)
      if (cyc.insert(close({g})).second) cyclic_gens.push_back(g);
  }
  auto triv = close({});
  found.insert(triv);
  frontier.push_back({triv, {}});
  while (!frontier.empty()) {
    decltype(frontier) next;
    for (const auto& [h, gens] : frontier)
      for (auto g : cyclic_gens) {
        if (h[g]) continue;
        auto ng = gens;
        ng.push_back(g);
        auto j = close(ng);
        if (found.insert(j).second) next.push_back({j, ng});
      }
    frontier = std::move(next);
  }
  return cache[m] = std::vector<std::vector<char>>(found.begin(), found.end());
}

struct GaloisReport {
  std::size_t m = 0;
  bool irreducible = false;
  bool disc_square = false;
  bool g2_square = false;
  bool g3_square = false;
  bool c2sm_excluded = false;
  std::optional<FrobeniusWitness> witness;
  std::string proj_certificate = "none";
  std::string verdict = "inconclusive";
  std::string method;  // "trichotomy" for m >= 5, "lattice" below

  /// literal predicates of the verdict group
  bool consistent() const {
    if (!irreducible) return verdict == "reducible";
    if (verdict == "inconclusive") return true;
    if (verdict == "subset_C2xSm") return !c2sm_excluded;
    bool in1 = verdict == "G1" || verdict == "G4";
    bool in2 = verdict == "G2" || verdict == "G4";
    bool in3 = verdict == "G3" || verdict == "G4" || m < 2;
    if (verdict != "C2wrSm" && !in1 && !in2 && !in3) return false;
    return in1 == disc_square && in2 == g2_square && in3 == g3_square;
  }
};

/// proved facts plus a heuristic verdict
inline GaloisReport classify_galois(const ZPoly& A, std::size_t frobenius_primes = 30) {
  if (!is_reciprocal(A) || A.degree() < 2 || A.degree() % 2 != 0 || A.lc() != 1)
    throw ShapeViolation("classify_galois needs a monic reciprocal polynomial");
  if (gcd(A, derivative(A)).degree() > 0) throw NotSquarefree("A is not squarefree");
  GaloisReport r;
  r.m = static_cast<std::size_t>(A.degree() / 2);
  r.irreducible = is_irreducible_over_Z(A);
  if (!r.irreducible) {
    r.verdict = "reducible";
    return r;
  }
  ZPoly AR = to_trace(A);
  mpz_class dR = discriminant(AR);
  mpz_class sign_part = evaluate(A, 1) * evaluate(A, -1);
  if (r.m % 2) sign_part = -sign_part;
  r.disc_square = is_nonzero_square(sign_part);  // Delta(A) = sign_part * dR^2
  r.g3_square = is_nonzero_square(dR);
  r.g2_square = is_nonzero_square(sign_part * dR);

  std::vector<std::uint64_t> good;
  for (std::uint64_t q = 2; good.size() < frobenius_primes; ++q)
    if (is_prime_u64(q) && (sign_part * dR) % static_cast<unsigned long>(q) != 0) good.push_back(q);
  r.witness = frobenius_witness(A, good);
  r.c2sm_excluded = r.witness.has_value() || (r.m % 2 == 0 && !r.disc_square);
  auto pats = frobenius_patterns(A, AR, frobenius_primes);
  r.proj_certificate = proj_certificate(pats, r.m, r.g3_square, true);

  if (r.m >= 5) {
    r.method = "trichotomy";
    if (r.proj_certificate == "none" || !r.c2sm_excluded) return r;
    int squares = int(r.disc_square) + int(r.g2_square) + int(r.g3_square);
    if (squares == 0) r.verdict = "C2wrSm";
    else if (squares >= 2) r.verdict = "G4";
    else if (r.disc_square) r.verdict = "G1";
    else if (r.g2_square) r.verdict = "G2";
    else r.verdict = "G3";
    return r;
  }

  r.method = "lattice";
  Hyperoctahedral W(r.m);
  const int two_m = static_cast<int>(2 * r.m);
  std::set<std::string> labels;
  for (const auto& h : all_subgroups(r.m)) {
    std::vector<SignedPerm> elems;
    for (std::size_t i = 0; i < W.order(); ++i)
      if (h[i]) elems.push_back(W.element(i));
    std::set<int> orbit{1};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& g : elems)
        for (int k : std::set<int>(orbit))
          if (orbit.insert(act(g, k)).second) grew = true;
    }
    if (static_cast<int>(orbit.size()) != two_m) continue;
    bool in1 = true, in2 = true, in3 = true;
    std::set<std::pair<std::vector<int>, std::vector<int>>> types;
    for (const auto& g : elems) {
      auto f = subgroup_flags(g);
      in1 = in1 && f.inG1;
      in2 = in2 && f.inG2;
      in3 = in3 && f.inG3;
      types.insert({cycle_type(g), proj_cycle_type(g)});
    }
    if (in1 != r.disc_square || in2 != r.g2_square || in3 != r.g3_square) continue;
    bool seen_all = true;
    for (const auto& pat : pats) seen_all = seen_all && types.count({pat.roots, pat.blocks});
    if (!seen_all) continue;
    if (r.c2sm_excluded && in_conjugate_of_G5(W, h)) continue;
    labels.insert(subgroup_label(W, h));
  }
  if (labels.size() == 1) r.verdict = *labels.begin();
  return r;
}

}  // namespace reciplab
