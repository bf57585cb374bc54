#pragma once
// Signed permutations, the subgroups G1..G5 and brute-force subgroup checks.
#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace reciplab {

/// ((eps_i)_i, sigma); perm[i-1] = sigma(i)
struct SignedPerm {
  std::size_t m = 0;
  std::vector<int> signs;
  std::vector<int> perm;

  SignedPerm() = default;
  SignedPerm(std::vector<int> eps, std::vector<int> sigma) : m(eps.size()), signs(std::move(eps)), perm(std::move(sigma)) {
    if (perm.size() != m) throw SizeMismatch("signs and perm differ in length");
    std::vector<char> seen(m, 0);
    for (int v : perm) {
      if (v < 1 || v > static_cast<int>(m) || seen[v - 1]) throw std::invalid_argument("perm is not a bijection");
      seen[v - 1] = 1;
    }
    for (int e : signs)
      if (e != 1 && e != -1) throw std::invalid_argument("signs must be +-1");
  }
  static SignedPerm identity(std::size_t m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    return SignedPerm(std::vector<int>(m, 1), p);
  }
  /// sigma given as cycles on 1..m
  static SignedPerm from_cycles(std::vector<int> eps, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> p(eps.size());
    std::iota(p.begin(), p.end(), 1);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) p.at(c[i] - 1) = c[(i + 1) % c.size()];
    return SignedPerm(std::move(eps), p);
  }

  int sign_product() const {
    int s = 1;
    for (int e : signs) s *= e;
    return s;
  }
  int perm_sign() const {
    std::vector<char> seen(m, 0);
    int s = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
        seen[j] = 1;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }
  const std::vector<int>& proj() const { return perm; }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.signs == b.signs && a.perm == b.perm; }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return std::tie(a.perm, a.signs) < std::tie(b.perm, b.signs);
  }
};

/// ((eps_i eps'_{sigma^{-1}(i)})_i, sigma sigma')
inline SignedPerm compose(const SignedPerm& g, const SignedPerm& h) {
  if (g.m != h.m) throw SizeMismatch("signed permutations of different degree");
  SignedPerm out;
  out.m = g.m;
  out.signs.resize(g.m);
  out.perm.resize(g.m);
  for (std::size_t i = 0; i < g.m; ++i) out.signs[static_cast<std::size_t>(g.perm[i] - 1)] = h.signs[i];
  for (std::size_t i = 0; i < g.m; ++i) {
    out.signs[i] *= g.signs[i];
    out.perm[i] = g.perm[static_cast<std::size_t>(h.perm[i] - 1)];
  }
  return out;
}

inline SignedPerm inverse(const SignedPerm& g) {
  SignedPerm out;
  out.m = g.m;
  out.signs.resize(g.m);
  out.perm.resize(g.m);
  for (std::size_t j = 0; j < g.m; ++j) {
    out.perm[static_cast<std::size_t>(g.perm[j] - 1)] = static_cast<int>(j + 1);
    out.signs[j] = g.signs[static_cast<std::size_t>(g.perm[j] - 1)];
  }
  return out;
}

/// sign(k) eps_{sigma(|k|)} sigma(|k|)
inline int act(const SignedPerm& g, int k) {
  int a = k < 0 ? -k : k;
  if (a < 1 || a > static_cast<int>(g.m)) throw std::out_of_range("letter out of range");
  int s = g.perm[static_cast<std::size_t>(a - 1)];
  return (k < 0 ? -1 : 1) * g.signs[static_cast<std::size_t>(s - 1)] * s;
}

/// orbits on 1..m, -1..-m (fixed points included as 1-cycles)
inline std::vector<std::vector<int>> cycle_decomposition(const SignedPerm& g) {
  std::vector<int> letters;
  for (int i = 1; i <= static_cast<int>(g.m); ++i) letters.push_back(i);
  for (int i = 1; i <= static_cast<int>(g.m); ++i) letters.push_back(-i);
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (int start : letters) {
    if (seen.count(start)) continue;
    std::vector<int> cyc;
    for (int k = start; !seen.count(k); k = act(g, k)) {
      seen.insert(k);
      cyc.push_back(k);
    }
    out.push_back(cyc);
  }
  return out;
}

inline std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::string s;
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

/// sorted cycle lengths on 2m letters
inline std::vector<int> cycle_type(const SignedPerm& g) {
  std::vector<int> t;
  for (const auto& c : cycle_decomposition(g)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}
/// sorted cycle lengths of sigma on m letters
inline std::vector<int> proj_cycle_type(const SignedPerm& g) {
  std::vector<char> seen(g.m, 0);
  std::vector<int> t;
  for (std::size_t i = 0; i < g.m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g.perm[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

struct SubgroupFlags {
  bool inG1 = false, inG2 = false, inG3 = false, inG4 = false, inG5 = false;
};

inline SubgroupFlags subgroup_flags(const SignedPerm& g) {
  int e = g.sign_product(), s = g.perm_sign();
  SubgroupFlags f;
  f.inG1 = e == 1;
  f.inG2 = s * e == 1;
  f.inG3 = s == 1;
  f.inG4 = s == 1 && e == 1;
  f.inG5 = std::all_of(g.signs.begin(), g.signs.end(), [&](int x) { return x == g.signs.front(); });
  return f;
}

/// C2 wr S_m with elements indexed by signs bitmask + 2^m * rank(sigma)
class Hyperoctahedral {
 public:
  explicit Hyperoctahedral(std::size_t m) : m_(m) {
    if (m > 8) throw CapExceeded("hyperoctahedral enumeration limited to m <= 8");
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    order_ = perms_.size() << m;
  }
  std::size_t m() const { return m_; }
  std::size_t order() const { return order_; }

  std::size_t index(const SignedPerm& g) const {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (g.signs[i] < 0) mask |= std::size_t(1) << i;
    return mask + (rank(g.perm) << m_);
  }
  SignedPerm element(std::size_t idx) const {
    std::vector<int> eps(m_);
    for (std::size_t i = 0; i < m_; ++i) eps[i] = (idx >> i & 1) ? -1 : 1;
    SignedPerm g;
    g.m = m_;
    g.signs = std::move(eps);
    g.perm = perms_[idx >> m_];
    return g;
  }
  std::size_t multiply(std::size_t a, std::size_t b) const { return index(compose(element(a), element(b))); }

  /// subgroup generated by gens, as a membership vector
  std::vector<char> closure(const std::vector<std::size_t>& gens) const {
    std::vector<char> in(order_, 0);
    std::vector<SignedPerm> gen_elems;
    for (auto g : gens) gen_elems.push_back(element(g));
    std::size_t id = index(SignedPerm::identity(m_));
    std::vector<std::size_t> queue{id};
    in[id] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      SignedPerm x = element(queue[qi]);
      for (const auto& g : gen_elems) {
        std::size_t y = index(compose(x, g));
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return in;
  }

  std::size_t rank(const std::vector<int>& p) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < m_; ++j)
        if (p[j] < p[i]) ++smaller;
      r = r * (m_ - i) + smaller;
    }
    return r;
  }

 private:
  std::size_t m_;
  std::size_t order_ = 0;
  std::vector<std::vector<int>> perms_;
};

enum class ActingGroup { Alternating, Symmetric };

namespace detail {

/// permutations of 0..m-1 generating K
inline std::vector<std::vector<int>> acting_generators(std::size_t m, ActingGroup k) {
  std::vector<std::vector<int>> gens;
  auto ident = [&] {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  if (m < 2) return gens;
  if (k == ActingGroup::Symmetric) {
    auto t = ident();
    std::swap(t[0], t[1]);
    gens.push_back(t);
    auto c = ident();
    for (std::size_t i = 0; i < m; ++i) c[i] = static_cast<int>((i + 1) % m);
    gens.push_back(c);
  } else {
    for (std::size_t i = 2; i < m; ++i) {
      auto c = ident();
      c[0] = 1;
      c[1] = static_cast<int>(i);
      c[i] = 0;
      gens.push_back(c);
    }
  }
  return gens;
}

inline std::uint32_t permute_mask(std::uint32_t v, const std::vector<int>& p) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (v >> i & 1) out |= 1u << p[i];
  return out;
}

/// reduced echelon basis over F_2, sorted descending
inline std::vector<std::uint32_t> f2_basis(std::vector<std::uint32_t> vs) {
  std::vector<std::uint32_t> basis;
  for (auto v : vs) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (!v) continue;
    for (auto& b : basis) b = std::min(b, b ^ v);
    basis.push_back(v);
    std::sort(basis.rbegin(), basis.rend());
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j) basis[j] = std::min(basis[j], basis[j] ^ basis[i]);
  std::sort(basis.rbegin(), basis.rend());
  return basis;
}

inline std::vector<std::uint32_t> invariant_span(std::vector<std::uint32_t> seed, const std::vector<std::vector<int>>& gens) {
  auto basis = f2_basis(std::move(seed));
  for (;;) {
    auto grown = basis;
    for (auto b : basis)
      for (const auto& g : gens) grown.push_back(permute_mask(b, g));
    grown = f2_basis(grown);
    if (grown == basis) return basis;
    basis = grown;
  }
}

}  // namespace detail

/// K-stable subgroups of {+-1}^m as F_2-bases (bit i set = eps_{i+1} = -1)
inline std::vector<std::vector<std::uint32_t>> invariant_subgroups(std::size_t m, ActingGroup k) {
  if (m > 12) throw CapExceeded("invariant subgroup enumeration limited to m <= 12");
  auto gens = detail::acting_generators(m, k);
  std::set<std::vector<std::uint32_t>> found{{}};
  std::set<std::vector<std::uint32_t>> cyclic;
  for (std::uint32_t v = 1; v < (1u << m); ++v) cyclic.insert(detail::invariant_span({v}, gens));
  std::vector<std::vector<std::uint32_t>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        auto all = s;
        all.insert(all.end(), c.begin(), c.end());
        auto sum = detail::f2_basis(all);
        if (found.insert(sum).second) next.push_back(sum);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

enum class SampleMode { Full, G1, G2, G3, G4, G5, Twisted };

inline bool in_mode(const SignedPerm& g, SampleMode mode) {
  auto f = subgroup_flags(g);
  switch (mode) {
    case SampleMode::Full: return true;
    case SampleMode::G1: return f.inG1;
    case SampleMode::G2: return f.inG2;
    case SampleMode::G3: return f.inG3;
    case SampleMode::G4: return f.inG4;
    case SampleMode::G5: return f.inG5;
    case SampleMode::Twisted:
      return std::all_of(g.signs.begin(), g.signs.end(), [&](int e) { return e == g.perm_sign(); });
  }
  return false;
}

struct ClassificationReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // projection never reached A_m or S_m
  std::map<std::string, std::size_t> labels;
};

/// H inside c G5 c^{-1} for some sign vector c (these give every conjugate of G5)
inline bool in_conjugate_of_G5(const Hyperoctahedral& W, const std::vector<char>& in) {
  const std::size_t m = W.m();
  std::vector<SignedPerm> elems;
  for (std::size_t i = 0; i < W.order(); ++i)
    if (in[i]) elems.push_back(W.element(i));
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    SignedPerm c = W.element(mask);
    SignedPerm ci = inverse(c);
    bool inside = std::all_of(elems.begin(), elems.end(),
                              [&](const SignedPerm& h) { return subgroup_flags(compose(compose(ci, h), c)).inG5; });
    if (inside) return true;
  }
  return false;
}

/// label of a subgroup of C2 wr S_m given as membership vector
inline std::string subgroup_label(const Hyperoctahedral& W, const std::vector<char>& in) {
  std::size_t size = 0;
  bool g[6] = {true, true, true, true, true, true};
  for (std::size_t i = 0; i < W.order(); ++i) {
    if (!in[i]) continue;
    ++size;
    auto f = subgroup_flags(W.element(i));
    g[1] = g[1] && f.inG1;
    g[2] = g[2] && f.inG2;
    g[3] = g[3] && f.inG3;
    g[4] = g[4] && f.inG4;
    g[5] = g[5] && f.inG5;
  }
  if (size == W.order()) return "C2wrSm";
  if (size * 2 == W.order()) {
    for (int i = 1; i <= 3; ++i)
      if (g[i]) return "G" + std::to_string(i);
  }
  if (size * 4 == W.order() && g[4]) return "G4";
  if (g[5] || in_conjugate_of_G5(W, in)) return "subset_C2xSm";
  return "other(" + std::to_string(size) + ")";
}

/// random subgroups projecting onto A_m or S_m checked against the large/small trichotomy
template <class Rng>
ClassificationReport random_subgroup_classification(std::size_t m, std::size_t trials, Rng& rng) {
  Hyperoctahedral W(m);
  ClassificationReport rep;
  std::size_t mfact = W.order() >> m;
  std::size_t index_cut = std::size_t(1) << (m - 1);
  const SampleMode modes[] = {SampleMode::Full, SampleMode::G1, SampleMode::G2, SampleMode::G3,
                              SampleMode::G4,   SampleMode::G5, SampleMode::Twisted};
  std::uniform_int_distribution<std::size_t> pick_mode(0, 6), pick_elem(0, W.order() - 1);
  Hyperoctahedral Sm(m);
  for (std::size_t t = 0; t < trials; ++t) {
    ++rep.trials;
    SampleMode mode = modes[pick_mode(rng)];
    std::vector<std::size_t> gens, proj_gens;
    std::size_t proj_size = 0;
    for (int tries = 0; tries < 64 && proj_size * 2 < mfact; ++tries) {
      std::size_t idx;
      do idx = pick_elem(rng);
      while (!in_mode(W.element(idx), mode));
      gens.push_back(idx);
      proj_gens.push_back(W.index(SignedPerm(std::vector<int>(m, 1), W.element(idx).perm)));
      auto pin = Sm.closure(proj_gens);
      proj_size = static_cast<std::size_t>(std::count(pin.begin(), pin.end(), 1));
    }
    if (proj_size * 2 < mfact) {
      ++rep.skipped;
      continue;
    }
    bool symmetric = proj_size == mfact;
    auto in = W.closure(gens);
    std::size_t size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    std::size_t index = W.order() / size;
    std::string label = subgroup_label(W, in);
    ++rep.labels[label];
    bool ok;
    if (index < index_cut)
      ok = symmetric ? (label == "C2wrSm" || label == "G1" || label == "G2") : (label == "G3" || label == "G4");
    else
      ok = label == "subset_C2xSm";
    if (!ok) ++rep.violations;
  }
  return rep;
}

}  // namespace reciplab
