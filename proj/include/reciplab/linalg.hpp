#pragma once
// Gaussian elimination over F_p on dense row vectors.
#include <cstdint>
#include <vector>

#include "fppoly.hpp"

namespace reciplab {

using FpVec = std::vector<std::uint64_t>;

/// reduced row echelon form in place; returns pivot columns
inline std::vector<std::size_t> rref(std::vector<FpVec>& rows, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = mod_inv(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(std::vector<FpVec> rows, std::uint64_t p) { return rref(rows, p).size(); }

/// basis of {x : M x = 0} for a matrix with the given rows and ncols columns
inline std::vector<FpVec> kernel(std::vector<FpVec> rows, std::size_t ncols, std::uint64_t p) {
  auto piv = rref(rows, p);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<FpVec> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    FpVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - rows[i][f]) % p;
    out.push_back(v);
  }
  return out;
}

/// reduce v modulo the row space of an rref basis (canonical coset representative)
inline FpVec reduce_by(const std::vector<FpVec>& basis, const std::vector<std::size_t>& pivots, FpVec v, std::uint64_t p) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint64_t f = v[pivots[i]];
    if (!f) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * basis[i][j]) % p;
  }
  return v;
}

}  // namespace reciplab
