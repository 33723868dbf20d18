#pragma once

// Independent reference computations used only by the tests: dense matrices,
// brute-force enumerations and hand-unfolded formulas.

#include <rackbi/scalar.hpp>

#include <random>
#include <vector>

namespace oracle {

using rackbi::Q;
using Dense = std::vector<std::vector<Q>>;

inline Dense kron(const Dense& a, const Dense& b)
{
  std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Dense r(ar * br, std::vector<Q>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return r;
}

inline Dense mul(const Dense& a, const Dense& b)
{
  Dense r(a.size(), std::vector<Q>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// Rank by plain dense Gaussian elimination (first nonzero pivot).
inline std::size_t dense_rank(Dense m)
{
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Q random_q(std::mt19937& rng, int span = 5, int den = 3)
{
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  Q q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Dense random_dense(std::mt19937& rng, std::size_t r, std::size_t c, double density = 1.0)
{
  std::uniform_real_distribution<double> u(0, 1);
  Dense m(r, std::vector<Q>(c));
  for (auto& row : m)
    for (auto& x : row)
      if (u(rng) < density) x = random_q(rng);
  return m;
}

} // namespace oracle
