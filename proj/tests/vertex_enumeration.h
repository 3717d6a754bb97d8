// Copyright 2026 The mmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent matrix game value by vertex enumeration, for tests only.
//
// Every vertex of {(p, v) : A^T p <= v, sum p = 1, p >= 0} has a row support
// I and an equally sized set J of tight columns. We solve each such square
// system and keep the smallest v whose p is feasible.

#ifndef MMR_TESTS_VERTEX_ENUMERATION_H_
#define MMR_TESTS_VERTEX_ENUMERATION_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "mmr/game.h"

namespace mmr::testing {

// Solves M z = b in place by Gaussian elimination with partial pivoting.
// Returns false if M is (numerically) singular.
inline bool SolveDense(std::vector<std::vector<double>> m,
                       std::vector<double> b, std::vector<double>& z) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-10) return false;
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  z.resize(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = b[i] / m[i][i];
  return true;
}

inline std::vector<std::vector<std::size_t>> Subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Value of the game where rows minimize.
inline double VertexEnumerationValue(const GameMatrix& a) {
  const auto row_sets = Subsets(a.rows());
  const auto col_sets = Subsets(a.cols());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      if (cols.size() != rows.size()) continue;
      const std::size_t k = rows.size();
      // Unknowns: p over `rows`, then v.
      std::vector<std::vector<double>> m(k + 1, std::vector<double>(k + 1));
      std::vector<double> b(k + 1, 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[j][i] = a(rows[i], cols[j]);
        m[j][k] = -1.0;
      }
      for (std::size_t i = 0; i < k; ++i) m[k][i] = 1.0;
      b[k] = 1.0;
      std::vector<double> z;
      if (!SolveDense(m, b, z)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = z[i] >= -1e-9;
      if (!ok) continue;
      const double v = z[k];
      for (std::size_t j = 0; j < a.cols() && ok; ++j) {
        double payoff = 0.0;
        for (std::size_t i = 0; i < k; ++i) payoff += z[i] * a(rows[i], j);
        ok = payoff <= v + 1e-9 * std::max(1.0, std::abs(v));
      }
      if (ok) best = std::min(best, v);
    }
  }
  return best;
}

}  // namespace mmr::testing

#endif  // MMR_TESTS_VERTEX_ENUMERATION_H_
