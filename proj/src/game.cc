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

#include "mmr/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mmr {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-12;
constexpr double kRatioTie = 1e-12;
constexpr double kClampEps = 1e-12;

// Condensed simplex tableau for
//
//   max sum_c u_c  s.t.  sum_c B[c][r] u_c <= 1  (one row r per game column),
//                        u >= 0,
//
// where B = (A - min A) / range + 1 has all entries in [1, 2]. Rows hold the
// basic variables, columns the nonbasic ones; labels [0, k) are the u_c and
// [k, k + l) the slacks.
class GameTableau {
 public:
  GameTableau(const GameMatrix& a, double shift, double scale)
      : m_(a.cols()), n_(a.rows()), width_(n_ + 1),
        t_((m_ + 1) * width_), basic_(m_), nonbasic_(n_) {
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        at(r, c) = (a(c, r) - shift) / scale + 1.0;
      }
      at(r, n_) = 1.0;
      basic_[r] = n_ + r;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      at(m_, c) = -1.0;
      nonbasic_[c] = c;
    }
  }

  // Runs primal simplex to optimality: Dantzig pricing, switching
  // permanently to Bland's rule once degenerate pivots pile up.
  void Optimize() {
    const std::size_t max_pivots = 50 * (m_ + n_) + 100;
    const std::size_t degenerate_budget = 2 * (m_ + n_) + 10;
    std::size_t degenerate = 0;
    bool bland = false;
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
      const std::size_t q = ChooseEntering(bland);
      if (q == kNone) return;
      const std::size_t p = ChooseLeaving(q);
      if (p == kNone) {
        throw SolverError("game LP reported unbounded; matrix shift failed");
      }
      if (at(p, n_) / at(p, q) <= kRatioTie && ++degenerate > degenerate_budget) {
        bland = true;
      }
      Pivot(p, q);
    }
    std::ostringstream msg;
    msg << "simplex exceeded " << max_pivots << " pivots on a " << n_ << "x"
        << m_ << " game";
    throw SolverError(msg.str());
  }

  double objective() const { return at(m_, n_); }

  // Primal u (length k) and dual w (length l) at the current basis.
  void Extract(std::vector<double>& u, std::vector<double>& w) const {
    u.assign(n_, 0.0);
    w.assign(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basic_[r] < n_) u[basic_[r]] = at(r, n_);
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (nonbasic_[c] >= n_) w[nonbasic_[c] - n_] = at(m_, c);
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * width_ + c]; }

  std::size_t ChooseEntering(bool bland) const {
    std::size_t best = kNone;
    for (std::size_t c = 0; c < n_; ++c) {
      const double d = at(m_, c);
      if (d >= -kCostEps) continue;
      if (best == kNone) {
        best = c;
      } else if (bland) {
        if (nonbasic_[c] < nonbasic_[best]) best = c;
      } else if (d < at(m_, best) ||
                 (d == at(m_, best) && nonbasic_[c] < nonbasic_[best])) {
        best = c;
      }
    }
    return best;
  }

  std::size_t ChooseLeaving(std::size_t q) const {
    std::size_t best = kNone;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      const double coef = at(r, q);
      if (coef <= kPivotEps) continue;
      const double ratio = at(r, n_) / coef;
      if (best == kNone || ratio < best_ratio - kRatioTie) {
        best = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + kRatioTie && basic_[r] < basic_[best]) {
        best = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    return best;
  }

  void Pivot(std::size_t p, std::size_t q) {
    const double piv = at(p, q);
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == p) continue;
      const double factor = at(r, q) / piv;
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= n_; ++c) {
        if (c == q) continue;
        at(r, c) -= factor * at(p, c);
      }
      at(r, q) = -factor;
    }
    for (std::size_t c = 0; c <= n_; ++c) {
      if (c != q) at(p, c) /= piv;
    }
    at(p, q) = 1.0 / piv;
    // Keep the basic solution primal feasible against round-off.
    for (std::size_t r = 0; r < m_; ++r) {
      if (at(r, n_) < 0.0 && at(r, n_) > -kClampEps) at(r, n_) = 0.0;
    }
    std::swap(basic_[p], nonbasic_[q]);
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

// Clamps tiny negatives and rescales to a probability vector.
std::vector<double> Normalize(std::vector<double> v, const char* who) {
  double total = 0.0;
  for (double& x : v) {
    if (x < 0.0) x = 0.0;
    total += x;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw SolverError(std::string("degenerate ") + who + " strategy mass");
  }
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

GameMatrix::GameMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

GameMatrix GameMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("game matrix must be at least 1x1");
  }
  GameMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw std::invalid_argument("ragged game matrix");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  m.Validate();
  return m;
}

void GameMatrix::AppendRow(std::span<const double> entries) {
  if (rows_ > 0 && entries.size() != cols_) {
    throw std::invalid_argument("appended row has the wrong length");
  }
  if (rows_ == 0 && cols_ == 0) cols_ = entries.size();
  data_.insert(data_.end(), entries.begin(), entries.end());
  ++rows_;
}

void GameMatrix::AppendCol(std::span<const double> entries) {
  if (cols_ > 0 && entries.size() != rows_) {
    throw std::invalid_argument("appended column has the wrong length");
  }
  if (rows_ == 0 && cols_ == 0) rows_ = entries.size();
  std::vector<double> grown;
  grown.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    grown.insert(grown.end(), data_.begin() + i * cols_,
                 data_.begin() + (i + 1) * cols_);
    grown.push_back(entries[i]);
  }
  data_ = std::move(grown);
  ++cols_;
}

void GameMatrix::Validate() const {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("game matrix must be at least 1x1");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("game matrix has a non-finite entry");
    }
  }
}

PureResponse BestPureRow(const GameMatrix& a,
                         std::span<const double> col_probs) {
  if (col_probs.size() != a.cols()) {
    throw std::invalid_argument("column strategy has the wrong length");
  }
  PureResponse best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) v += col_probs[j] * a(i, j);
    if (v < best.value) best = {i, v};
  }
  return best;
}

PureResponse BestPureCol(const GameMatrix& a,
                         std::span<const double> row_probs) {
  if (row_probs.size() != a.rows()) {
    throw std::invalid_argument("row strategy has the wrong length");
  }
  PureResponse best{0, -std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) v += row_probs[i] * a(i, j);
    if (v > best.value) best = {j, v};
  }
  return best;
}

Equilibrium SolveZeroSum(const GameMatrix& a) {
  a.Validate();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      lo = std::min(lo, a(i, j));
      hi = std::max(hi, a(i, j));
    }
  }
  const double range = hi > lo ? hi - lo : 1.0;

  GameTableau tableau(a, lo, range);
  tableau.Optimize();

  std::vector<double> u;
  std::vector<double> w;
  tableau.Extract(u, w);
  const double z = tableau.objective();
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw SolverError("game LP returned a non-positive objective");
  }

  Equilibrium eq;
  eq.row_probs = Normalize(std::move(u), "row");
  eq.col_probs = Normalize(std::move(w), "column");
  eq.value = lo + (1.0 / z - 1.0) * range;

  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double tol = kEquilibriumTolerance * scale;
  const PureResponse col = BestPureCol(a, eq.row_probs);
  const PureResponse row = BestPureRow(a, eq.col_probs);
  if (col.value > eq.value + tol || row.value < eq.value - tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "equilibrium certificate failed on " << a.rows() << "x" << a.cols()
        << " game: value " << eq.value << ", best column " << col.value
        << ", best row " << row.value;
    throw SolverError(msg.str());
  }
  return eq;
}

}  // namespace mmr
