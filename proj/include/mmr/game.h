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

// Exact solver for finite two-player zero-sum matrix games.
//
// The row player minimizes and the column player maximizes the entry
// A[i][j]. In the regret game rows are solutions and columns are scenarios.

#ifndef MMR_GAME_H_
#define MMR_GAME_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmr {

// Equilibrium certificate tolerance.
inline constexpr double kEquilibriumTolerance = 1e-7;

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major payoff matrix.
class GameMatrix {
 public:
  GameMatrix() = default;
  GameMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Throws std::invalid_argument on ragged or empty input.
  static GameMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  // Growing operations used by the restricted game. A new row (column)
  // must supply exactly cols() (rows()) entries.
  void AppendRow(std::span<const double> entries);
  void AppendCol(std::span<const double> entries);

  // Throws std::invalid_argument if empty or any entry is not finite.
  void Validate() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Equilibrium {
  std::vector<double> row_probs;
  std::vector<double> col_probs;
  double value = 0.0;
};

struct PureResponse {
  std::size_t index = 0;
  double value = 0.0;
};

// Solves the game LP (min v s.t. v >= sum_i p_i A_ij) by a dense simplex on
// the condensed tableau. The column strategy is read off the optimal duals.
// Throws SolverError if pivoting stalls or the result fails the
// equilibrium certificate.
Equilibrium SolveZeroSum(const GameMatrix& a);

// argmin_i sum_j q_j A_ij; ties go to the lowest index.
PureResponse BestPureRow(const GameMatrix& a, std::span<const double> col_probs);
// argmax_j sum_i p_i A_ij; ties go to the lowest index.
PureResponse BestPureCol(const GameMatrix& a, std::span<const double> row_probs);

}  // namespace mmr

#endif  // MMR_GAME_H_
