// Copyright 2026 The pomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pomlab/simplex.h"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "pomlab/error.h"

namespace pomlab {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kFeasibilityTolerance = 1e-9;

class Tableau {
 public:
  // Columns [0, structural) are the original variables, the rest artificials.
  Tableau(const LinearProgram& lp)
      : m_(lp.rows.size()), structural_(static_cast<std::size_t>(lp.num_vars)),
        cols_(structural_ + m_), a_(m_, std::vector<double>(cols_ + 1, 0.0)), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < structural_; ++j) a_[i][j] = sign * lp.rows[i][j];
      a_[i][structural_ + i] = 1.0;
      a_[i][cols_] = sign * lp.rhs[i];
      basis_[i] = structural_ + i;
    }
  }

  // Maximizes cost . x over the columns flagged in `allowed`. Returns false
  // when unbounded.
  bool Optimize(const std::vector<double>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced cost d_j = c_j - c_B B^-1 A_j.
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
        if (!allowed[j] || IsBasic(j)) continue;
        double d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) d -= cost[basis_[i]] * a_[i][j];
        if (d > kPivotTolerance) entering = j;  // Bland: first improving column
      }
      if (entering == cols_) return true;
      std::size_t leaving = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][entering] <= kPivotTolerance) continue;
        const double ratio = a_[i][cols_] / a_[i][entering];
        if (ratio < best_ratio - kPivotTolerance ||
            (std::abs(ratio - best_ratio) <= kPivotTolerance && basis_[i] < basis_[leaving])) {
          best_ratio = std::min(best_ratio, ratio);
          leaving = i;
        }
      }
      if (leaving == m_) return false;
      Pivot(leaving, entering);
    }
  }

  // Moves artificials out of the basis after phase one; rows that cannot be
  // pivoted are linear combinations of others and are removed.
  void PurgeArtificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < structural_) {
        ++i;
        continue;
      }
      std::size_t col = structural_;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (!IsBasic(j) && std::abs(a_[i][j]) > kPivotTolerance) {
          col = j;
          break;
        }
      }
      if (col < structural_) {
        Pivot(i, col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  double Value(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * a_[i][cols_];
    return v;
  }

  std::vector<double> Solution() const {
    std::vector<double> x(structural_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = a_[i][cols_];
    }
    return x;
  }

  std::size_t structural() const { return structural_; }
  std::size_t cols() const { return cols_; }

 private:
  bool IsBasic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void Pivot(std::size_t row, std::size_t col) {
    const double pivot = a_[row][col];
    for (double& v : a_[row]) v /= pivot;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = a_[i][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) a_[i][j] -= factor * a_[row][j];
      a_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t structural_;
  std::size_t cols_;
  std::vector<std::vector<double>> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::AddEquality(std::vector<double> coefficients, double value) {
  rows.push_back(std::move(coefficients));
  rhs.push_back(value);
}

LpSolution SolveLinearProgram(const LinearProgram& lp) {
  const auto nv = static_cast<std::size_t>(lp.num_vars);
  if (lp.objective.size() != nv || lp.rows.size() != lp.rhs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "linear program dimensions are inconsistent");
  }
  for (const auto& row : lp.rows) {
    if (row.size() != nv) {
      throw Error(ErrorCode::kInvalidArgument, "constraint row has " +
                                                   std::to_string(row.size()) +
                                                   " coefficients, expected " +
                                                   std::to_string(nv));
    }
  }

  Tableau t(lp);
  std::vector<double> phase1(t.cols(), 0.0);
  for (std::size_t j = t.structural(); j < t.cols(); ++j) phase1[j] = -1.0;
  std::vector<bool> all(t.cols(), true);
  t.Optimize(phase1, all);

  LpSolution out;
  if (t.Value(phase1) < -kFeasibilityTolerance) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  t.PurgeArtificials();

  std::vector<double> cost(t.cols(), 0.0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  std::vector<bool> structural_only(t.cols(), false);
  for (std::size_t j = 0; j < nv; ++j) structural_only[j] = true;
  if (!t.Optimize(cost, structural_only)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.value = t.Value(cost);
  out.x = t.Solution();
  return out;
}

}  // namespace pomlab
