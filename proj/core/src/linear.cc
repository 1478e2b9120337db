// Copyright 2026 The sigev Authors
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

#include "linear.h"

#include <algorithm>
#include <cmath>
#include <optional>

namespace sigev::internal {
namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kMergeTol = 1e-9;

// nullopt for a zero row (constant constraint).
std::optional<LinearRow> Normalize(const LinearRow& row) {
  double scale = 0.0;
  for (double v : row.a) scale = std::max(scale, std::abs(v));
  if (scale <= kPivotTol) return std::nullopt;
  LinearRow out = row;
  for (double& v : out.a) v /= scale;
  out.b /= scale;
  return out;
}

// Gauss-Jordan on the augmented rows; nullopt unless the solution is unique
// and the system consistent.
std::optional<std::vector<double>> SolveUnique(
    int dim, std::vector<std::vector<double>> m, double tol) {
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < dim && rank < rows; ++c) {
    int best = rank;
    for (int r = rank + 1; r < rows; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
    }
    if (std::abs(m[best][c]) <= kPivotTol) continue;
    std::swap(m[rank], m[best]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const double f = m[r][c] / m[rank][c];
      if (f == 0.0) continue;
      for (int k = c; k <= dim; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < dim) return std::nullopt;
  for (int r = rank; r < rows; ++r) {
    if (std::abs(m[r][dim]) > tol) return std::nullopt;
  }
  std::vector<double> x(dim);
  for (int r = 0; r < rank; ++r) {
    x[pivot_col[r]] = m[r][dim] / m[r][pivot_col[r]];
  }
  return x;
}

}  // namespace

std::vector<std::vector<double>> BoxPolytopeVertices(
    int dim, const std::vector<LinearRow>& eq,
    const std::vector<LinearRow>& geq, double tol) {
  std::vector<LinearRow> eqs, ineqs;
  for (const auto& row : eq) {
    if (auto n = Normalize(row)) {
      eqs.push_back(*n);
    } else if (std::abs(row.b) > tol) {
      return {};
    }
  }
  for (const auto& row : geq) {
    if (auto n = Normalize(row)) {
      ineqs.push_back(*n);
    } else if (row.b > tol) {
      return {};
    }
  }

  auto feasible = [&](const std::vector<double>& x) {
    for (double v : x) {
      if (v < -tol || v > 1.0 + tol) return false;
    }
    auto dot = [&](const LinearRow& r) {
      double s = 0.0;
      for (int j = 0; j < dim; ++j) s += r.a[j] * x[j];
      return s;
    };
    for (const auto& r : eqs) {
      if (std::abs(dot(r) - r.b) > tol) return false;
    }
    for (const auto& r : ineqs) {
      if (dot(r) < r.b - tol) return false;
    }
    return true;
  };

  std::vector<std::vector<double>> out;
  if (dim == 0) {
    if (feasible({})) out.emplace_back();
    return out;
  }

  // Box faces are candidate active constraints too.
  std::vector<LinearRow> candidates = ineqs;
  for (int j = 0; j < dim; ++j) {
    LinearRow lo{std::vector<double>(dim, 0.0), 0.0};
    lo.a[j] = 1.0;
    candidates.push_back(lo);
    LinearRow hi{std::vector<double>(dim, 0.0), -1.0};
    hi.a[j] = -1.0;
    candidates.push_back(hi);
  }

  auto add = [&](std::vector<double> x) {
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);
    for (const auto& y : out) {
      double d = 0.0;
      for (int j = 0; j < dim; ++j) d = std::max(d, std::abs(x[j] - y[j]));
      if (d <= kMergeTol) return;
    }
    out.push_back(std::move(x));
  };

  // Active subsets of every size up to dim, since equality rows may already
  // pin some directions.
  const int nc = static_cast<int>(candidates.size());
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int start) -> void {
    if (!pick.empty() || !eqs.empty()) {
      std::vector<std::vector<double>> m;
      for (const auto& r : eqs) {
        m.push_back(r.a);
        m.back().push_back(r.b);
      }
      for (int k : pick) {
        m.push_back(candidates[k].a);
        m.back().push_back(candidates[k].b);
      }
      if (auto x = SolveUnique(dim, std::move(m), tol)) {
        if (feasible(*x)) add(std::move(*x));
      }
    }
    if (static_cast<int>(pick.size()) == dim) return;
    for (int k = start; k < nc; ++k) {
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sigev::internal
