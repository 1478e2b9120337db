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

// Vertex enumeration for small polytopes inside the unit box.

#ifndef SIGEV_SRC_LINEAR_H_
#define SIGEV_SRC_LINEAR_H_

#include <vector>

namespace sigev::internal {

// a . x (op) b
struct LinearRow {
  std::vector<double> a;
  double b = 0.0;
};

// Vertices of {x in [0,1]^dim : eq rows hold, geq rows satisfy a.x >= b}.
// Brute force over active sets; intended for dim <= 4. Rows are scaled to
// unit max-norm before `tol` is applied. Near-duplicate vertices are merged.
std::vector<std::vector<double>> BoxPolytopeVertices(
    int dim, const std::vector<LinearRow>& eq,
    const std::vector<LinearRow>& geq, double tol);

}  // namespace sigev::internal

#endif  // SIGEV_SRC_LINEAR_H_
