// Copyright 2026 The sqbound Authors
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

#pragma once

#include <cstdint>
#include <functional>

#include "sqb/linalg.hpp"

namespace sqb {

using Objective = std::function<double(const RVector&)>;

struct SimplexOptions {
  int max_iters = 2000;
  /// Stop once the spread of objective values over the simplex is below
  /// ftol and every vertex is within xtol of the best one.
  double ftol = 1e-8;
  double xtol = 1e-9;
  double initial_step = 0.5;
};

struct SimplexResult {
  RVector x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex (standard coefficients 1, 2, 1/2, 1/2).
SimplexResult minimize_simplex(const Objective& f, const RVector& x0, const SimplexOptions& options);

struct MultiStartOptions {
  SimplexOptions simplex;
  int restarts = 20;
  std::uint64_t seed = 0;
  /// Initial points are uniform in [lower, upper]^dim.
  double lower = -3.14159265358979323846;
  double upper = 3.14159265358979323846;
  /// Worker threads for independent restarts; <= 1 runs sequentially.
  int threads = 1;
};

struct MultiStartResult {
  SimplexResult best;
  int best_restart = -1;
  std::vector<double> restart_values;
};

/// Runs `restarts` independent simplex searches. Restart i draws its start
/// from make_rng(seed, i), so a run with more restarts visits a superset of
/// the starts of a run with fewer; the result is the exact minimum (ties go
/// to the lowest restart index) and does not depend on `threads`.
MultiStartResult minimize_multistart(const Objective& f, Eigen::Index dim, const MultiStartOptions& options);

}  // namespace sqb
