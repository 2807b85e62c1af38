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

#include "sqb/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "sqb/random.hpp"

namespace sqb {

SimplexResult minimize_simplex(const Objective& f, const RVector& x0, const SimplexOptions& options) {
  const Eigen::Index n = x0.size();
  SimplexResult result;
  if (n == 0) {
    result.x = x0;
    result.value = f(x0);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  std::vector<RVector> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += options.initial_step;
  for (Eigen::Index i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  int evals = static_cast<int>(n + 1);

  std::vector<Eigen::Index> order(n + 1);
  int iter = 0;
  bool converged = false;
  for (; iter < options.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const auto best = order.front(), worst = order.back(), second = order[n - 1];

    double size = 0.0;
    for (Eigen::Index i = 0; i <= n; ++i) size = std::max(size, (pts[i] - pts[best]).cwiseAbs().maxCoeff());
    if (vals[worst] - vals[best] <= options.ftol && size <= options.xtol) {
      converged = true;
      break;
    }

    RVector centroid = RVector::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= static_cast<double>(n);

    const RVector reflected = centroid + (centroid - pts[worst]);
    const double f_r = f(reflected);
    ++evals;
    if (f_r < vals[best]) {
      const RVector expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double f_e = f(expanded);
      ++evals;
      if (f_e < f_r) {
        pts[worst] = expanded;
        vals[worst] = f_e;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_r;
      }
      continue;
    }
    if (f_r < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = f_r;
      continue;
    }
    const bool outside = f_r < vals[worst];
    const RVector contracted =
        outside ? RVector(centroid + 0.5 * (reflected - centroid)) : RVector(centroid + 0.5 * (pts[worst] - centroid));
    const double f_c = f(contracted);
    ++evals;
    if (f_c < std::min(f_r, vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = f_c;
      continue;
    }
    // shrink towards the best vertex
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
      ++evals;
    }
  }

  const auto best = std::min_element(vals.begin(), vals.end()) - vals.begin();
  result.x = pts[best];
  result.value = vals[best];
  result.iterations = iter;
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

MultiStartResult minimize_multistart(const Objective& f, Eigen::Index dim, const MultiStartOptions& options) {
  const int restarts = std::max(1, options.restarts);
  std::vector<SimplexResult> runs(restarts);

  auto run_one = [&](int i) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(i));
    std::uniform_real_distribution<double> uniform(options.lower, options.upper);
    RVector x0(dim);
    for (Eigen::Index k = 0; k < dim; ++k) x0[k] = uniform(rng);
    runs[i] = minimize_simplex(f, x0, options.simplex);
  };

  if (options.threads <= 1 || restarts == 1) {
    for (int i = 0; i < restarts; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(restarts);
    std::vector<std::thread> workers;
    const int nthreads = std::min(options.threads, restarts);
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        for (int i = next++; i < restarts; i = next++) {
          try {
            run_one(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  MultiStartResult out;
  for (int i = 0; i < restarts; ++i) {
    out.restart_values.push_back(runs[i].value);
    if (out.best_restart < 0 || runs[i].value < out.best.value) {
      out.best = runs[i];
      out.best_restart = i;
    }
  }
  return out;
}

}  // namespace sqb
