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

#include "sqb/rates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sqb/errors.hpp"
#include "sqb/simplex.hpp"

namespace sqb {

std::string_view to_string(MeasureUsed m) {
  switch (m) {
    case MeasureUsed::esq:
      return "esq";
    case MeasureUsed::esq_tilde:
      return "esq-tilde";
    case MeasureUsed::min_of_both:
      return "min";
  }
  return "?";
}

namespace {

std::vector<double> softmax(const RVector& x, int d) {
  const double top = x.head(d).maxCoeff();
  std::vector<double> p(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) sum += p[i] = std::exp(x[i] - top);
  for (auto& v : p) v /= sum;
  return p;
}

LabelSet ground_of(const QuantumChannel& channel) {
  LabelSet g = channel.output_labels();
  g.push_back(kReference);
  return make_set(std::move(g));
}

}  // namespace

MultipartiteState channel_output_state(const QuantumChannel& channel, const MultipartiteState& input) {
  if (make_set(input.labels()) != make_set({kReference, kChannelInput}) || input.labels().size() != 2)
    throw SpecError("channel input must be a state on {" + kReference + ", " + kChannelInput + "}");
  if (!input.is_pure()) throw NotPure("channel input state must be pure");
  return apply_channel(channel, input, kChannelInput);
}

MultipartiteState input_from_params(const RVector& params, int d) {
  if (params.size() != d + Eigen::Index(d) * d) throw DimMismatch("input parameters: expected d + d^2 values");
  const auto p = softmax(params, d);
  const CMatrix u = unitary_from_params(std::span<const double>(params.data() + d, Eigen::Index(d) * d), d);
  CVector phi(Eigen::Index(d) * d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a) phi[Eigen::Index(i) * d + a] = std::sqrt(p[i]) * u(a, i);
  phi /= phi.norm();
  return MultipartiteState::from_pure(phi, {kReference, kChannelInput}, {d, d});
}

double bound_at_input(const QuantumChannel& channel, const MultipartiteState& input, const Partition& partition,
                      const SquashConfig& squash_cfg, bool* exact) {
  const MultipartiteState omega = channel_output_state(channel, input);
  const bool bipartite = partition.size() == 2;
  const bool pure = omega.is_pure();
  if (exact) *exact = pure;
  if (pure) {
    const double e = esq_exact_pure(omega, partition, Measure::esq);
    return bipartite ? e : std::min(e, esq_exact_pure(omega, partition, Measure::esq_tilde));
  }
  const double e = esq_upper_variational(omega, partition, Measure::esq, squash_cfg).value_bits;
  if (bipartite) return e;
  return std::min(e, esq_upper_variational(omega, partition, Measure::esq_tilde, squash_cfg).value_bits);
}

std::vector<RateConstraint> evaluate_bounds(const QuantumChannel& channel, std::vector<Partition> partitions,
                                            const InputSearchConfig& cfg, const SquashConfig& squash_cfg) {
  const LabelSet ground = ground_of(channel);
  if (partitions.empty()) partitions = nontrivial_partitions(ground);
  squash_cfg.validate();
  const int d = channel.input_dim();
  if (Eigen::Index(d) * channel.output_dim() > squash_cfg.dim_cap)
    throw TooLarge("channel output with reference has dimension " +
                   std::to_string(Eigen::Index(d) * channel.output_dim()) + ", above the cap of " +
                   std::to_string(squash_cfg.dim_cap));

  std::vector<RateConstraint> out;
  for (const auto& partition : partitions) {
    if (partition.ground() != ground)
      throw SpecError("partition " + partition.to_string() + " is not a partition of {" + format_set(ground) + "}");
    if (!partition.nontrivial()) throw SpecError("the trivial partition carries no constraint");

    const Objective negated = [&](const RVector& x) {
      return -bound_at_input(channel, input_from_params(x, d), partition, squash_cfg);
    };

    // Maximally entangled input first, then the random restarts.
    const RVector zero = RVector::Zero(d + Eigen::Index(d) * d);
    double best_value = -negated(zero);
    RVector best_x = zero;
    bool converged = true;

    MultiStartOptions opts;
    opts.restarts = cfg.restarts;
    opts.seed = cfg.seed;
    opts.simplex.max_iters = cfg.max_iters;
    opts.simplex.ftol = cfg.tol;
    const auto search = minimize_multistart(negated, zero.size(), opts);
    if (-search.best.value > best_value) {
      best_value = -search.best.value;
      best_x = search.best.x;
      converged = search.best.converged;
    }

    RateConstraint rc;
    rc.partition = partition;
    rc.coefficients = constraint_coefficients(partition);
    for (const auto& [m, c] : rc.coefficients.terms) rc.weights[m] = 0.5 * c;
    rc.bound_bits = std::max(0.0, best_value);
    rc.measure_used = partition.size() == 2 ? MeasureUsed::esq : MeasureUsed::min_of_both;
    rc.input.schmidt = softmax(best_x, d);
    std::sort(rc.input.schmidt.begin(), rc.input.schmidt.end(), std::greater<>());
    rc.optimizer.restarts = cfg.restarts;
    rc.optimizer.seed = cfg.seed;
    rc.optimizer.converged = converged;
    bool exact = false;
    bound_at_input(channel, input_from_params(best_x, d), partition, squash_cfg, &exact);
    rc.optimizer.exact_inner = exact;
    out.push_back(std::move(rc));
  }
  return out;
}

std::array<NamedConstraint, 4> two_receiver_report(const QuantumChannel& channel, const InputSearchConfig& cfg,
                                                   const SquashConfig& squash_cfg) {
  if (channel.output_labels().size() != 2)
    throw SpecError("two-receiver report needs exactly two output labels, got " +
                    std::to_string(channel.output_labels().size()));
  const Label& b = channel.output_labels()[0];
  const Label& c = channel.output_labels()[1];
  const std::array<std::string, 4> names = {"AC cut B", "AB cut C", "A cut BC", "ABC"};
  std::vector<Partition> partitions = {
      Partition({{kReference, c}, {b}}),
      Partition({{kReference, b}, {c}}),
      Partition({{kReference}, {b, c}}),
      Partition({{kReference}, {b}, {c}}),
  };
  auto constraints = evaluate_bounds(channel, partitions, cfg, squash_cfg);

  // Index of each rate variable among (AB, AC, BC, ABC).
  const std::map<LabelSet, int> slot = {
      {make_set({kReference, b}), 0},
      {make_set({kReference, c}), 1},
      {make_set({b, c}), 2},
      {make_set({kReference, b, c}), 3},
  };
  std::array<NamedConstraint, 4> report;
  for (int i = 0; i < 4; ++i) {
    report[i].name = names[i];
    for (const auto& [m, w] : constraints[i].weights) {
      const int s = slot.at(m);
      report[i].coefficients[s] = w;
      report[i].coefficients[s + 4] = w;
    }
    report[i].constraint = std::move(constraints[i]);
  }
  return report;
}

}  // namespace sqb
