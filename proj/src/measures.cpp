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

#include "sqb/measures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sqb {

std::string_view to_string(Measure m) { return m == Measure::esq ? "esq" : "esq-tilde"; }

namespace {

// Entropies of sub-collections of a single state, memoized by the sorted set
// of subsystem positions. The empty collection has entropy 0.
class EntropyTable {
 public:
  explicit EntropyTable(const MultipartiteState& state) : state_(state) {}

  double operator()(std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (positions.empty()) return 0.0;
    if (auto it = cache_.find(positions); it != cache_.end()) return it->second;
    double h = 0.0;
    if (positions.size() == state_.labels().size())
      h = von_neumann_entropy(state_.matrix());
    else
      h = von_neumann_entropy(partial_trace_positions(state_.matrix(), state_.dims(), positions));
    cache_.emplace(std::move(positions), h);
    return h;
  }

  std::vector<int> positions(std::span<const Label> labels) const {
    std::vector<int> pos;
    for (const auto& l : labels) pos.push_back(state_.position(l));
    return pos;
  }

 private:
  const MultipartiteState& state_;
  std::map<std::vector<int>, double> cache_;
};

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct ResolvedSpec {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cond;
  std::vector<int> all;  // every block plus cond
};

ResolvedSpec resolve(const EntropyTable& table, const MultipartiteState& state, const BlockSpec& spec) {
  spec.validate(state);
  ResolvedSpec r;
  for (const auto& b : spec.blocks) r.blocks.push_back(table.positions(b));
  r.cond = table.positions(spec.conditioning);
  r.all = r.cond;
  for (const auto& b : r.blocks) r.all = join(r.all, b);
  return r;
}

// sum_i H(A_i E) - (m-1) H(E) - H(A E)
double total_from(EntropyTable& h, const ResolvedSpec& r) {
  const double m = static_cast<double>(r.blocks.size());
  double sum = 0.0;
  for (const auto& b : r.blocks) sum += h(join(b, r.cond));
  return sum - (m - 1.0) * h(r.cond) - h(r.all);
}

// sum_i H(A_[m]\i E) - H(E) - (m-1) H(A E)
double dual_from(EntropyTable& h, const ResolvedSpec& r) {
  const auto m = r.blocks.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> rest = r.cond;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) rest = join(rest, r.blocks[j]);
    sum += h(rest);
  }
  return sum - h(r.cond) - (static_cast<double>(m) - 1.0) * h(r.all);
}

}  // namespace

void BlockSpec::validate(const MultipartiteState& state) const {
  if (blocks.size() < 2) throw SpecError("block spec needs at least two blocks");
  std::set<Label> seen;
  auto claim = [&](const Label& l) {
    if (!state.has_label(l)) throw SpecError("block spec refers to unknown label '" + l + "'");
    if (!seen.insert(l).second) throw SpecError("label '" + l + "' appears in more than one block");
  };
  for (const auto& b : blocks) {
    if (b.empty()) throw SpecError("block spec has an empty block");
    for (const auto& l : b) claim(l);
  }
  for (const auto& l : conditioning) claim(l);
}

double entropy(const MultipartiteState& state, std::span<const Label> subset) {
  if (subset.empty()) throw EmptySubset("entropy of an empty subsystem set");
  std::set<Label> unique(subset.begin(), subset.end());
  if (unique.size() != subset.size()) throw LabelCollision("entropy: repeated label");
  EntropyTable table(state);
  return table(table.positions(subset));
}

double qcmi(const MultipartiteState& state, std::span<const Label> a, std::span<const Label> b,
            std::span<const Label> e) {
  if (a.empty() || b.empty()) throw EmptySubset("qcmi: A and B must be non-empty");
  std::set<Label> seen;
  for (auto part : {a, b, e})
    for (const auto& l : part)
      if (!seen.insert(l).second) throw LabelCollision("qcmi: label '" + l + "' appears twice");
  EntropyTable h(state);
  const auto pa = h.positions(a), pb = h.positions(b), pe = h.positions(e);
  return h(join(pa, pe)) + h(join(pb, pe)) - h(pe) - h(join(join(pa, pb), pe));
}

double cmi_total(const MultipartiteState& state, const BlockSpec& spec) {
  EntropyTable h(state);
  return total_from(h, resolve(h, state, spec));
}

double cmi_dual_measure(const MultipartiteState& state, const BlockSpec& spec) {
  EntropyTable h(state);
  return dual_from(h, resolve(h, state, spec));
}

double cmi_dual_measure_conditional_form(const MultipartiteState& state, const BlockSpec& spec) {
  EntropyTable h(state);
  const auto r = resolve(h, state, spec);
  const double h_e = h(r.cond);
  const double h_all = h(r.all);
  double value = h_all - h_e;
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    std::vector<int> rest = r.cond;
    for (std::size_t j = 0; j < r.blocks.size(); ++j)
      if (j != i) rest = join(rest, r.blocks[j]);
    value -= h_all - h(rest);  // H(A_i | A_[m]\i E)
  }
  return value;
}

ConditionalInformation conditional_informations(const MultipartiteState& state, const BlockSpec& spec) {
  EntropyTable h(state);
  const auto r = resolve(h, state, spec);
  return {total_from(h, r), dual_from(h, r)};
}

double conditional_information(const MultipartiteState& state, const BlockSpec& spec, Measure measure) {
  return measure == Measure::esq ? cmi_total(state, spec) : cmi_dual_measure(state, spec);
}

}  // namespace sqb
