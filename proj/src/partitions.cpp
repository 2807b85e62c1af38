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

#include "sqb/partitions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sqb/errors.hpp"

namespace sqb {

namespace {

constexpr std::size_t kMaxGround = 16;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

LabelSet subset_of(const LabelSet& ground, unsigned mask) {
  LabelSet s;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask & (1u << i)) s.push_back(ground[i]);
  return s;
}

void check_ground(const LabelSet& ground) {
  if (ground.size() < 2) throw SpecError("ground set needs at least two elements");
  if (ground.size() > kMaxGround) throw SpecError("ground set too large for enumeration");
}

}  // namespace

LabelSet make_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::string format_set(const LabelSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out;
}

bool set_less(const LabelSet& a, const LabelSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Partition::Partition(std::vector<LabelSet> blocks) {
  std::set<Label> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw SpecError("partition has an empty block");
    const auto n = b.size();
    b = make_set(std::move(b));
    if (b.size() != n) throw SpecError("partition block repeats a label");
    for (const auto& l : b)
      if (!seen.insert(l).second) throw SpecError("label '" + l + "' appears in two blocks");
  }
  std::sort(blocks.begin(), blocks.end());
  blocks_ = std::move(blocks);
}

Partition Partition::parse(std::string_view text) {
  std::vector<LabelSet> blocks;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    const auto block_text = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    LabelSet block;
    std::size_t s = 0;
    while (true) {
      const auto comma = block_text.find(',', s);
      auto label = trim(block_text.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s));
      if (label.empty()) throw SpecError("malformed partition '" + std::string(text) + "': empty label");
      block.push_back(std::move(label));
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Partition(std::move(blocks));
}

LabelSet Partition::ground() const {
  LabelSet all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  return make_set(std::move(all));
}

int Partition::block_of(const Label& label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), label)) return static_cast<int>(i);
  return -1;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out += (i ? "|" : "") + format_set(blocks_[i]);
  return out;
}

std::vector<LabelSet> subsets_geq2(const LabelSet& g) {
  const LabelSet ground = make_set(g);
  check_ground(ground);
  std::vector<LabelSet> out;
  for (unsigned mask = 0; mask < (1u << ground.size()); ++mask)
    if (std::popcount(mask) >= 2) out.push_back(subset_of(ground, mask));
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::vector<Partition> nontrivial_partitions(const LabelSet& g) {
  const LabelSet ground = make_set(g);
  check_ground(ground);
  const std::size_t n = ground.size();
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  std::vector<Partition> out;
  while (true) {
    const int nblocks = *std::max_element(a.begin(), a.end()) + 1;
    if (nblocks > 1) {
      std::vector<LabelSet> blocks(nblocks);
      for (std::size_t i = 0; i < n; ++i) blocks[a[i]].push_back(ground[i]);
      out.emplace_back(std::move(blocks));
    }
    std::size_t i = n - 1;
    for (;; --i) {
      if (i == 0) {
        std::sort(out.begin(), out.end(),
                  [](const Partition& x, const Partition& y) {
                    if (x.size() != y.size()) return x.size() < y.size();
                    return x < y;
                  });
        return out;
      }
      const int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
    }
  }
}

std::vector<LabelSet> c_of(const Partition& partition) {
  if (!partition.nontrivial()) throw SpecError("C(G) needs a nontrivial partition");
  const LabelSet ground = partition.ground();
  if (ground.size() > kMaxGround) throw SpecError("ground set too large for enumeration");
  std::vector<LabelSet> out;
  for (unsigned mask = 0; mask < (1u << ground.size()); ++mask) {
    if (std::popcount(mask) < 2) continue;
    LabelSet m = subset_of(ground, mask);
    const int first = partition.block_of(m.front());
    const bool spans = std::any_of(m.begin(), m.end(), [&](const Label& l) { return partition.block_of(l) != first; });
    if (spans) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::vector<LabelSet> a_of(const LabelSet& m_in, const Partition& partition) {
  const LabelSet m = make_set(m_in);
  const auto valid = c_of(partition);
  if (std::find(valid.begin(), valid.end(), m) == valid.end())
    throw SpecError("A(M,G): {" + format_set(m) + "} is not in C(G) for G = " + partition.to_string());
  std::vector<LabelSet> out;
  for (const auto& block : partition.blocks()) {
    LabelSet cut;
    std::set_intersection(block.begin(), block.end(), m.begin(), m.end(), std::back_inserter(cut));
    if (!cut.empty()) out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

ConstraintCoefficients constraint_coefficients(const Partition& partition) {
  ConstraintCoefficients cc;
  cc.ground = partition.ground();
  cc.partition = partition;
  for (const auto& m : c_of(partition)) cc.terms[m] = static_cast<int>(a_of(m, partition).size());
  return cc;
}

Partition lift_partition(const Partition& parties, const std::map<Label, Labels>& holdings) {
  std::vector<LabelSet> blocks;
  for (const auto& block : parties.blocks()) {
    LabelSet lifted;
    for (const auto& party : block) {
      const auto it = holdings.find(party);
      if (it == holdings.end()) throw SpecError("party '" + party + "' holds no subsystems");
      lifted.insert(lifted.end(), it->second.begin(), it->second.end());
    }
    blocks.push_back(std::move(lifted));
  }
  return Partition(std::move(blocks));
}

Partition complete_partition(const LabelSet& ground) {
  std::vector<LabelSet> blocks;
  for (const auto& l : ground) blocks.push_back({l});
  return Partition(std::move(blocks));
}

}  // namespace sqb
