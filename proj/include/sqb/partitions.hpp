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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqb/state.hpp"

namespace sqb {

/// A set of labels, kept sorted and duplicate free.
using LabelSet = std::vector<Label>;

LabelSet make_set(std::vector<Label> labels);
/// "A,B,C"
std::string format_set(const LabelSet& s);
/// Ordering used for all set listings: by size, then lexicographically.
bool set_less(const LabelSet& a, const LabelSet& b);

/// Partition of a ground set into disjoint non-empty blocks. Blocks are
/// stored canonically (each sorted; blocks ordered lexicographically), so two
/// partitions compare equal iff they are the same set partition.
class Partition {
 public:
  Partition() = default;
  /// Throws SpecError on empty or overlapping blocks.
  explicit Partition(std::vector<LabelSet> blocks);

  /// "R|B,C" -> {{R},{B,C}}.
  static Partition parse(std::string_view text);

  const std::vector<LabelSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  LabelSet ground() const;
  bool nontrivial() const { return blocks_.size() > 1; }
  /// Index of the block containing label, or -1.
  int block_of(const Label& label) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<LabelSet> blocks_;
};

/// Every subset with at least two elements: 2^n - n - 1 of them.
std::vector<LabelSet> subsets_geq2(const LabelSet& ground);

/// Every partition with at least two blocks: Bell(n) - 1 of them.
std::vector<Partition> nontrivial_partitions(const LabelSet& ground);

/// C(G): unions of one (possibly empty) subset per block, without the empty
/// set, singletons, or sets lying inside a single block.
std::vector<LabelSet> c_of(const Partition& partition);

/// A(M,G) = { X & M : X in G } without the empty set. M must be in C(G).
std::vector<LabelSet> a_of(const LabelSet& m, const Partition& partition);

struct ConstraintCoefficients {
  LabelSet ground;
  Partition partition;
  /// M -> |A(M,G)| for every M in C(G). The rate constraint reads
  /// (1/2) sum_M |A(M,G)| (K_M + E_M) <= bound.
  std::map<LabelSet, int> terms;
};

ConstraintCoefficients constraint_coefficients(const Partition& partition);

/// Replaces every party in a partition of parties by the subsystems it holds.
Partition lift_partition(const Partition& parties, const std::map<Label, Labels>& holdings);

/// Partition whose blocks are the single labels of `ground`.
Partition complete_partition(const LabelSet& ground);

}  // namespace sqb
