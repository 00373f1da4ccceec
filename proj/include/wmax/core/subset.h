// Copyright 2026 The Authors.
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

#ifndef WMAX_CORE_SUBSET_H_
#define WMAX_CORE_SUBSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wmax {

// Largest ground set the brute-force enumerators accept (2^25 subsets).
inline constexpr int kMaxEnumerationGroundSize = 25;

// A subset of the ground set [d] = {0, ..., d-1}, stored as a strictly
// increasing index sequence. Every set operation returns canonical form, so
// two subsets compare equal iff they hold the same elements over the same d.
class Subset {
 public:
  Subset() = default;

  // Sorts `indices`; throws DomainError on duplicates or out-of-range values.
  Subset(int ground_size, std::vector<int> indices);
  Subset(int ground_size, std::initializer_list<int> indices)
      : Subset(ground_size, std::vector<int>(indices)) {}

  static Subset Empty(int ground_size);
  static Subset Full(int ground_size);
  // Bit j of `mask` set <=> j in the subset. Requires ground_size <= 64.
  static Subset FromMask(int ground_size, uint64_t mask);

  int ground_size() const { return ground_size_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  std::span<const int> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  int operator[](int i) const { return indices_[i]; }

  bool Contains(int j) const;
  bool IsSubsetOf(const Subset& other) const;
  bool IsDisjointFrom(const Subset& other) const;

  Subset Union(const Subset& other) const;
  Subset Intersection(const Subset& other) const;
  Subset Difference(const Subset& other) const;
  Subset With(int j) const;
  Subset Without(int j) const;
  // Elements of [d] not in this subset.
  Subset Complement() const;

  // Requires ground_size <= 64.
  uint64_t Mask() const;

  std::string ToString() const;

  // Size-then-lexicographic order; ground sizes compared first.
  std::strong_ordering operator<=>(const Subset& other) const;
  bool operator==(const Subset& other) const = default;

 private:
  void CheckCompatible(const Subset& other) const;

  int ground_size_ = 0;
  std::vector<int> indices_;
};

struct SubsetHash {
  size_t operator()(const Subset& s) const;
};

// Binomial coefficient, saturating at UINT64_MAX.
uint64_t Binomial(int n, int k);

// Number of subsets of [d] with size <= max_size (saturating).
uint64_t CountSubsets(int d, int max_size);

// Streams every subset of [d] with size <= max_size exactly once, in
// size-then-lexicographic order. Throws CapacityError when
// d > kMaxEnumerationGroundSize and DomainError on bad arguments.
class SubsetEnumerator {
 public:
  SubsetEnumerator(int d, int max_size);

  // Writes the next subset to `*out`; returns false when exhausted.
  bool Next(Subset* out);

 private:
  bool Advance();

  int d_;
  int max_size_;
  int current_size_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> combo_;
};

std::vector<Subset> EnumerateSubsets(int d, int max_size);

// Invokes fn(subset) for each subset of [d] with exactly `size` elements in
// lexicographic order; no capacity cap beyond the caller's patience.
void ForEachCombination(int d, int size,
                        const std::function<void(std::span<const int>)>& fn);

// Writes the combination of `size` elements of [d] with lexicographic rank
// `rank` into `out` (combinatorial number system).
void UnrankCombination(int d, int size, uint64_t rank, std::vector<int>* out);

// Advances `combo` (over [d]) to its lexicographic successor; false at the end.
bool NextCombination(int d, std::vector<int>* combo);

}  // namespace wmax

#endif  // WMAX_CORE_SUBSET_H_
