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

#include "wmax/core/subset.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>
#include <sstream>

#include "wmax/core/errors.h"

namespace wmax {

Subset::Subset(int ground_size, std::vector<int> indices)
    : ground_size_(ground_size), indices_(std::move(indices)) {
  if (ground_size < 0) throw DomainError("Subset: negative ground size");
  std::sort(indices_.begin(), indices_.end());
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= ground_size) {
      throw DomainError("Subset: index " + std::to_string(indices_[i]) +
                        " outside [0, " + std::to_string(ground_size) + ")");
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw DomainError("Subset: duplicate index " +
                        std::to_string(indices_[i]));
    }
  }
}

Subset Subset::Empty(int ground_size) { return Subset(ground_size, {}); }

Subset Subset::Full(int ground_size) {
  std::vector<int> all(ground_size);
  for (int j = 0; j < ground_size; ++j) all[j] = j;
  Subset s;
  s.ground_size_ = ground_size;
  s.indices_ = std::move(all);
  return s;
}

Subset Subset::FromMask(int ground_size, uint64_t mask) {
  if (ground_size > 64) throw DomainError("Subset::FromMask: d > 64");
  if (ground_size < 64 && (mask >> ground_size) != 0) {
    throw DomainError("Subset::FromMask: mask has bits beyond d");
  }
  Subset s;
  s.ground_size_ = ground_size;
  while (mask != 0) {
    s.indices_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool Subset::Contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

void Subset::CheckCompatible(const Subset& other) const {
  if (ground_size_ != other.ground_size_) {
    throw DomainError("Subset: ground sizes differ (" +
                      std::to_string(ground_size_) + " vs " +
                      std::to_string(other.ground_size_) + ")");
  }
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckCompatible(other);
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

bool Subset::IsDisjointFrom(const Subset& other) const {
  CheckCompatible(other);
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Subset Subset::Union(const Subset& other) const {
  CheckCompatible(other);
  Subset out;
  out.ground_size_ = ground_size_;
  out.indices_.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

Subset Subset::Intersection(const Subset& other) const {
  CheckCompatible(other);
  Subset out;
  out.ground_size_ = ground_size_;
  std::set_intersection(indices_.begin(), indices_.end(),
                        other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(out.indices_));
  return out;
}

Subset Subset::Difference(const Subset& other) const {
  CheckCompatible(other);
  Subset out;
  out.ground_size_ = ground_size_;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

Subset Subset::With(int j) const {
  if (j < 0 || j >= ground_size_) {
    throw DomainError("Subset::With: index " + std::to_string(j) +
                      " out of range");
  }
  Subset out = *this;
  auto it = std::lower_bound(out.indices_.begin(), out.indices_.end(), j);
  if (it == out.indices_.end() || *it != j) out.indices_.insert(it, j);
  return out;
}

Subset Subset::Without(int j) const {
  Subset out = *this;
  auto it = std::lower_bound(out.indices_.begin(), out.indices_.end(), j);
  if (it != out.indices_.end() && *it == j) out.indices_.erase(it);
  return out;
}

Subset Subset::Complement() const { return Full(ground_size_).Difference(*this); }

uint64_t Subset::Mask() const {
  if (ground_size_ > 64) throw DomainError("Subset::Mask: d > 64");
  uint64_t mask = 0;
  for (int j : indices_) mask |= uint64_t{1} << j;
  return mask;
}

std::string Subset::ToString() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) os << ',';
    os << indices_[i];
  }
  os << '}';
  return os.str();
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (auto c = ground_size_ <=> other.ground_size_; c != 0) return c;
  if (auto c = indices_.size() <=> other.indices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      indices_.begin(), indices_.end(), other.indices_.begin(),
      other.indices_.end());
}

size_t SubsetHash::operator()(const Subset& s) const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(s.ground_size());
  for (int j : s) {
    h ^= static_cast<uint64_t>(j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    const uint64_t numer = static_cast<uint64_t>(n - k + i);
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(result) * numer / static_cast<uint64_t>(i);
    if (wide > kMax) return kMax;
    result = static_cast<uint64_t>(wide);
  }
  return result;
}

uint64_t CountSubsets(int d, int max_size) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  uint64_t total = 0;
  for (int s = 0; s <= std::min(d, max_size); ++s) {
    const uint64_t b = Binomial(d, s);
    if (b > kMax - total) return kMax;
    total += b;
  }
  return total;
}

SubsetEnumerator::SubsetEnumerator(int d, int max_size)
    : d_(d), max_size_(max_size) {
  if (d > kMaxEnumerationGroundSize) {
    throw CapacityError("subset enumeration capped at d <= " +
                        std::to_string(kMaxEnumerationGroundSize) +
                        " (got d = " + std::to_string(d) + ")");
  }
  if (d < 0 || max_size < 0 || max_size > d) {
    throw DomainError("SubsetEnumerator: need 0 <= max_size <= d");
  }
}

bool NextCombination(int d, std::vector<int>* combo) {
  const int size = static_cast<int>(combo->size());
  int i = size - 1;
  while (i >= 0 && (*combo)[i] == d - size + i) --i;
  if (i < 0) return false;
  ++(*combo)[i];
  for (int t = i + 1; t < size; ++t) (*combo)[t] = (*combo)[t - 1] + 1;
  return true;
}

bool SubsetEnumerator::Advance() {
  if (!started_) {
    started_ = true;
    current_size_ = 0;
    combo_.clear();
    return true;
  }
  if (NextCombination(d_, &combo_)) return true;
  ++current_size_;
  if (current_size_ > max_size_) return false;
  combo_.resize(current_size_);
  for (int i = 0; i < current_size_; ++i) combo_[i] = i;
  return true;
}

bool SubsetEnumerator::Next(Subset* out) {
  if (done_) return false;
  if (!Advance()) {
    done_ = true;
    return false;
  }
  *out = Subset(d_, combo_);
  return true;
}

std::vector<Subset> EnumerateSubsets(int d, int max_size) {
  SubsetEnumerator it(d, max_size);
  std::vector<Subset> out;
  Subset s;
  while (it.Next(&s)) out.push_back(s);
  return out;
}

void ForEachCombination(int d, int size,
                        const std::function<void(std::span<const int>)>& fn) {
  if (size < 0 || size > d) return;
  std::vector<int> combo(size);
  for (int i = 0; i < size; ++i) combo[i] = i;
  do {
    fn(combo);
  } while (NextCombination(d, &combo));
}

void UnrankCombination(int d, int size, uint64_t rank, std::vector<int>* out) {
  out->assign(size, 0);
  int next = 0;
  for (int i = 0; i < size; ++i) {
    // Count combinations that start with `next` at position i.
    while (true) {
      const uint64_t block = Binomial(d - next - 1, size - i - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    (*out)[i] = next;
    ++next;
  }
}

}  // namespace wmax
