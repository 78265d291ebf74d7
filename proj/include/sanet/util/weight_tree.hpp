// Copyright 2026 The sanet Authors.
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

#include <cstddef>
#include <vector>

namespace sanet {

// Fenwick tree over nonnegative weights supporting append, point update and
// inverse-CDF lookup in O(log n).
class WeightTree {
 public:
  std::size_t size() const { return weights_.size(); }
  double total() const { return total_; }
  double weight(std::size_t i) const { return weights_[i]; }

  void Append(double w) {
    const std::size_t i = weights_.size() + 1;  // 1-based slot
    weights_.push_back(w);
    // Slot i covers (i - lowbit(i), i].
    double node = w;
    const std::size_t low = i & (~i + 1);
    for (std::size_t j = 1; j < low; j <<= 1) node += tree_[i - j - 1];
    tree_.push_back(node);
    total_ += w;
  }

  void Set(std::size_t index, double w) {
    const double diff = w - weights_[index];
    weights_[index] = w;
    total_ += diff;
    for (std::size_t i = index + 1; i <= tree_.size(); i += i & (~i + 1)) {
      tree_[i - 1] += diff;
    }
  }

  // Smallest index whose inclusive prefix sum exceeds `target`; target should
  // lie in [0, total()).
  std::size_t Find(double target) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 <= tree_.size()) step *= 2;
    for (; step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next <= tree_.size() && tree_[next - 1] <= target) {
        pos = next;
        target -= tree_[next - 1];
      }
    }
    if (pos >= weights_.size()) pos = weights_.size() - 1;
    // Skip zero-weight slots that rounding may land on.
    while (weights_[pos] <= 0.0 && pos + 1 < weights_.size()) ++pos;
    return pos;
  }

 private:
  std::vector<double> weights_;
  std::vector<double> tree_;
  double total_ = 0.0;
};

}  // namespace sanet
