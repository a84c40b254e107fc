// Copyright 2026 The strongeo Authors
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

#ifndef STRONGEO_SRC_COMBINATIONS_HPP
#define STRONGEO_SRC_COMBINATIONS_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace strongeo::detail {

// Visits the k-subsets of {0..m-1} in lexicographic order. The visitor
// returns true to stop; the function reports whether it was stopped.
template <class Visitor>
bool for_each_combination(std::size_t m, std::size_t k, Visitor&& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace strongeo::detail

#endif  // STRONGEO_SRC_COMBINATIONS_HPP
