/* Copyright 2026 The magnitude authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "magnitude/errors.hpp"

namespace magnitude {

/// Sums term(first) + term(first+1) + ... with a guaranteed truncation error.
///
/// tail_bound(N) must bound |sum of term(i) for i >= N| and tend to zero.
/// The cutoff N is the first index with tail_bound(N) <= eps, found a priori
/// from the bound alone; terms are then accumulated smallest-first.
template <class Term, class TailBound>
double sum_series(Term&& term, TailBound&& tail_bound, double eps,
                  std::int64_t first = 1, std::int64_t max_terms = 1000000) {
  if (!(eps > 0.0)) throw std::invalid_argument("sum_series: eps must be positive");
  std::int64_t cutoff = -1;
  for (std::int64_t n = first; n - first <= max_terms; ++n) {
    if (tail_bound(n) <= eps) {
      cutoff = n;
      break;
    }
  }
  if (cutoff < 0)
    throw NoConvergence("sum_series: tail bound never dropped below tolerance");
  double sum = 0.0;
  for (std::int64_t i = cutoff - 1; i >= first; --i) sum += term(i);
  return sum;
}

}  // namespace magnitude
