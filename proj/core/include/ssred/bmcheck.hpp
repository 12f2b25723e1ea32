/* Copyright (C) 2026 The ssred Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "ssred/quad.hpp"

namespace ssred {

// Comparison with the weight-k eigenform constants: nu_int is the boundary
// value nu = i - r/2 (an integer since k is even).
struct BMParams {
  long p;
  long k;
  long nu_int;
  QuadElt L;
  void validate() const;
};

// b = (-1)^(k/2-nu) (k/2-nu) C(k/2-1-nu, 1-2nu) (-L / p^nu)
QuadElt bm_b(const BMParams& params);
// a = (-1)^(k/2) (-1 + (k/2)(k/2-1)(-L + 2 H_{k/2-1}))
QuadElt bm_a(long p, long k, const QuadElt& L);

// Each check returns true or throws Error(CheckFailed) naming the failing data.
bool check_b_identity(long p, long k, long i);
bool check_a_identity(long p, long k);
bool check_unit_case(long p, long k, const std::vector<QuadElt>& samples);

// L = 2 H_{k/2-1} + p*u + p*v*sqrt(p) with random p-integral u, v.
std::vector<QuadElt> unit_case_samples(long p, long k, int count, std::uint64_t seed);

// (r+1-i) C(r-i, i-1) = i C(r+1-i, i)
bool check_b_lemma(long r, long i);

}  // namespace ssred
