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

#include "ssred/rational.hpp"

namespace ssred {

// v_- < r/2 < v_+ with the harmonic numbers at those indices.
struct HarmonicPair {
  long v_minus;
  long v_plus;
  Rational h_minus;
  Rational h_plus;
};

// H_n = 1 + 1/2 + ... + 1/n, memoized.
Rational harmonic(long n);
HarmonicPair bracket_pair(long r);

// C(n, k) = n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0.
Integer binom_int(long n, long k);
inline Rational binom(long n, long k) { return Rational(binom_int(n, k)); }
Integer factorial(long n);

// S_l = sum_{i=0}^{p-1} i^l with 0^0 = 1.
Rational power_sum_S(long p, long l);

}  // namespace ssred
