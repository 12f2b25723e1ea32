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

#include <vector>

#include "ssred/poly.hpp"

namespace ssred {

// Summand F(k, n) = (-1)^k C(n+k, k-1) C(n+1, k+1) C(x+k+1, k+1) as a polynomial in x.
Poly wz_summand(long k, long n);
// Certificate R(k, n) = 2(k-1)(k+1)^2(n+1)(n+2)(2n+3) / ((n-k+1)(n-k+2)); k <= n.
Rational wz_certificate(long k, long n);
// G(k, n) = F(k, n) R(k, n) with the pole at k = n+1 cancelled; valid for 1 <= k <= n+3.
Poly wz_product(long k, long n);
// Left side of the recurrence for the summand at (k, n).
Poly wz_recurrence_lhs(long k, long n);

// The variants with C(n, k-1) in the summand and (n+3) in the certificate.
Poly wz_summand_variant(long k, long n);
Rational wz_certificate_variant(long k, long n);

// Checks for all 1 <= n <= n_max, 1 <= k <= n+2: the polynomial identity
// lhs(k) = G(k+1) - G(k), G = F*R wherever R is defined, evaluation at each x
// sample, endpoints F(n+1, n) = 0 and R(1, n) = 0, the summed recurrence, and
// the harmonic-sum recurrence with inhomogeneity (-1)^(n+1). Throws CheckFailed.
bool wz_certificate_check(long n_max, const std::vector<long>& x_samples);

// True when the variant summand and certificate satisfy the pointwise identity at (k, n).
bool wz_variant_holds(long k, long n);

}  // namespace ssred
