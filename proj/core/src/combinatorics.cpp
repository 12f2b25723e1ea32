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
#include "ssred/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "ssred/errors.hpp"

namespace ssred {

namespace {
std::mutex harmonic_mutex;
std::vector<Rational> harmonic_table{Rational(0)};
}  // namespace

Rational harmonic(long n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "harmonic index must be >= 0");
  std::lock_guard<std::mutex> lock(harmonic_mutex);
  while (static_cast<long>(harmonic_table.size()) <= n) {
    long m = static_cast<long>(harmonic_table.size());
    harmonic_table.push_back(harmonic_table.back() + Rational(1, m));
  }
  return harmonic_table[static_cast<std::size_t>(n)];
}

HarmonicPair bracket_pair(long r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be >= 1");
  long vm = r % 2 ? (r - 1) / 2 : (r - 2) / 2;
  long vp = r % 2 ? (r + 1) / 2 : (r + 2) / 2;
  return {vm, vp, harmonic(vm), harmonic(vp)};
}

Integer binom_int(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0 && k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "factorial of negative");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational power_sum_S(long p, long l) {
  if (l < 0) throw Error(Errc::InvalidArgument, "power sum exponent must be >= 0");
  Integer s = l == 0 ? 1 : 0;
  for (long i = 1; i < p; ++i) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(l));
    s += t;
  }
  return Rational(s);
}

}  // namespace ssred
