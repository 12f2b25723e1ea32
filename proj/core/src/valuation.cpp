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
#include "ssred/valuation.hpp"

#include "ssred/errors.hpp"

namespace ssred {

long HalfInt::twice() const {
  if (inf_) throw Error(Errc::InvalidArgument, "infinite valuation has no finite value");
  return twice_;
}

long HalfInt::floor() const {
  long t = twice();
  return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

std::string HalfInt::str() const {
  if (inf_) return "inf";
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(long p, long min) {
  if (p < min || p >= (1L << 31) || !is_prime(p))
    throw Error(Errc::InvalidArgument,
                "p = " + std::to_string(p) + " is not a prime >= " + std::to_string(min));
}

Integer ipow(long p, long e) {
  if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long vp_integer(const Integer& n, long p) {
  if (n == 0) throw Error(Errc::InvalidArgument, "valuation of zero");
  Integer m = n, pp = p;
  return static_cast<long>(mpz_remove(m.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

HalfInt vp_rational(const Rational& x, long p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "bad prime");
  if (x.is_zero()) return HalfInt::infinity();
  return HalfInt::integer(vp_integer(x.num(), p) - vp_integer(x.den(), p));
}

}  // namespace ssred
