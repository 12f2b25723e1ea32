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
#include "ssred/padic.hpp"

#include "ssred/errors.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(Errc::NotAUnit, x.get_str() + " is not invertible mod " + m.get_str());
  return r;
}

Integer rational_mod(const Rational& x, const Integer& m) {
  Integer n = x.num() % m;
  if (n < 0) n += m;
  if (x.den() == 1) return n;
  Integer r = n * inverse_mod(x.den(), m);
  return Integer(r % m);
}

PadicTrunc PadicTrunc::zero(long p, int precision) {
  PadicTrunc z;
  z.p_ = p;
  z.precision_ = precision;
  z.zero_ = true;
  z.unit_ = 0;
  return z;
}

PadicTrunc::PadicTrunc(long p, long valuation, const Integer& unit, int precision)
    : p_(p), valuation_(valuation), precision_(precision) {
  if (precision < 1) throw Error(Errc::InvalidArgument, "precision must be >= 1");
  Integer m = ipow(p, precision);
  unit_ = unit % m;
  if (unit_ < 0) unit_ += m;
  if (unit_ % p == 0) throw Error(Errc::NotAUnit, "unit part divisible by p");
}

PadicTrunc PadicTrunc::from_rational(long p, const Rational& x, int precision) {
  if (x.is_zero()) return zero(p, precision);
  long v = vp_integer(x.num(), p) - vp_integer(x.den(), p);
  Rational u = x / ssred::pow(Rational(p), v);
  return PadicTrunc(p, v, rational_mod(u, ipow(p, precision)), precision);
}

Integer PadicTrunc::residue(int n) const {
  if (zero_) return 0;
  if (valuation_ < 0) throw Error(Errc::NegativeValuation, "residue of non-integral p-adic");
  Integer m = ipow(p_, n);
  Integer r = ipow(p_, valuation_) * unit_;
  return Integer(r % m);
}

PadicTrunc PadicTrunc::operator*(const PadicTrunc& o) const {
  int n = std::min(precision_, o.precision_);
  if (zero_ || o.zero_) return zero(p_, n);
  return PadicTrunc(p_, valuation_ + o.valuation_, unit_ * o.unit_, n);
}

PadicTrunc PadicTrunc::pow(long e) const {
  if (zero_) {
    if (e == 0) return PadicTrunc(p_, 0, 1, precision_);
    return *this;
  }
  Integer m = ipow(p_, precision_), u = unit_;
  long k = e;
  if (e < 0) {
    u = inverse_mod(u, m);
    k = -e;
  }
  Integer r;
  mpz_powm_ui(r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(k), m.get_mpz_t());
  return PadicTrunc(p_, valuation_ * e, r, precision_);
}

bool operator==(const PadicTrunc& a, const PadicTrunc& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.p_ == b.p_ && a.valuation_ == b.valuation_ && a.precision_ == b.precision_ &&
         a.unit_ == b.unit_;
}

std::string PadicTrunc::str() const {
  if (zero_) return "0 (mod " + std::to_string(p_) + "^" + std::to_string(precision_) + ")";
  return std::to_string(p_) + "^" + std::to_string(valuation_) + " * " + unit_.get_str() +
         " (mod " + std::to_string(p_) + "^" + std::to_string(precision_) + ")";
}

PadicTrunc teichmuller(const Integer& a, long p, int N) {
  require_prime(p, 2);
  Integer m = ipow(p, N), pp = p;
  Integer x = a % m;
  if (x < 0) x += m;
  if (x % p == 0) return PadicTrunc::zero(p, N);
  // x -> x^p gains one digit per step.
  for (;;) {
    Integer y;
    mpz_powm(y.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t(), m.get_mpz_t());
    if (y == x) break;
    x = y;
  }
  return PadicTrunc(p, 0, x, N);
}

}  // namespace ssred
