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

#include <string>

#include "ssred/rational.hpp"

namespace ssred {

inline constexpr int kDefaultPrecision = 64;

// p^valuation * unit, unit known modulo p^precision.
class PadicTrunc {
 public:
  static PadicTrunc zero(long p, int precision = kDefaultPrecision);
  PadicTrunc(long p, long valuation, const Integer& unit, int precision = kDefaultPrecision);
  // x must be nonzero or is mapped to zero(); denominators prime to p are inverted.
  static PadicTrunc from_rational(long p, const Rational& x, int precision = kDefaultPrecision);

  long p() const { return p_; }
  long valuation() const { return valuation_; }
  const Integer& unit() const { return unit_; }
  int precision() const { return precision_; }
  bool is_zero() const { return zero_; }

  // Representative of the value in [0, p^n); requires valuation >= 0.
  Integer residue(int n) const;

  PadicTrunc operator*(const PadicTrunc& o) const;
  PadicTrunc pow(long e) const;
  friend bool operator==(const PadicTrunc& a, const PadicTrunc& b);
  std::string str() const;

 private:
  PadicTrunc() = default;
  long p_ = 0;
  long valuation_ = 0;
  Integer unit_;
  int precision_ = kDefaultPrecision;
  bool zero_ = false;
};

// Inverse of a unit x modulo m.
Integer inverse_mod(const Integer& x, const Integer& m);
// x mod m for rational x whose denominator is prime to m.
Integer rational_mod(const Rational& x, const Integer& m);

// [a] mod p^N: the (p-1)-th root of unity congruent to a, or 0 when p | a.
PadicTrunc teichmuller(const Integer& a, long p, int N = kDefaultPrecision);

}  // namespace ssred
