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

#include <compare>
#include <ostream>
#include <string>

#include "ssred/rational.hpp"

namespace ssred {

// Element of (1/2)Z together with +infinity.
class HalfInt {
 public:
  HalfInt() = default;
  static HalfInt infinity() { HalfInt h; h.inf_ = true; return h; }
  static HalfInt integer(long v) { return from_twice(2 * v); }
  static HalfInt from_twice(long t) { HalfInt h; h.twice_ = t; return h; }

  bool is_infinite() const { return inf_; }
  bool is_integer() const { return !inf_ && twice_ % 2 == 0; }
  long twice() const;
  long floor() const;

  // "inf", "3", "-1/2"
  std::string str() const;

  friend HalfInt operator+(HalfInt a, HalfInt b) {
    if (a.inf_ || b.inf_) return infinity();
    return from_twice(a.twice_ + b.twice_);
  }
  friend bool operator==(const HalfInt& a, const HalfInt& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.twice_ == b.twice_);
  }
  friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.twice_ <=> b.twice_;
  }

 private:
  bool inf_ = false;
  long twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.str(); }

bool is_prime(long n);
// Throws InvalidArgument unless p is a prime in [min, 2^31).
void require_prime(long p, long min = 5);

Integer ipow(long p, long e);
// Exponent of p in n; n must be nonzero.
long vp_integer(const Integer& n, long p);
HalfInt vp_rational(const Rational& x, long p);

}  // namespace ssred
