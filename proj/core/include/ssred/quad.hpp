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

#include <ostream>
#include <string>
#include <string_view>

#include "ssred/finite_field.hpp"
#include "ssred/rational.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

// a + b*sqrt(p) in Q(sqrt(p)).
class QuadElt {
 public:
  explicit QuadElt(long p, Rational a = 0, Rational b = 0);

  // sqrt(p)^e for any integer e.
  static QuadElt sqrt_p_power(long p, long e);

  // RAT | RAT*sqrt(P) | RAT (+|-) RAT*sqrt(P), whitespace ignored; P must be p.
  static QuadElt parse(std::string_view text, long p);

  long p() const { return p_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadElt inverse() const;
  QuadElt conjugate() const { return QuadElt(p_, a_, -b_); }
  std::string str() const;

  friend QuadElt operator+(const QuadElt& x, const QuadElt& y);
  friend QuadElt operator-(const QuadElt& x, const QuadElt& y);
  friend QuadElt operator*(const QuadElt& x, const QuadElt& y);
  friend QuadElt operator/(const QuadElt& x, const QuadElt& y) { return x * y.inverse(); }
  friend QuadElt operator*(const Rational& s, const QuadElt& x) {
    return QuadElt(x.p_, s * x.a_, s * x.b_);
  }
  friend QuadElt operator*(const QuadElt& x, const Rational& s) { return s * x; }
  friend QuadElt operator+(const QuadElt& x, const Rational& s) {
    return QuadElt(x.p_, x.a_ + s, x.b_);
  }
  friend QuadElt operator-(const QuadElt& x, const Rational& s) {
    return QuadElt(x.p_, x.a_ - s, x.b_);
  }
  QuadElt operator-() const { return QuadElt(p_, -a_, -b_); }
  friend bool operator==(const QuadElt& x, const QuadElt& y) {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  long p_;
  Rational a_, b_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadElt& x) { return os << x.str(); }

HalfInt vp_quad(const QuadElt& x);
// Reduction modulo the uniformizer sqrt(p); throws NegativeValuation if vp_quad(x) < 0.
FpElt residue_mod_pi(const QuadElt& x);

}  // namespace ssred
