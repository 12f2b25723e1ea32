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

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "ssred/rational.hpp"

namespace ssred {

class FpElt {
 public:
  FpElt(long p, long v);
  // x must have non-negative p-adic valuation.
  static FpElt from_rational(long p, const Rational& x);

  long p() const { return p_; }
  long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FpElt inverse() const;
  FpElt pow(long e) const;
  bool is_square() const;
  // Square root with the smaller representative, if one exists.
  std::optional<FpElt> sqrt() const;

  friend FpElt operator+(const FpElt& a, const FpElt& b);
  friend FpElt operator-(const FpElt& a, const FpElt& b);
  friend FpElt operator*(const FpElt& a, const FpElt& b);
  friend FpElt operator/(const FpElt& a, const FpElt& b) { return a * b.inverse(); }
  FpElt operator-() const { return FpElt(p_, -v_); }
  friend bool operator==(const FpElt& a, const FpElt& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

 private:
  long p_;
  long v_;
};

inline std::ostream& operator<<(std::ostream& os, const FpElt& x) { return os << x.value(); }

long smallest_nonresidue(long p);

// c0 + c1*t in F_p[t]/(t^2 - d), d the smallest positive non-residue.
class Fp2Elt {
 public:
  Fp2Elt(long p, long c0, long c1 = 0);
  explicit Fp2Elt(const FpElt& x) : Fp2Elt(x.p(), x.value(), 0) {}

  long p() const { return c0_.p(); }
  const FpElt& c0() const { return c0_; }
  const FpElt& c1() const { return c1_; }
  const FpElt& nonresidue() const { return d_; }
  bool in_base_field() const { return c1_.is_zero(); }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  Fp2Elt inverse() const;
  Fp2Elt pow(long e) const;
  std::string str() const;

  friend Fp2Elt operator+(const Fp2Elt& a, const Fp2Elt& b);
  friend Fp2Elt operator-(const Fp2Elt& a, const Fp2Elt& b);
  friend Fp2Elt operator*(const Fp2Elt& a, const Fp2Elt& b);
  friend bool operator==(const Fp2Elt& a, const Fp2Elt& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

 private:
  Fp2Elt(FpElt c0, FpElt c1, FpElt d) : c0_(c0), c1_(c1), d_(d) {}
  FpElt c0_, c1_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp2Elt& x) { return os << x.str(); }

// Roots (lambda, lambda^-1) of X^2 - cX + 1 over F_{p^2}.
std::pair<Fp2Elt, Fp2Elt> fp2_solve_monic_quadratic(const FpElt& c);

}  // namespace ssred
