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
#include <vector>

#include "ssred/rational.hpp"

namespace ssred {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

// Solves A X = B for square invertible A with fraction-free (Bareiss)
// elimination on a row-scaled integer copy. Throws Singular.
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b);

// alpha + beta*L with L symbolic.
struct AffineInL {
  Rational c0;
  Rational c1;

  static AffineInL constant(const Rational& c) { return {c, 0}; }
  static AffineInL L() { return {0, 1}; }
  std::string str() const;

  friend AffineInL operator+(const AffineInL& a, const AffineInL& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend AffineInL operator-(const AffineInL& a, const AffineInL& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  friend AffineInL operator*(const Rational& s, const AffineInL& a) { return {s * a.c0, s * a.c1}; }
  AffineInL operator-() const { return {-c0, -c1}; }
  friend bool operator==(const AffineInL& a, const AffineInL& b) = default;
};

inline std::ostream& operator<<(std::ostream& os, const AffineInL& a) { return os << a.str(); }

// Solves with one right-hand column for the constant parts and one for the L parts.
std::vector<AffineInL> solve_affine(const RatMatrix& a, const std::vector<AffineInL>& rhs);
// A x - rhs, component-wise.
std::vector<AffineInL> residual(const RatMatrix& a, const std::vector<AffineInL>& x,
                                const std::vector<AffineInL>& rhs);

}  // namespace ssred
