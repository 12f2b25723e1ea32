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
#include <vector>

#include "ssred/rational.hpp"

namespace ssred {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly monomial(const Rational& c, long degree);
  // (z - a)^n expanded.
  static Poly shifted_power(const Rational& a, long n);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& z) const;
  Poly derivative() const;
  // Quotient and remainder on division by (z - a).
  std::pair<Poly, Rational> divide_linear(const Rational& a) const;
  std::string str(const std::string& var = "z") const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace ssred
