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

#include <map>
#include <string>
#include <vector>

#include "ssred/padic.hpp"
#include "ssred/poly.hpp"
#include "ssred/quad.hpp"

namespace ssred {

// v*L + l where the rational part l is only known modulo p^precision.
struct LogValue {
  QuadElt value;
  int precision;
};

// log(u) mod p^N for u = 1 mod p, u given modulo p^M with M >= N + log_p(N) + 1.
Integer log_one_unit(const Integer& u, long p, int N);

// log_L(z) = v_p(z) L + log(u), z = p^v [w] u with [w] the Teichmuller factor.
LogValue log_L_eval(const Rational& z, const QuadElt& L, int N = kDefaultPrecision);
// Agreement modulo p^min(precision).
bool congruent(const LogValue& a, const LogValue& b);

// sum_i P_i(z) log_L(z - z_i) + Q(z) + sum_i sum_m c_{i,m} (z - z_i)^(-m).
// The rational part is kept as a polynomial plus principal parts, which is
// closed under d/dz when every log coefficient is a polynomial.
class LogPoly {
 public:
  LogPoly() = default;
  static LogPoly log_term(const Poly& coeff, const Rational& base);
  static LogPoly rational(const Poly& q);
  static LogPoly pole(const Rational& c, const Rational& base, long order);

  const std::map<Rational, Poly>& log_terms() const { return logs_; }
  const Poly& polynomial_part() const { return poly_; }
  const std::map<Rational, std::map<long, Rational>>& poles() const { return poles_; }

  std::string str() const;

  friend LogPoly operator+(const LogPoly& a, const LogPoly& b);
  friend LogPoly operator*(const Rational& s, const LogPoly& a);
  friend LogPoly operator-(const LogPoly& a, const LogPoly& b) { return a + Rational(-1) * b; }
  friend bool operator==(const LogPoly& a, const LogPoly& b) = default;

 private:
  void normalize();
  std::map<Rational, Poly> logs_;
  Poly poly_;
  std::map<Rational, std::map<long, Rational>> poles_;
};

LogPoly formal_derivative(const LogPoly& f);
// d^j/dz^j (z^n log z) = n!/(n-j)! (z^{n-j} log z + (H_n - H_{n-j}) z^{n-j})
bool check_derivative_formula(long n, long j);

// Case 1: [1-p, 1, ..., 1] on Teichmuller nodes; case 2: lambda_0..lambda_n then
// lambda_p = -1 on nodes 0..n, p; case 3: lambda_0..lambda_{p-1} on nodes 0..p-1.
std::vector<Rational> solve_coefficients(int case_no, long p, long n);
// Moment equations (exact, or mod p^N with Teichmuller nodes for case 1) and the
// mod-p congruences. True or throws CheckFailed.
bool check_coefficients(int case_no, long p, long n, int N = 32);

}  // namespace ssred
