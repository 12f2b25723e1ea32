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
#include "ssred/poly.hpp"

#include "ssred/combinatorics.hpp"

namespace ssred {

Poly::Poly(const Rational& c) : c_{c} { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, long degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::shifted_power(const Rational& a, long n) {
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    Rational t = binom(n, i) * pow(-a, n - i);
    v[static_cast<std::size_t>(i)] = t;
  }
  return Poly(std::move(v));
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return Poly(std::move(v));
}

std::pair<Poly, Rational> Poly::divide_linear(const Rational& a) const {
  if (c_.empty()) return {Poly(), 0};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry = carry * a + c_[i];
    if (i > 0) {
      q[i - 1] = carry;
    }
  }
  return {Poly(std::move(q)), carry};
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].str() + ")";
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] += a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rational> v;
  for (const auto& c : c_) v.push_back(-c);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

}  // namespace ssred
