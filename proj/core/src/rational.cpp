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
#include "ssred/rational.hpp"

#include <cctype>

#include "ssred/errors.hpp"

namespace ssred {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw Error(Errc::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(Errc::ParseError, "bad rational '" + std::string(whole) + "'");
  Integer v(std::string(s.substr(i)), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  std::string_view sv(s);
  Integer den = parse_integer(sv.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(sv.substr(0, slash), text), den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

}  // namespace ssred
