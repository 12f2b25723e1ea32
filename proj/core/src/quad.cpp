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
#include "ssred/quad.hpp"

#include <cctype>

#include "ssred/errors.hpp"

namespace ssred {

QuadElt::QuadElt(long p, Rational a, Rational b) : p_(p), a_(std::move(a)), b_(std::move(b)) {
  require_prime(p);
}

QuadElt QuadElt::sqrt_p_power(long p, long e) {
  long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  Rational scale = pow(Rational(p), half);
  return (e - 2 * half == 0) ? QuadElt(p, scale, 0) : QuadElt(p, 0, scale);
}

QuadElt QuadElt::parse(std::string_view text, long p) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&](const std::string& why) {
    return Error(Errc::ParseError, "bad L '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");
  const std::string tag = "*sqrt(";
  auto pos = s.find(tag);
  if (pos == std::string::npos) return QuadElt(p, Rational::parse(s), 0);
  if (s.back() != ')') throw fail("expected ')'");
  std::string radicand = s.substr(pos + tag.size(), s.size() - pos - tag.size() - 1);
  Rational rad = Rational::parse(radicand);
  if (!(rad == Rational(p))) throw fail("only sqrt(" + std::to_string(p) + ") is supported");
  std::string head = s.substr(0, pos);
  // Split head into "RAT" and "(+|-)RAT" at the last sign that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  try {
    if (split == std::string::npos) return QuadElt(p, 0, Rational::parse(head));
    Rational a = Rational::parse(head.substr(0, split));
    std::string coeff = head.substr(split + 1);
    Rational b = Rational::parse(coeff);
    return QuadElt(p, a, head[split] == '-' ? -b : b);
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

namespace {
void same_p(const QuadElt& x, const QuadElt& y) {
  if (x.p() != y.p()) throw Error(Errc::InvalidArgument, "mixed sqrt(p) fields");
}
}  // namespace

QuadElt operator+(const QuadElt& x, const QuadElt& y) {
  same_p(x, y);
  return QuadElt(x.p_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadElt operator-(const QuadElt& x, const QuadElt& y) {
  same_p(x, y);
  return QuadElt(x.p_, x.a_ - y.a_, x.b_ - y.b_);
}

QuadElt operator*(const QuadElt& x, const QuadElt& y) {
  same_p(x, y);
  return QuadElt(x.p_, x.a_ * y.a_ + Rational(x.p_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadElt QuadElt::inverse() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
  Rational norm = a_ * a_ - Rational(p_) * b_ * b_;
  return QuadElt(p_, a_ / norm, -b_ / norm);
}

std::string QuadElt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string rad = "*sqrt(" + std::to_string(p_) + ")";
  if (a_.is_zero()) return b_.str() + rad;
  if (b_.sign() < 0) return a_.str() + " - " + (-b_).str() + rad;
  return a_.str() + " + " + b_.str() + rad;
}

HalfInt vp_quad(const QuadElt& x) {
  HalfInt va = vp_rational(x.a(), x.p());
  HalfInt vb = vp_rational(x.b(), x.p());
  if (!vb.is_infinite()) vb = HalfInt::from_twice(vb.twice() + 1);
  return va < vb ? va : vb;
}

FpElt residue_mod_pi(const QuadElt& x) {
  HalfInt v = vp_quad(x);
  if (v < HalfInt::integer(0))
    throw Error(Errc::NegativeValuation, "residue of " + x.str() + " with valuation " + v.str());
  // v >= 0 forces v(a) >= 0 and v(b) >= 0, so the sqrt(p) term reduces to 0.
  return FpElt::from_rational(x.p(), x.a());
}

}  // namespace ssred
