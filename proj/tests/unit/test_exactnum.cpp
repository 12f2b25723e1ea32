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
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ssred/errors.hpp"
#include "ssred/finite_field.hpp"
#include "ssred/padic.hpp"
#include "ssred/quad.hpp"
#include "ssred/rational.hpp"
#include "ssred/valuation.hpp"

using namespace ssred;

namespace {

// Brute-force oracle: x with den * x = num mod p.
long naive_residue(long num, long den, long p) {
  for (long x = 0; x < p; ++x)
    if (((den * x - num) % p + p) % p == 0) return x;
  return -1;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::CheckFailed;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational x(Integer(6), Integer(-4));
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 2);
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(Integer(-5), Integer(2)));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { Rational::parse("x"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { Rational(0).inverse(); }), Errc::InvalidArgument);
}

TEST(Rational, Pow) {
  EXPECT_EQ(pow(Rational(Integer(2), Integer(3)), 3), Rational(Integer(8), Integer(27)));
  EXPECT_EQ(pow(Rational(5), -2), Rational(Integer(1), Integer(25)));
  EXPECT_EQ(pow(Rational(9), 0), Rational(1));
}

TEST(Valuation, Rational) {
  EXPECT_EQ(vp_rational(Rational(Integer(1), Integer(6)), 5), HalfInt::integer(0));
  EXPECT_TRUE(vp_rational(Rational(0), 7).is_infinite());
  EXPECT_EQ(vp_rational(Rational(Integer(50), Integer(3)), 5), HalfInt::integer(2));
  EXPECT_EQ(vp_rational(Rational(Integer(3), Integer(125)), 5), HalfInt::integer(-3));
  EXPECT_EQ(vp_rational(Rational(5), 5), HalfInt::integer(1));
}

TEST(Valuation, HalfIntOrderAndText) {
  EXPECT_LT(HalfInt::from_twice(-1), HalfInt::integer(0));
  EXPECT_LT(HalfInt::integer(100), HalfInt::infinity());
  EXPECT_EQ(HalfInt::from_twice(-1).str(), "-1/2");
  EXPECT_EQ(HalfInt::from_twice(-3).floor(), -2);
  EXPECT_EQ(HalfInt::infinity().str(), "inf");
}

TEST(Valuation, Primes) {
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(code_of([] { require_prime(9); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { require_prime(3); }), Errc::InvalidArgument);
}

TEST(Quad, Valuation) {
  EXPECT_EQ(vp_quad(QuadElt(5, 0, 1)), HalfInt::from_twice(1));
  EXPECT_EQ(vp_quad(QuadElt(5, 5, 2)), HalfInt::from_twice(1));
  EXPECT_EQ(vp_quad(QuadElt(7, 3, 0)), HalfInt::integer(0));
  EXPECT_TRUE(vp_quad(QuadElt(7)).is_infinite());
}

TEST(Quad, Residue) {
  EXPECT_EQ(residue_mod_pi(QuadElt(5, 3, 4)).value(), 3);
  EXPECT_EQ(residue_mod_pi(QuadElt(5, 0, 1)).value(), 0);
  EXPECT_EQ(residue_mod_pi(QuadElt(7, Rational(Integer(-5), Integer(2)), 0)).value(), naive_residue(-5, 2, 7));
  EXPECT_EQ(code_of([] { residue_mod_pi(QuadElt(5, Rational(Integer(1), Integer(5)), 0)); }),
            Errc::NegativeValuation);
  EXPECT_EQ(code_of([] { residue_mod_pi(QuadElt(5, 0, Rational(Integer(1), Integer(5)))); }),
            Errc::NegativeValuation);
}

TEST(Quad, Parse) {
  EXPECT_EQ(QuadElt::parse("0", 7), QuadElt(7));
  EXPECT_EQ(QuadElt::parse(" 1 + 1 * sqrt(5)", 5), QuadElt(5, 1, 1));
  EXPECT_EQ(QuadElt::parse("-3/2-2/5*sqrt(5)", 5),
            QuadElt(5, Rational(Integer(-3), Integer(2)), Rational(Integer(-2), Integer(5))));
  EXPECT_EQ(QuadElt::parse("4*sqrt(11)", 11), QuadElt(11, 0, 4));
  EXPECT_EQ(code_of([] { QuadElt::parse("1+sqrt(7)", 5); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { QuadElt::parse("1+", 5); }), Errc::ParseError);
}

TEST(Quad, Arithmetic) {
  QuadElt s(7, 0, 1);
  EXPECT_EQ(s * s, QuadElt(7, 7, 0));
  EXPECT_EQ(QuadElt::sqrt_p_power(7, 3), QuadElt(7, 0, 7));
  EXPECT_EQ(QuadElt::sqrt_p_power(7, -1), QuadElt(7, 0, Rational(Integer(1), Integer(7))));
  QuadElt x(7, 2, 3);
  EXPECT_EQ(x * x.inverse(), QuadElt(7, 1, 0));
}

TEST(Quad, ValuationMultiplicativeAndResidueHomomorphism) {
  std::mt19937_64 rng(11);
  auto rnd = [&](long p) {
    auto part = [&] {
      long n = static_cast<long>(rng() % 41) - 20;
      long d = static_cast<long>(rng() % 3 == 0 ? p : 1) * static_cast<long>(1 + rng() % 6);
      return Rational(Integer(n), Integer(d));
    };
    return QuadElt(p, part(), part());
  };
  for (long p : {5L, 7L, 11L}) {
    for (int t = 0; t < 300; ++t) {
      QuadElt x = rnd(p), y = rnd(p);
      EXPECT_EQ(vp_quad(x * y), vp_quad(x) + vp_quad(y));
      if (vp_quad(x) >= HalfInt::integer(0) && vp_quad(y) >= HalfInt::integer(0)) {
        EXPECT_EQ(residue_mod_pi(x + y), residue_mod_pi(x) + residue_mod_pi(y));
        EXPECT_EQ(residue_mod_pi(x * y), residue_mod_pi(x) * residue_mod_pi(y));
      }
    }
  }
}

TEST(FiniteField, Basics) {
  EXPECT_EQ(FpElt(5, -1).value(), 4);
  EXPECT_EQ(FpElt(7, 3).inverse().value(), 5);
  EXPECT_EQ(smallest_nonresidue(5), 2);
  EXPECT_EQ(smallest_nonresidue(7), 3);
  for (long p : {5L, 7L, 11L, 13L})
    for (long a = 1; a < p; ++a) {
      auto s = FpElt(p, a).sqrt();
      bool square = false;
      for (long x = 1; x < p; ++x) square |= x * x % p == a;
      EXPECT_EQ(s.has_value(), square);
      if (s) EXPECT_EQ((*s * *s).value(), a);
    }
}

TEST(FiniteField, Fp2Field) {
  for (long p : {5L, 7L}) {
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        Fp2Elt x(p, a, b);
        if (x.is_zero()) continue;
        EXPECT_EQ(x * x.inverse(), Fp2Elt(p, 1));
        EXPECT_EQ(x.pow(p * p - 1), Fp2Elt(p, 1));
      }
  }
}

namespace {

// Every root of X^2 - cX + 1 in F_{p^2}, found by enumeration.
std::multiset<std::pair<long, long>> brute_roots(long c, long p) {
  std::multiset<std::pair<long, long>> out;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      Fp2Elt x(p, a, b);
      Fp2Elt v = x * x - Fp2Elt(p, c) * x + Fp2Elt(p, 1);
      if (v.is_zero()) out.insert({a, b});
    }
  if (out.size() == 1) out.insert(*out.begin());
  return out;
}

}  // namespace

TEST(FiniteField, QuadraticSolverExhaustive) {
  for (long p : {5L, 7L, 11L}) {
    for (long c = 0; c < p; ++c) {
      auto [l1, l2] = fp2_solve_monic_quadratic(FpElt(p, c));
      EXPECT_EQ(l1 * l2, Fp2Elt(p, 1));
      EXPECT_EQ(l1 + l2, Fp2Elt(p, c));
      std::multiset<std::pair<long, long>> got{{l1.c0().value(), l1.c1().value()},
                                               {l2.c0().value(), l2.c1().value()}};
      EXPECT_EQ(got, brute_roots(c, p)) << "p=" << p << " c=" << c;
      bool split = (c * c - 4) % p == 0 || FpElt(p, c * c - 4).is_square();
      EXPECT_EQ(l1.in_base_field(), split);
    }
  }
}

TEST(FiniteField, QuadraticSolverExamples) {
  auto [a, b] = fp2_solve_monic_quadratic(FpElt(5, 2));
  EXPECT_EQ(a, Fp2Elt(5, 1));
  EXPECT_EQ(b, Fp2Elt(5, 1));
  auto [c, d] = fp2_solve_monic_quadratic(FpElt(7, 0));
  EXPECT_EQ(c * c, Fp2Elt(7, -1));
  EXPECT_FALSE(c.in_base_field());
  auto [e, f] = fp2_solve_monic_quadratic(FpElt(7, 3));
  EXPECT_FALSE(e.in_base_field());
  EXPECT_EQ((e + f).c0().value(), 3);
}

TEST(Padic, Teichmuller) {
  EXPECT_EQ(teichmuller(1, 5, 10).residue(10), 1);
  EXPECT_TRUE(teichmuller(0, 7, 3).is_zero());
  // Oracle: naive iteration a -> a^p mod 25 until it stabilizes.
  long x = 2;
  for (int i = 0; i < 10; ++i) {
    long y = 1;
    for (int j = 0; j < 5; ++j) y = y * x % 25;
    x = y;
  }
  EXPECT_EQ(teichmuller(2, 5, 2).residue(2), x);
  EXPECT_EQ(x, 7);
  for (long p : {5L, 7L, 11L, 13L})
    for (long a = 1; a < p; ++a) {
      PadicTrunc t = teichmuller(a, p, 20);
      EXPECT_EQ(t.residue(1), a);
      EXPECT_EQ(t.pow(p - 1).residue(20), 1);
    }
}

TEST(Padic, FromRational) {
  PadicTrunc x = PadicTrunc::from_rational(5, Rational(Integer(50), Integer(3)), 8);
  EXPECT_EQ(x.valuation(), 2);
  EXPECT_EQ(x.unit() * 3 % ipow(5, 8), 2);
  EXPECT_EQ(rational_mod(Rational(Integer(1), Integer(2)), 7), 4);
  EXPECT_EQ(inverse_mod(3, 7), 5);
}
