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

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>

#include "ssred/classifier.hpp"
#include "ssred/errors.hpp"
#include "test_support.hpp"

using namespace ssred;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

Classification run(long p, long k, const std::string& L) { return classify({p, k, QuadElt::parse(L, p)}); }

::testing::AssertionResult matches(const Classification& c, const nlohmann::json& x) {
  std::string why = ssred::testing::golden_mismatch(c, x);
  if (why.empty()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << why;
}

}  // namespace

TEST(Classifier, ShiftedNu) {
  EXPECT_EQ(shifted_L({7, 5, QuadElt(7)}), QuadElt(7, frac(-5, 2), 0));
  EXPECT_EQ(shifted_nu({7, 5, QuadElt(7)}), HalfInt::integer(0));
  EXPECT_TRUE(shifted_nu({5, 4, QuadElt(5, frac(3, 2), 0)}).is_infinite());
  EXPECT_EQ(shifted_nu({5, 3, QuadElt(5, 1, 1)}), HalfInt::from_twice(1));
}

TEST(Classifier, SelectCaseExamples) {
  EXPECT_EQ(select_case(3, HalfInt::integer(0)), (CasePoint{CaseKind::Interval, 2}));
  EXPECT_EQ(select_case(2, HalfInt::integer(0)), (CasePoint{CaseKind::Boundary, 1}));
  EXPECT_EQ(select_case(3, HalfInt::integer(2)), (CasePoint{CaseKind::SelfDualTerminal, 2}));
  EXPECT_EQ(select_case(4, HalfInt::integer(1)), (CasePoint{CaseKind::EvenLastInterval, 3}));
  EXPECT_EQ(select_case(4, HalfInt::integer(-10)), (CasePoint{CaseKind::Interval, 1}));
  EXPECT_EQ(select_case(5, HalfInt::infinity()), (CasePoint{CaseKind::SelfDualTerminal, 3}));
}

// Each nu lands in exactly one region of the case table, read literally.
TEST(Classifier, PartitionCoversEveryNu) {
  for (long r = 1; r <= 12; ++r) {
    std::vector<HalfInt> nus{HalfInt::infinity()};
    for (long t = -2 * r; t <= 4; ++t) nus.push_back(HalfInt::from_twice(t));
    for (const HalfInt& nu : nus) {
      int hits = 0;
      CasePoint expect = ssred::testing::case_by_intervals(r, nu, hits);
      ASSERT_EQ(hits, 1) << "r=" << r << " nu=" << nu;
      EXPECT_EQ(select_case(r, nu), expect) << "r=" << r << " nu=" << nu;
    }
  }
}

TEST(Classifier, LambdaBoundary) {
  EXPECT_EQ(lambda_boundary({5, 4, QuadElt(5, frac(1, 2), 0)}, 1).value(), 2);
  // -4 (1 - 7 (H_- + H_+)) mod 7.
  EXPECT_EQ(lambda_boundary({7, 6, QuadElt(7, frac(1, 7), 0)}, 1).value(), 3);
  try {
    lambda_boundary({7, 5, QuadElt(7)}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAUnit);
  }
}

TEST(Classifier, SelfDualConstants) {
  SelfDualConstants c = selfdual_constants({5, 3, QuadElt(5, 1, 1)});
  EXPECT_EQ(c.trace.value(), 4);
  EXPECT_FALSE(c.lambda.in_base_field());
  EXPECT_EQ(c.lambda * c.lambda_inv, Fp2Elt(5, 1));
  SelfDualConstants z = selfdual_constants({5, 3, QuadElt(5, 1, 5)});
  EXPECT_EQ(z.trace.value(), 0);
  EXPECT_EQ(z.lambda * z.lambda, Fp2Elt(5, -1));
  // Trace 2: M = -2 sqrt(5) / (-1) needs M = 2 sqrt(5) up to the sign (-1)^1 * 1 * C(1,1).
  SelfDualConstants two = selfdual_constants({5, 3, QuadElt(5, 1, -2)});
  EXPECT_EQ(two.trace.value(), 2);
  EXPECT_EQ(two.lambda, Fp2Elt(5, 1));
  EXPECT_EQ(two.lambda_inv, Fp2Elt(5, 1));
}

TEST(Classifier, Examples) {
  Classification a = run(7, 5, "0");
  EXPECT_EQ(std::get<Irreducible>(a.result).c, 10);
  EXPECT_EQ(describe(a.result), "ind(w2^10)");
  Classification b = run(5, 4, "3/2");
  EXPECT_EQ(b.point, (CasePoint{CaseKind::EvenLastInterval, 2}));
  EXPECT_EQ(std::get<Irreducible>(b.result).c, 7);
  Classification c = run(5, 4, "1/2");
  const auto& s = std::get<ReducibleSplit>(c.result);
  EXPECT_EQ(s.lambda, Fp2Elt(5, 2));
  EXPECT_EQ(s.lambda_inv, Fp2Elt(5, 3));
  EXPECT_EQ(s.e1, 2);
  EXPECT_EQ(s.e2, 1);
}

TEST(Classifier, HandWalkGoldens) {
  std::ifstream in(SSRED_GOLDEN);
  ASSERT_TRUE(in) << SSRED_GOLDEN;
  auto records = nlohmann::json::parse(in);
  ASSERT_GT(records.size(), 1000u);
  for (const auto& x : records) {
    long p = x["p"];
    EXPECT_TRUE(matches(run(p, x["k"], x["L"]), x)) << x.dump();
  }
}

TEST(Classifier, InvariantsOnRandomInputs) {
  std::mt19937_64 rng(2026);
  const long primes[] = {5, 7, 11, 13};
  for (int t = 0; t < 1000; ++t) {
    long p = primes[rng() % 4];
    long k = 3 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
    auto part = [&] {
      long e = static_cast<long>(rng() % 7) - 4;
      return Rational(static_cast<long>(rng() % 40) - 20) * pow(Rational(p), e);
    };
    ClassifierInput in{p, k, QuadElt(p, part() + shift_constant(k - 2), part())};
    Classification c = classify(in);
    long r = k - 2;
    EXPECT_EQ(determinant_exponent(c.result, p), (r + 1) % (p - 1));
    if (auto* s = std::get_if<ReducibleSplit>(&c.result)) EXPECT_EQ(s->lambda * s->lambda_inv, Fp2Elt(p, 1));
    if (auto* d = std::get_if<SelfDual>(&c.result)) {
      EXPECT_EQ(d->lambda * d->lambda_inv, Fp2Elt(p, 1));
      EXPECT_EQ(d->lambda + d->lambda_inv, Fp2Elt(d->trace));
    }
    if (auto* i = std::get_if<Irreducible>(&c.result)) EXPECT_NE(i->c % (p + 1), 0);
    // Perturbing M far below its leading term changes nothing.
    if (!c.nu.is_infinite()) {
      long m = c.nu.floor() + 3;
      ClassifierInput moved{p, k, in.L + pow(Rational(p), m) * Rational(static_cast<long>(1 + rng() % 9))};
      EXPECT_EQ(describe(classify(moved).result), describe(c.result));
    }
  }
}

TEST(Classifier, InputValidation) {
  for (auto [p, k] : std::vector<std::pair<long, long>>{{4, 3}, {3, 3}, {7, 2}, {7, 9}}) {
    try {
      classify({p, k, QuadElt(p >= 5 && is_prime(p) ? p : 5)});
      ADD_FAILURE() << p << " " << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidArgument);
    }
  }
  try {
    classify({7, 5, QuadElt(5)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}
