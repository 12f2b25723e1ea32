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
// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>

#include "ssred/appendix.hpp"
#include "ssred/bmcheck.hpp"
#include "ssred/classifier.hpp"
#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"
#include "ssred/hecke.hpp"
#include "ssred/identities.hpp"
#include "ssred/padiclog.hpp"
#include "ssred/valuation.hpp"
#include "ssred/wz.hpp"
#include "test_support.hpp"

using namespace ssred;
using ssred::testing::Random;

namespace {

// Records the first failure; later ones are only counted.
struct Check {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

Rational sgn(long e) { return e % 2 ? Rational(-1) : Rational(1); }

const long kPrimes[] = {5, 7, 11, 13};

void appendices(Check& c) {
  for (AppendixId id : kAllAppendices)
    for (long r = appendix_min_r(id); r <= 100; r += 2)
      c.expect(verify_appendix(id, r), std::string(appendix_name(id)) + " r=" + std::to_string(r));
}

void identities(Check& c) {
  const Rational main17[] = {Rational(-3) / Rational(2), Rational(17) / Rational(6), Rational(-43) / Rational(12)};
  for (long n = 1; n <= 3; ++n) {
    auto [l, r] = identity_sides({IdentityName::MAIN17, n});
    c.expect(l == main17[n - 1] && r == main17[n - 1], "MAIN17 value at n=" + std::to_string(n));
  }
  for (IdentityName id : all_identities())
    for (long q : identity_batch(id, 100))
      c.expect(verify_identity({id, q}), std::string(identity_name(id)) + " " + std::to_string(q));
}

void wz(Check& c) {
  std::vector<long> xs{0, 1, 2, 3, 4, 5};
  c.expect(wz_certificate_check(40, xs), "certificate");
  for (long n = 1; n <= 40; ++n) {
    c.expect(wz_summand(n + 1, n).is_zero(), "F(n+1,n) at n=" + std::to_string(n));
    c.expect(wz_certificate(1, n).is_zero(), "R(1,n) at n=" + std::to_string(n));
  }
}

void breuil_mezard(Check& c) {
  for (long p : kPrimes)
    for (long k = 4; k <= p - 1; k += 2) {
      std::string at = " p=" + std::to_string(p) + " k=" + std::to_string(k);
      c.expect(check_a_identity(p, k), "a" + at);
      for (long i = 1; 2 * i < k - 2; ++i) c.expect(check_b_identity(p, k, i), "b i=" + std::to_string(i) + at);
      c.expect(check_unit_case(p, k, unit_case_samples(p, k, 20, static_cast<std::uint64_t>(p * 100 + k))),
               "unit case" + at);
    }
}

void hecke(Check& c) {
  Random rng(5);
  auto T = [](HeckeOp op, const auto& x) { return apply_operator(op, x); };
  for (long p : {5L, 7L})
    for (long s = 0; s < p - 1; ++s)
      for (long t = 0; t < p - 1; ++t) {
        Weight w = Weight::character(s, t);
        bool aligned = (s - t) % (p - 1) == 0;
        std::string at = " p=" + std::to_string(p) + " " + w.str();
        for (int n = 0; n < 100; ++n) {
          ModPVec v = rng.mod_p_vec(p, w);
          ModPVec t12 = T(HeckeOp::T12, v);
          if (aligned) {
            ModPVec t10 = T(HeckeOp::T10, v);
            c.expect(T(HeckeOp::T10, t10) == v, "T10^2" + at);
            c.expect((T(HeckeOp::T12, T(HeckeOp::T10, t12)) + t12).is_zero(), "T12 T10 T12" + at);
            c.expect(T(HeckeOp::Tm10, v) == T(HeckeOp::T10, T(HeckeOp::T12, t10)), "Tm10" + at);
          } else {
            c.expect(T(HeckeOp::Tm10, t12).is_zero(), "Tm10 T12" + at);
            c.expect(T(HeckeOp::T12, T(HeckeOp::Tm10, v)).is_zero(), "T12 Tm10" + at);
          }
          GroupElt g = rng.element(p, 2) * rng.iwahori(p);
          std::vector<HeckeOp> ops{HeckeOp::T12, HeckeOp::Tm10};
          if (aligned) ops.push_back(HeckeOp::T10);
          for (HeckeOp op : ops)
            c.expect(T(op, translate(g, v)) == translate(g, T(op, v)), std::string(hecke_op_name(op)) + " equivariance" + at);
        }
      }
  for (long p : {5L, 7L})
    for (int n = 0; n < 20; ++n) {
      GroupElt g = rng.element(p, 2) * rng.iwahori(p);
      EVec e = rng.e_vec(p, Weight::character(0, 0));
      for (HeckeOp op : {HeckeOp::Up, HeckeOp::Wp})
        c.expect(T(op, translate(g, e)) == translate(g, T(op, e)), std::string(hecke_op_name(op)) + " equivariance");
      EVec s = rng.e_vec(p, Weight::sym(n % 4));
      for (HeckeOp op : {HeckeOp::UpSym, HeckeOp::WpSym})
        c.expect(T(op, translate(g, s)) == translate(g, T(op, s)), std::string(hecke_op_name(op)) + " equivariance");
    }
}

void classifier(Check& c) {
  std::ifstream in(SSRED_GOLDEN);
  c.expect(static_cast<bool>(in), std::string("cannot read ") + SSRED_GOLDEN);
  if (!in) return;
  auto records = nlohmann::json::parse(in);
  int examples = 0;
  for (const auto& x : records) {
    long p = x["p"];
    Classification got = classify({p, x["k"].get<long>(), QuadElt::parse(x["L"].get<std::string>(), p)});
    std::string why = ssred::testing::golden_mismatch(got, x);
    c.expect(why.empty(), "golden " + x.dump() + ": " + why);
    examples += x.value("example", false);
  }
  c.expect(examples == 3, "expected three marked examples");

  for (long p : kPrimes)
    for (long k = 3; k <= p + 1; ++k) {
      long r = k - 2;
      std::vector<HalfInt> nus{HalfInt::infinity()};
      for (long t = -2 * r; t <= 4; ++t) nus.push_back(HalfInt::from_twice(t));
      for (const HalfInt& nu : nus) {
        int hits = 0;
        CasePoint want = ssred::testing::case_by_intervals(r, nu, hits);
        c.expect(hits == 1 && select_case(r, nu) == want, "partition r=" + std::to_string(r) + " nu=" + nu.str());
      }
    }

  Random rng(2026);
  for (int n = 0; n < 1000; ++n) {
    long p = kPrimes[rng.below(4)];
    long k = 3 + rng.below(p - 1);
    auto part = [&] { return Rational(rng.below(40) - 20) * pow(Rational(p), rng.below(7) - 4); };
    ClassifierInput input{p, k, QuadElt(p, part() + shift_constant(k - 2), part())};
    Classification got = classify(input);
    std::string at = " p=" + std::to_string(p) + " k=" + std::to_string(k) + " L=" + input.L.str();
    c.expect(determinant_exponent(got.result, p) == (k - 1) % (p - 1), "determinant" + at);
    if (auto* s = std::get_if<ReducibleSplit>(&got.result))
      c.expect(s->lambda * s->lambda_inv == Fp2Elt(p, 1), "lambda inverse" + at);
    if (auto* d = std::get_if<SelfDual>(&got.result))
      c.expect(d->lambda * d->lambda_inv == Fp2Elt(p, 1), "lambda inverse" + at);
  }
}

void linkage(Check& c) {
  for (long r = 1; r <= 99; r += 2) {
    AppendixSystem sys = build_system(AppendixId::B11, r);
    auto x = solve_affine(sys);
    HarmonicPair h = bracket_pair(r);
    AffineInL want = sgn((r - 1) / 2) * AffineInL{-(h.h_minus + h.h_plus), 1};
    bool found = false;
    for (std::size_t m = 0; m < x.size(); ++m)
      if (sys.subscripts[m] == (r + 1) / 2) found = x[m] == want;
    c.expect(found, "B11 r=" + std::to_string(r));
    // The classifier shifts L by the same constant.
    ClassifierInput in{101, r + 2, QuadElt(101, 3, 1)};
    c.expect(shifted_L(in) == in.L - h.h_minus - h.h_plus, "shift r=" + std::to_string(r));
  }
}

void kernels(Check& c) {
  const int N = 32;
  Random rng(8);
  for (long p : kPrimes) {
    std::string at = " p=" + std::to_string(p);
    Integer m = ipow(p, N);
    for (long a = 1; a < p; ++a) {
      PadicTrunc w = teichmuller(a, p, N);
      c.expect(w.pow(p) == w && w.residue(1) == a && w.pow(p - 1).residue(N) == 1, "Teichmuller a=" + std::to_string(a) + at);
    }
    for (long l = 1; l <= p - 2; ++l)
      c.expect(vp_rational(power_sum_S(p, l), p) >= HalfInt::integer(1), "S_l/p integral l=" + std::to_string(l) + at);
    c.expect(rational_mod(power_sum_S(p, 1) / Rational(p), p) == rational_mod(Rational(-1) / Rational(2), p), "S_1/p" + at);
    c.expect(rational_mod(power_sum_S(p, 2) / Rational(p), p) == rational_mod(Rational(1) / Rational(6), p), "S_2/p" + at);

    QuadElt L(p, rng.below(50) - 25, rng.below(50) - 25);
    c.expect(log_L_eval(Rational(p), L, N).value == L, "log p = L" + at);
    auto random_rational = [&] {
      Rational x(rng.below(2000) - 1000);
      if (x.is_zero()) x = 1;
      return x / Rational(1 + rng.below(999)) * pow(Rational(p), rng.below(5) - 2);
    };
    for (int n = 0; n < 50; ++n) {
      Rational x = random_rational(), y = random_rational();
      LogValue lx = log_L_eval(x, L, N), ly = log_L_eval(y, L, N);
      c.expect(congruent(log_L_eval(x * y, L, N), {lx.value + ly.value, N}), "log(xy)" + at);
    }

    c.expect(check_coefficients(1, p, 0, N), "coefficients case 1" + at);
    for (long n = 1; n <= p - 1; ++n) c.expect(check_coefficients(2, p, n, N), "coefficients case 2" + at);
    c.expect(check_coefficients(3, p, 0, N), "coefficients case 3" + at);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {"appendix-systems", appendices}, {"identity-catalog", identities}, {"wz-certificate", wz},
      {"breuil-mezard", breuil_mezard}, {"hecke-relations", hecke},        {"classifier-structure", classifier},
      {"linkage", linkage},             {"number-theory-kernels", kernels},
  };
  int failed = 0, index = 0;
  for (const Criterion& cr : criteria) {
    ++index;
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = c.failures == 0;
    failed += !ok;
    std::printf("%s %d %-22s %7.2fs  %ld checks", ok ? "PASS" : "FAIL", index, cr.name, secs, c.checks);
    if (!ok) std::printf(", %ld failed, first: %s", c.failures, c.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
