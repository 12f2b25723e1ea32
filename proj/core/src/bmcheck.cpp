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
#include "ssred/bmcheck.hpp"

#include <random>

#include "ssred/classifier.hpp"
#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"

namespace ssred {

namespace {

Rational sgn_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_even_k(long p, long k) {
  require_prime(p);
  if (k % 2 != 0 || k < 4 || k > p - 1)
    throw Error(Errc::InvalidArgument,
                "k = " + std::to_string(k) + " must be even in [4, " + std::to_string(p - 1) + "]");
}

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::CheckFailed, what); }

std::string tag(long p, long k) { return "p=" + std::to_string(p) + " k=" + std::to_string(k); }

}  // namespace

void BMParams::validate() const {
  require_even_k(p, k);
  long i = nu_int + (k - 2) / 2;
  if (nu_int > 0 || i < 1)
    throw Error(Errc::InvalidArgument, "nu = " + std::to_string(nu_int) + " is not a boundary value");
  if (L.p() != p) throw Error(Errc::InvalidArgument, "L is not over sqrt(p)");
}

QuadElt bm_b(const BMParams& params) {
  params.validate();
  long h = params.k / 2, nu = params.nu_int;
  Rational coeff = sgn_pow(h - nu) * Rational(h - nu) * binom(h - 1 - nu, 1 - 2 * nu);
  return coeff * (-(params.L * pow(Rational(params.p), -nu)));
}

QuadElt bm_a(long p, long k, const QuadElt& L) {
  require_even_k(p, k);
  long h = k / 2;
  QuadElt inner = (-L + Rational(2) * harmonic(h - 1)) * Rational(h * (h - 1)) - Rational(1);
  return sgn_pow(h) * inner;
}

bool check_b_identity(long p, long k, long i) {
  require_even_k(p, k);
  long r = k - 2;
  if (i < 1 || 2 * i >= r)
    throw Error(Errc::InvalidArgument, "i = " + std::to_string(i) + " must satisfy 1 <= i < r/2");
  Rational scale = lambda_prefactor(r, i) * pow(Rational(p), r / 2 - i);
  // Both sides are affine in L, so two evaluations certify the identity.
  for (long l : {0L, 1L}) {
    QuadElt L(p, l);
    QuadElt lhs = bm_b({p, k, i - r / 2, L});
    QuadElt rhs = scale * L;
    if (!(lhs == rhs))
      fail(tag(p, k) + " i=" + std::to_string(i) + " L=" + std::to_string(l) + ": b = " +
           lhs.str() + " but expected " + rhs.str());
  }
  // Replacing L by L - H_- - H_+ changes the value by a multiple of p.
  HalfInt v = vp_rational(scale * shift_constant(r), p);
  if (v < HalfInt::integer(1))
    fail(tag(p, k) + " i=" + std::to_string(i) + ": shift term has valuation " + v.str());
  return true;
}

bool check_a_identity(long p, long k) {
  require_even_k(p, k);
  long r = k - 2;
  for (long l : {0L, 1L}) {
    ClassifierInput in{p, k, QuadElt(p, l)};
    QuadElt lhs = bm_a(p, k, in.L);
    QuadElt rhs = sgn_pow(r / 2) * Rational((r / 2) * (r / 2 + 1)) * shifted_L(in);
    if (!(lhs == rhs))
      fail(tag(p, k) + " L=" + std::to_string(l) + ": a = " + lhs.str() + " but expected " + rhs.str());
    QuadElt lam = lambda_argument(in, r / 2);
    if (!(lam == rhs))
      fail(tag(p, k) + ": lambda argument " + lam.str() + " differs from " + rhs.str());
  }
  return true;
}

bool check_unit_case(long p, long k, const std::vector<QuadElt>& samples) {
  require_even_k(p, k);
  long r = k - 2;
  Rational centre = Rational(2) * harmonic(r / 2);
  FpElt expected(p, (r / 2) % 2 == 0 ? 1 : -1);
  for (const QuadElt& L : samples) {
    if (vp_quad(L - centre) < HalfInt::integer(1))
      throw Error(Errc::InvalidArgument, "sample " + L.str() + " is not within p of 2H_{k/2-1}");
    ClassifierInput in{p, k, L};
    CasePoint cp = select_case(r, shifted_nu(in));
    if (!(cp == CasePoint{CaseKind::Boundary, r / 2}))
      fail(tag(p, k) + " L=" + L.str() + ": not on the boundary i = r/2");
    FpElt lam = lambda_boundary(in, r / 2);
    if (!(lam == expected))
      fail(tag(p, k) + " L=" + L.str() + ": lambda = " + std::to_string(lam.value()) +
           ", expected " + std::to_string(expected.value()));
  }
  return true;
}

std::vector<QuadElt> unit_case_samples(long p, long k, int count, std::uint64_t seed) {
  require_even_k(p, k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  auto integral = [&] {
    long d;
    do d = den(rng);
    while (d % p == 0);
    return Rational(Integer(num(rng)), Integer(d));
  };
  Rational centre = Rational(2) * harmonic(k / 2 - 1);
  std::vector<QuadElt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n)
    out.emplace_back(p, centre + Rational(p) * integral(), Rational(p) * integral());
  return out;
}

bool check_b_lemma(long r, long i) {
  return Rational(r + 1 - i) * binom(r - i, i - 1) == Rational(i) * binom(r + 1 - i, i);
}

}  // namespace ssred
