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
#include "ssred/classifier.hpp"

#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"

namespace ssred {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void ClassifierInput::validate() const {
  require_prime(p);
  if (k < 3 || k > p + 1)
    throw Error(Errc::InvalidArgument,
                "k = " + std::to_string(k) + " outside [3, " + std::to_string(p + 1) + "]");
  if (L.p() != p) throw Error(Errc::InvalidArgument, "L is not over sqrt(" + std::to_string(p) + ")");
}

const char* case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Interval: return "interval";
    case CaseKind::Boundary: return "boundary";
    case CaseKind::SelfDualTerminal: return "self_dual_terminal";
    case CaseKind::EvenLastInterval: return "even_last_interval";
  }
  return "?";
}

Rational shift_constant(long r) {
  HarmonicPair hp = bracket_pair(r);
  return hp.h_minus + hp.h_plus;
}

QuadElt shifted_L(const ClassifierInput& in) { return in.L - shift_constant(in.r()); }

HalfInt shifted_nu(const ClassifierInput& in) { return vp_quad(shifted_L(in)); }

CasePoint select_case(long r, HalfInt nu) {
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be >= 1");
  bool odd = r % 2 == 1;
  if (odd && (nu.is_infinite() || nu.twice() >= 1)) return {CaseKind::SelfDualTerminal, (r + 1) / 2};
  if (!odd && (nu.is_infinite() || nu.twice() > 0)) return {CaseKind::EvenLastInterval, (r + 2) / 2};
  // Here 2*nu + r <= r, and nu = i - r/2 exactly when 2*nu + r = 2i.
  long t = nu.twice() + r;
  if (t < 2) return {CaseKind::Interval, 1};
  if (t % 2 == 0) return {CaseKind::Boundary, t / 2};
  return {CaseKind::Interval, (t + 1) / 2};
}

Rational lambda_prefactor(long r, long i) {
  Rational v = Rational(i) * binom(r + 1 - i, i);
  return i % 2 ? -v : v;
}

QuadElt lambda_argument(const ClassifierInput& in, long i) {
  long r = in.r();
  return lambda_prefactor(r, i) * QuadElt::sqrt_p_power(in.p, r - 2 * i) * shifted_L(in);
}

FpElt lambda_boundary(const ClassifierInput& in, long i) {
  QuadElt x = lambda_argument(in, i);
  HalfInt v = vp_quad(x);
  if (!(v == HalfInt::integer(0)))
    throw Error(Errc::NotAUnit, "lambda argument " + x.str() + " has valuation " + v.str());
  return residue_mod_pi(x);
}

SelfDualConstants selfdual_constants(const ClassifierInput& in) {
  long r = in.r();
  if (r % 2 == 0) throw Error(Errc::ParityMismatch, "self-dual constants need odd r");
  FpElt trace = residue_mod_pi(lambda_argument(in, (r + 1) / 2));
  auto [l1, l2] = fp2_solve_monic_quadratic(trace);
  return {trace, l1, l2};
}

Classification classify(const ClassifierInput& in) {
  in.validate();
  long p = in.p, r = in.r();
  HalfInt nu = shifted_nu(in);
  CasePoint cp = select_case(r, nu);
  switch (cp.kind) {
    case CaseKind::Interval:
    case CaseKind::EvenLastInterval: {
      long raw = (r + 1) + (cp.i - 1) * (p - 1);
      long c = mod(raw, p * p - 1);
      if (c % (p + 1) == 0)
        throw Error(Errc::IrreducibilityViolation,
                    "p + 1 divides c = " + std::to_string(c) + " for p = " + std::to_string(p) +
                        ", k = " + std::to_string(in.k));
      return {in, nu, cp, Irreducible{raw, c}};
    }
    case CaseKind::Boundary: {
      Fp2Elt lam(lambda_boundary(in, cp.i));
      return {in, nu, cp, ReducibleSplit{lam, lam.inverse(), mod(r + 1 - cp.i, p - 1), mod(cp.i, p - 1)}};
    }
    case CaseKind::SelfDualTerminal: {
      SelfDualConstants sd = selfdual_constants(in);
      return {in, nu, cp, SelfDual{sd.trace, sd.lambda, sd.lambda_inv, mod((r + 1) / 2, p - 1)}};
    }
  }
  throw Error(Errc::InvalidArgument, "unreachable case");
}

long determinant_exponent(const ReductionResult& res, long p) {
  if (auto* irr = std::get_if<Irreducible>(&res)) return mod(irr->c, p - 1);
  if (auto* sp = std::get_if<ReducibleSplit>(&res)) return mod(sp->e1 + sp->e2, p - 1);
  return mod(2 * std::get<SelfDual>(res).e, p - 1);
}

std::string describe(const ReductionResult& res) {
  if (auto* irr = std::get_if<Irreducible>(&res)) return "ind(w2^" + std::to_string(irr->c) + ")";
  if (auto* sp = std::get_if<ReducibleSplit>(&res))
    return "mu(" + sp->lambda.str() + ")*w^" + std::to_string(sp->e1) + " + mu(" +
           sp->lambda_inv.str() + ")*w^" + std::to_string(sp->e2);
  const auto& sd = std::get<SelfDual>(res);
  return "mu(" + sd.lambda.str() + ")*w^" + std::to_string(sd.e) + " + mu(" + sd.lambda_inv.str() +
         ")*w^" + std::to_string(sd.e);
}

}  // namespace ssred
