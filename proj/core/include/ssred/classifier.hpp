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
#include <variant>

#include "ssred/finite_field.hpp"
#include "ssred/quad.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

struct ClassifierInput {
  long p;
  long k;
  QuadElt L;

  long r() const { return k - 2; }
  // Throws InvalidArgument unless p >= 5 is prime, 3 <= k <= p+1 and L lives over sqrt(p).
  void validate() const;
};

enum class CaseKind { Interval, Boundary, SelfDualTerminal, EvenLastInterval };
const char* case_name(CaseKind kind);

struct CasePoint {
  CaseKind kind;
  long i;
  friend bool operator==(const CasePoint&, const CasePoint&) = default;
};

// ind(w2^c); c_raw before reduction mod p^2 - 1.
struct Irreducible {
  long c_raw;
  long c;
};

// mu_lambda w^e1 + mu_{1/lambda} w^e2.
struct ReducibleSplit {
  Fp2Elt lambda;
  Fp2Elt lambda_inv;
  long e1;
  long e2;
};

// mu_lambda w^e + mu_{1/lambda} w^e with lambda + 1/lambda = trace.
struct SelfDual {
  FpElt trace;
  Fp2Elt lambda;
  Fp2Elt lambda_inv;
  long e;
};

using ReductionResult = std::variant<Irreducible, ReducibleSplit, SelfDual>;

struct Classification {
  ClassifierInput input;
  HalfInt nu;
  CasePoint point;
  ReductionResult result;
};

// H_- + H_+ for the given r.
Rational shift_constant(long r);
// M = L - H_- - H_+.
QuadElt shifted_L(const ClassifierInput& in);
HalfInt shifted_nu(const ClassifierInput& in);
CasePoint select_case(long r, HalfInt nu);

// (-1)^i * i * C(r+1-i, i)
Rational lambda_prefactor(long r, long i);
// lambda_prefactor(r, i) * sqrt(p)^(r - 2i) * M
QuadElt lambda_argument(const ClassifierInput& in, long i);
FpElt lambda_boundary(const ClassifierInput& in, long i);

struct SelfDualConstants {
  FpElt trace;
  Fp2Elt lambda;
  Fp2Elt lambda_inv;
};
SelfDualConstants selfdual_constants(const ClassifierInput& in);

Classification classify(const ClassifierInput& in);

// Sum of the w-exponents of the result, reduced mod p - 1.
long determinant_exponent(const ReductionResult& res, long p);
// Short label, e.g. "ind(w2^10)" or "mu(2)*w^2 + mu(3)*w^1".
std::string describe(const ReductionResult& res);

}  // namespace ssred
