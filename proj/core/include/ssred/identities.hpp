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
#include <vector>

#include "ssred/rational.hpp"

namespace ssred {

enum class IdentityName {
  MAIN10,
  MAIN11,
  EASY_GAUSS,
  TRICKY10,
  TRICKY11,
  MAIN12,
  SIGMA12a,
  SIGMA12b,
  MAIN16,
  MAIN16_FIRST,
  MAIN16_SECOND,
  E17_LOW,
  GAUSS17,
  MAIN17,
  G1p4,
  G1p22,
  GOULD183,
  GOULD639,
  SUMB,
  SUMB2,
  ROOTS,
};

const std::vector<IdentityName>& all_identities();
const char* identity_name(IdentityName id);
IdentityName parse_identity(const std::string& name);

// "n", "r" (with parity fixed by min and step 2) or "p" (finite-field checks).
struct IdentityRange {
  const char* param;
  long min;
  long step;
};
IdentityRange identity_range(IdentityName id);

struct IdentityId {
  IdentityName name;
  long param;
};

// Both sides of a rational identity; SUMB, SUMB2 and ROOTS have no single pair.
std::pair<Rational, Rational> identity_sides(IdentityId id);

// True, or throws Error(CheckFailed) carrying the parameter and both sides.
bool verify_identity(IdentityId id);

// Parameters up to bound (n or r); primes 5, 7, 11, 13 for the "p" identities.
std::vector<long> identity_batch(IdentityName id, long bound);

}  // namespace ssred
