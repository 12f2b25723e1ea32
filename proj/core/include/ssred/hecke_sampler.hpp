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

#include <cstdint>
#include <random>

#include "ssred/hecke.hpp"

namespace ssred {

// Random group elements and finite-support vectors near the base edge.
class HeckeSampler {
 public:
  explicit HeckeSampler(std::uint64_t seed) : g_(seed) {}

  long below(long n) { return static_cast<long>(g_() % static_cast<unsigned long>(n)); }
  // p^t times an Iwahori element, |t| <= 2.
  GroupElt iwahori(long p);
  // A lower, upper, beta or unipotent step.
  GroupElt step(long p);
  GroupElt element(long p, int depth);
  // 1 to 4 cosets within tree distance 2 of the base edge.
  ModPVec mod_p_vec(long p, const Weight& w);
  EVec e_vec(long p, const Weight& w);

 private:
  std::mt19937_64 g_;
};

// For a mod-p character: T10^2 = 1, T12 T10 T12 = -T12 and Tm10 = T10 T12 T10
// when s = t mod p-1, else Tm10 T12 = T12 Tm10 = 0; plus g-equivariance of
// every defined operator. Returns the number of identities checked, throws
// CheckFailed naming the first that fails.
int check_hecke_relations(const ModPVec& v, const GroupElt& g);
// g-equivariance of the operators defined on v's weight.
int check_hecke_equivariance(const EVec& v, const GroupElt& g);

}  // namespace ssred
