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

#include <map>
#include <string>
#include <vector>

#include "ssred/linalg.hpp"

namespace ssred {

enum class AppendixId { A10, B11, C12, D16, E17 };
const char* appendix_name(AppendixId id);
AppendixId parse_appendix(const std::string& name);
inline constexpr AppendixId kAllAppendices[] = {AppendixId::A10, AppendixId::B11, AppendixId::C12,
                                                AppendixId::D16, AppendixId::E17};
// Smallest admissible r and its parity (1 = odd).
long appendix_min_r(AppendixId id);
bool appendix_odd(AppendixId id);

struct AppendixSystem {
  AppendixId id;
  long r;
  RatMatrix matrix;
  std::vector<AffineInL> rhs;
  // subscripts[m] = n when column m multiplies x_n.
  std::vector<long> subscripts;
};

// Coefficient C(top - m, j - m) * m! (r - m) / prod_{t=0..m} (r - j - t) shared by
// the triangular parts of every system.
Rational appendix_entry(long r, long top, long j, long m);

AppendixSystem build_system(AppendixId id, long r);
std::vector<AffineInL> solve_affine(const AppendixSystem& sys);
// Expected values of the distinguished unknowns, keyed by subscript.
std::map<long, AffineInL> closed_form(AppendixId id, long r);
// True, or throws Error(CheckFailed) with both values.
bool verify_appendix(AppendixId id, long r);

}  // namespace ssred
