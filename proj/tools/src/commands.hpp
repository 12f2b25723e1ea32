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
#include <ostream>
#include <string>
#include <vector>

#include "records.hpp"

namespace ssred::cli {

struct Common {
  Format format = Format::Json;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct ClassifyArgs {
  long p = 0;
  long k = 0;
  std::string L;
};

struct SweepArgs {
  std::vector<long> primes;
  long k_min = 3;
  long k_max = 0;  // 0: p + 1
  std::vector<std::string> L;  // empty: the default grid
  std::vector<long> units{1, 2};
  int random = 0;
};

struct IdentityArgs {
  long n_max = 100;
  long wz_n_max = 40;
  std::vector<std::string> only;
};

struct AppendixArgs {
  long r_max = 100;
  std::vector<std::string> only;
};

struct HeckeArgs {
  std::vector<long> primes{5, 7};
  int vectors = 100;
};

struct BMArgs {
  std::vector<long> primes{5, 7, 11, 13};
  int samples = 20;
};

// Each returns the process exit code; bad input throws ssred::Error.
int run_classify(const Common& c, const ClassifyArgs& a, std::ostream& out);
int run_sweep(const Common& c, const SweepArgs& a, std::ostream& out);
int run_verify_identities(const Common& c, const IdentityArgs& a, std::ostream& out);
int run_verify_appendices(const Common& c, const AppendixArgs& a, std::ostream& out);
int run_hecke_check(const Common& c, const HeckeArgs& a, std::ostream& out);
int run_bm_check(const Common& c, const BMArgs& a, std::ostream& out);

// The default L values for one (p, k): H_- + H_+ + u sqrt(p)^t for every unit u
// and -2r <= t <= 4, so nu runs over {-r, ..., 2} in half steps, plus nu = oo.
std::vector<QuadElt> default_L_grid(long p, long k, const std::vector<long>& units);

}  // namespace ssred::cli
