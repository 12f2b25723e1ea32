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
#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdlib>
#include <iostream>
#include <thread>

#include "commands.hpp"
#include "ssred/errors.hpp"

using namespace ssred;
using namespace ssred::cli;

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("SSRED_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "ssred: ignoring SSRED_JOBS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod-p reductions of semi-stable representations, with verification batches"};
  app.require_subcommand(1);

  Common common;
  common.jobs = default_jobs();
  std::string format;  // empty: json for classify and sweep, text for checks
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", common.seed, "seed for randomized inputs")->capture_default_str();
    sub->add_option("-j,--jobs", common.jobs, "worker threads (default from SSRED_JOBS, else 1)")
        ->check(CLI::PositiveNumber);
  };

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "classify one (p, k, L)");
  classify->add_option("--p", classify_args.p, "prime p >= 5")->required();
  classify->add_option("--k", classify_args.k, "weight, 3 <= k <= p+1")->required();
  classify->add_option("--L", classify_args.L, "L-invariant, e.g. 3/2 or 1-2*sqrt(5)")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "classify over k and a grid of L values");
  sweep->add_option("--p", sweep_args.primes, "primes")->required();
  sweep->add_option("--k-min", sweep_args.k_min)->capture_default_str();
  sweep->add_option("--k-max", sweep_args.k_max, "default p+1");
  sweep->add_option("--L", sweep_args.L, "explicit L values instead of the default grid");
  sweep->add_option("--units", sweep_args.units, "units u of the grid H_- + H_+ + u*sqrt(p)^t")
      ->capture_default_str();
  sweep->add_option("--random", sweep_args.random, "extra random L values per (p, k)")->capture_default_str();

  IdentityArgs id_args;
  auto* ids = app.add_subcommand("verify-identities", "check the identity catalog and the WZ certificate");
  ids->add_option("--n-max", id_args.n_max)->capture_default_str();
  ids->add_option("--wz-n-max", id_args.wz_n_max, "0 skips the WZ check")->capture_default_str();
  ids->add_option("--only", id_args.only, "restrict to these identity names");

  AppendixArgs app_args;
  auto* apps = app.add_subcommand("verify-appendices", "solve the appendix systems and compare closed forms");
  apps->add_option("--r-max", app_args.r_max)->capture_default_str();
  apps->add_option("--only", app_args.only, "restrict to A10, B11, C12, D16, E17");

  HeckeArgs hecke_args;
  auto* hecke = app.add_subcommand("hecke-check", "Hecke relations and equivariance on random vectors");
  hecke->add_option("--p", hecke_args.primes)->capture_default_str();
  hecke->add_option("--vectors", hecke_args.vectors, "vectors per weight")->capture_default_str();

  BMArgs bm_args;
  auto* bm = app.add_subcommand("bm-check", "comparison with the eigenform constants a and b");
  bm->add_option("--p", bm_args.primes)->capture_default_str();
  bm->add_option("--samples", bm_args.samples, "unit-case perturbations per (p, k)")->capture_default_str();

  for (auto* sub : {classify, sweep, ids, apps, hecke, bm}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    bool verify = !classify->parsed() && !sweep->parsed();
    common.format = parse_format(format.empty() ? (verify ? "text" : "json") : format);
    if (classify->parsed()) return run_classify(common, classify_args, std::cout);
    if (sweep->parsed()) return run_sweep(common, sweep_args, std::cout);
    if (ids->parsed()) return run_verify_identities(common, id_args, std::cout);
    if (apps->parsed()) return run_verify_appendices(common, app_args, std::cout);
    if (hecke->parsed()) return run_hecke_check(common, hecke_args, std::cout);
    return run_bm_check(common, bm_args, std::cout);
  } catch (const Error& e) {
    std::cerr << "ssred: error: " << e.what() << "\n";
    return e.code() == Errc::CheckFailed ? 1 : 2;
  }
}
