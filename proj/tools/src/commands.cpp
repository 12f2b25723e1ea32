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
#include "commands.hpp"

#include <functional>
#include <random>

#include "ssred/appendix.hpp"
#include "ssred/bmcheck.hpp"
#include "ssred/errors.hpp"
#include "ssred/hecke_sampler.hpp"
#include "ssred/identities.hpp"
#include "ssred/wz.hpp"
#include "worker_pool.hpp"

namespace ssred::cli {

using nlohmann::json;

namespace {

// Independent stream per task so results do not depend on scheduling.
std::uint64_t task_seed(std::uint64_t seed, long a, long b = 0, long c = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

void emit_classifications(const Common& c, const std::vector<Classification>& rows, std::ostream& out) {
  switch (c.format) {
    case Format::Json:
      if (rows.size() == 1) {
        out << classification_json(rows[0]).dump() << "\n";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < rows.size(); ++i)
        out << classification_json(rows[i]).dump() << (i + 1 < rows.size() ? ",\n" : "\n");
      out << "]\n";
      return;
    case Format::Csv:
      out << csv_line(csv_header()) << "\n";
      for (const auto& r : rows) out << csv_line(csv_row(r)) << "\n";
      return;
    case Format::Text:
      for (const auto& r : rows) out << text_line(r) << "\n";
      return;
  }
}

// Runs checks on the pool and prints them in order with a summary.
int run_checks(const Common& c, const std::vector<std::pair<std::string, std::string>>& labels,
               const std::vector<std::function<std::string()>>& bodies, std::ostream& out) {
  auto lines = parallel_map<CheckLine>(bodies.size(), c.jobs, [&](std::size_t i) {
    CheckLine line{labels[i].first, labels[i].second, false, ""};
    try {
      line.detail = bodies[i]();
      line.ok = true;
    } catch (const std::exception& e) {
      line.detail = e.what();
    }
    return line;
  });
  long passed = 0, failed = 0;
  for (const auto& l : lines) (l.ok ? passed : failed)++;
  switch (c.format) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& l : lines) checks.push_back(check_json(l));
      out << json{{"checks", checks}, {"passed", passed}, {"failed", failed}}.dump(1) << "\n";
      break;
    }
    case Format::Csv:
      out << csv_line({"name", "param", "status", "detail"}) << "\n";
      for (const auto& l : lines) out << csv_line({l.name, l.param, l.ok ? "PASS" : "FAIL", l.detail}) << "\n";
      break;
    case Format::Text:
      for (const auto& l : lines) out << check_text(l) << "\n";
      out << "summary: " << passed << " passed, " << failed << " failed\n";
      break;
  }
  return failed ? 1 : 0;
}

// Collects (label, body) pairs for run_checks.
struct CheckList {
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::function<std::string()>> bodies;

  void add(std::string name, std::string param, std::function<std::string()> body) {
    labels.emplace_back(std::move(name), std::move(param));
    bodies.push_back(std::move(body));
  }
};

std::string kv(const char* key, long v) { return std::string(key) + "=" + std::to_string(v); }

}  // namespace

int run_classify(const Common& c, const ClassifyArgs& a, std::ostream& out) {
  require_prime(a.p);
  ClassifierInput in{a.p, a.k, QuadElt::parse(a.L, a.p)};
  emit_classifications(c, {classify(in)}, out);
  return 0;
}

std::vector<QuadElt> default_L_grid(long p, long k, const std::vector<long>& units) {
  long r = k - 2;
  Rational base = shift_constant(r);
  std::vector<QuadElt> grid{QuadElt(p, base)};
  for (long t = -2 * r; t <= 4; ++t)
    for (long u : units) grid.push_back(QuadElt::sqrt_p_power(p, t) * Rational(u) + base);
  return grid;
}

int run_sweep(const Common& c, const SweepArgs& a, std::ostream& out) {
  if (a.primes.empty()) throw Error(Errc::InvalidArgument, "sweep needs at least one --p");
  for (long u : a.units)
    for (long p : a.primes)
      if (u % p == 0) throw Error(Errc::InvalidArgument, "grid unit " + std::to_string(u) + " is divisible by p");
  std::vector<ClassifierInput> inputs;
  for (long p : a.primes) {
    long k_max = a.k_max ? a.k_max : p + 1;
    for (long k = a.k_min; k <= k_max; ++k) {
      std::vector<QuadElt> grid;
      if (a.L.empty()) grid = default_L_grid(p, k, a.units);
      for (const auto& s : a.L) grid.push_back(QuadElt::parse(s, p));
      std::mt19937_64 rng(task_seed(c.seed, p, k));
      long r = k - 2;
      for (int n = 0; n < a.random; ++n) {
        long t = -2 * r + static_cast<long>(rng() % static_cast<unsigned long>(2 * r + 5));
        long u = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
        long tail = static_cast<long>(rng() % static_cast<unsigned long>(p * p));
        grid.push_back(QuadElt::sqrt_p_power(p, t) * Rational(u + p * tail) + shift_constant(r));
      }
      for (const auto& L : grid) {
        ClassifierInput in{p, k, L};
        in.validate();
        inputs.push_back(in);
      }
    }
  }
  auto rows = parallel_map<Classification>(inputs.size(), c.jobs, [&](std::size_t i) { return classify(inputs[i]); });
  emit_classifications(c, rows, out);
  return 0;
}

int run_verify_identities(const Common& c, const IdentityArgs& a, std::ostream& out) {
  std::vector<IdentityName> ids;
  for (const auto& s : a.only) ids.push_back(parse_identity(s));
  if (ids.empty()) ids = all_identities();
  CheckList list;
  for (IdentityName id : ids) {
    const char* param = identity_range(id).param;
    for (long q : identity_batch(id, a.n_max))
      list.add(identity_name(id), std::string(param) + "=" + std::to_string(q), [id, q] {
        verify_identity({id, q});
        return std::string();
      });
  }
  if (a.only.empty() && a.wz_n_max > 0) {
    long n_max = a.wz_n_max;
    list.add("WZ", kv("n_max", n_max), [n_max] {
      wz_certificate_check(n_max, {0, 1, 2, 3, 4, 5});
      return std::string();
    });
  }
  return run_checks(c, list.labels, list.bodies, out);
}

int run_verify_appendices(const Common& c, const AppendixArgs& a, std::ostream& out) {
  std::vector<AppendixId> ids;
  for (const auto& s : a.only) ids.push_back(parse_appendix(s));
  if (ids.empty()) ids.assign(std::begin(kAllAppendices), std::end(kAllAppendices));
  CheckList list;
  for (AppendixId id : ids)
    for (long r = appendix_min_r(id); r <= a.r_max; r += 2)
      list.add(appendix_name(id), kv("r", r), [id, r] {
        verify_appendix(id, r);
        return std::string();
      });
  return run_checks(c, list.labels, list.bodies, out);
}

int run_hecke_check(const Common& c, const HeckeArgs& a, std::ostream& out) {
  CheckList list;
  int vectors = a.vectors;
  for (long p : a.primes) {
    require_prime(p, 5);
    for (long s = 0; s < p - 1; ++s)
      for (long t = 0; t < p - 1; ++t) {
        std::uint64_t seed = task_seed(c.seed, p, s, t);
        list.add("relations", kv("p", p) + " " + Weight::character(s, t).str(), [=] {
          HeckeSampler rng(seed);
          long n = 0;
          for (int i = 0; i < vectors; ++i) {
            ModPVec v = rng.mod_p_vec(p, Weight::character(s, t));
            n += check_hecke_relations(v, rng.element(p, 2) * rng.iwahori(p));
          }
          return std::to_string(n) + " identities";
        });
      }
    for (long r = -1; r <= 3; ++r) {
      Weight w = r < 0 ? Weight::character(0, 0) : Weight::sym(r);
      std::uint64_t seed = task_seed(c.seed, p, 100 + r);
      list.add("equivariance", kv("p", p) + " " + w.str(), [=] {
        HeckeSampler rng(seed);
        long n = 0;
        for (int i = 0; i < std::max(1, vectors / 5); ++i)
          n += check_hecke_equivariance(rng.e_vec(p, w), rng.element(p, 2) * rng.iwahori(p));
        return std::to_string(n) + " identities";
      });
    }
  }
  return run_checks(c, list.labels, list.bodies, out);
}

int run_bm_check(const Common& c, const BMArgs& a, std::ostream& out) {
  CheckList list;
  for (long p : a.primes) {
    require_prime(p, 5);
    for (long k = 4; k <= p - 1; k += 2) {
      std::string at = kv("p", p) + " " + kv("k", k);
      list.add("a-identity", at, [p, k] {
        check_a_identity(p, k);
        return std::string();
      });
      for (long i = 1; 2 * i < k - 2; ++i)
        list.add("b-identity", at + " " + kv("i", i), [p, k, i] {
          check_b_identity(p, k, i);
          return std::string();
        });
      std::uint64_t seed = task_seed(c.seed, p, k);
      int samples = a.samples;
      list.add("unit-case", at, [p, k, seed, samples] {
        check_unit_case(p, k, unit_case_samples(p, k, samples, seed));
        return std::to_string(samples) + " samples";
      });
    }
  }
  return run_checks(c, list.labels, list.bodies, out);
}

}  // namespace ssred::cli
