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
#include "records.hpp"

#include "ssred/errors.hpp"

namespace ssred::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error(Errc::ParseError, "unknown format '" + s + "'");
}

json nu_json(const HalfInt& nu) {
  if (nu.is_infinite()) return {{"infinite", true}};
  long t = nu.twice();
  if (t % 2 == 0) return {{"num", t / 2}, {"den", 1}};
  return {{"num", t}, {"den", 2}};
}

namespace {

json field_json(const Fp2Elt& x) {
  if (x.in_base_field()) return {{"field", "Fp"}, {"coords", {x.c0().value()}}};
  return {{"field", "Fp2"}, {"coords", {x.c0().value(), x.c1().value()}}, {"nonresidue", x.nonresidue().value()}};
}

std::string coords(const Fp2Elt& x) {
  std::string s = std::to_string(x.c0().value());
  if (!x.in_base_field()) s += ";" + std::to_string(x.c1().value());
  return s;
}

}  // namespace

json result_json(const ReductionResult& res) {
  if (auto* ir = std::get_if<Irreducible>(&res)) return {{"type", "irreducible"}, {"omega2_exponent", ir->c}};
  if (auto* s = std::get_if<ReducibleSplit>(&res))
    return {{"type", "reducible"},
            {"lambda", field_json(s->lambda)},
            {"lambda_inv", field_json(s->lambda_inv)},
            {"omega_exponents", {s->e1, s->e2}}};
  const auto& d = std::get<SelfDual>(res);
  return {{"type", "self_dual"},
          {"trace", d.trace.value()},
          {"lambda", field_json(d.lambda)},
          {"lambda_inv", field_json(d.lambda_inv)},
          {"omega_exponents", {d.e, d.e}}};
}

json classification_json(const Classification& c) {
  return {{"p", c.input.p},       {"k", c.input.k},
          {"r", c.input.r()},     {"L", c.input.L.str()},
          {"nu", nu_json(c.nu)},  {"case", case_name(c.point.kind)},
          {"i", c.point.i},       {"result", result_json(c.result)}};
}

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> h{"p",           "k",         "r",
                                          "L",           "nu",        "case",
                                          "i",           "type",      "omega2_exponent",
                                          "lambda_field", "lambda",   "lambda_inv",
                                          "nonresidue",  "trace",     "omega_exponents"};
  return h;
}

std::vector<std::string> csv_row(const Classification& c) {
  std::vector<std::string> row{std::to_string(c.input.p), std::to_string(c.input.k), std::to_string(c.input.r()),
                               c.input.L.str(), c.nu.str(), case_name(c.point.kind), std::to_string(c.point.i)};
  row.resize(csv_header().size());
  auto set = [&](const char* key, std::string v) {
    for (std::size_t i = 0; i < csv_header().size(); ++i)
      if (csv_header()[i] == key) row[i] = std::move(v);
  };
  auto set_lambda = [&](const Fp2Elt& l, const Fp2Elt& li) {
    set("lambda_field", l.in_base_field() ? "Fp" : "Fp2");
    set("lambda", coords(l));
    set("lambda_inv", coords(li));
    if (!l.in_base_field()) set("nonresidue", std::to_string(l.nonresidue().value()));
  };
  if (auto* ir = std::get_if<Irreducible>(&c.result)) {
    set("type", "irreducible");
    set("omega2_exponent", std::to_string(ir->c));
  } else if (auto* s = std::get_if<ReducibleSplit>(&c.result)) {
    set("type", "reducible");
    set_lambda(s->lambda, s->lambda_inv);
    set("omega_exponents", std::to_string(s->e1) + ";" + std::to_string(s->e2));
  } else {
    const auto& d = std::get<SelfDual>(c.result);
    set("type", "self_dual");
    set_lambda(d.lambda, d.lambda_inv);
    set("trace", std::to_string(d.trace.value()));
    set("omega_exponents", std::to_string(d.e) + ";" + std::to_string(d.e));
  }
  return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out += '"';
  }
  return out;
}

std::string text_line(const Classification& c) {
  return "p=" + std::to_string(c.input.p) + " k=" + std::to_string(c.input.k) + " L=" + c.input.L.str() +
         " nu=" + c.nu.str() + " case=" + case_name(c.point.kind) + " i=" + std::to_string(c.point.i) + "  " +
         describe(c.result);
}

std::string check_text(const CheckLine& c) {
  std::string s = std::string(c.ok ? "PASS" : "FAIL") + " " + c.name + " " + c.param;
  if (!c.detail.empty()) s += " " + c.detail;
  return s;
}

json check_json(const CheckLine& c) {
  json j{{"name", c.name}, {"param", c.param}, {"status", c.ok ? "PASS" : "FAIL"}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace ssred::cli
