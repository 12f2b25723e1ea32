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

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ssred/classifier.hpp"

namespace ssred::cli {

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

nlohmann::json nu_json(const HalfInt& nu);
nlohmann::json result_json(const ReductionResult& res);
nlohmann::json classification_json(const Classification& c);

// Flattened columns of classification_json, in a fixed order.
const std::vector<std::string>& csv_header();
std::vector<std::string> csv_row(const Classification& c);
std::string csv_line(const std::vector<std::string>& fields);

std::string text_line(const Classification& c);

// One verification outcome.
struct CheckLine {
  std::string name;
  std::string param;
  bool ok = false;
  std::string detail;
};
std::string check_text(const CheckLine& c);
nlohmann::json check_json(const CheckLine& c);

}  // namespace ssred::cli
