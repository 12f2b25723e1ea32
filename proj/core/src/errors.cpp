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
#include "ssred/errors.hpp"

namespace ssred {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NegativeValuation: return "NegativeValuation";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::Singular: return "Singular";
    case Errc::IrreducibilityViolation: return "IrreducibilityViolation";
    case Errc::CheckFailed: return "CheckFailed";
  }
  return "Error";
}

}  // namespace ssred
