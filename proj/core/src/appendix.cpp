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
#include "ssred/appendix.hpp"

#include "ssred/classifier.hpp"
#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"

namespace ssred {

namespace {

Rational sgn_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// C(top, j) (L - H_{top - j})
AffineInL binom_rhs(long top, long j) {
  return binom(top, j) * (AffineInL::L() - AffineInL::constant(harmonic(top - j)));
}

AffineInL shifted(long r) { return AffineInL::L() - AffineInL::constant(shift_constant(r)); }

}  // namespace

const char* appendix_name(AppendixId id) {
  switch (id) {
    case AppendixId::A10: return "A10";
    case AppendixId::B11: return "B11";
    case AppendixId::C12: return "C12";
    case AppendixId::D16: return "D16";
    case AppendixId::E17: return "E17";
  }
  return "?";
}

AppendixId parse_appendix(const std::string& name) {
  for (AppendixId id : kAllAppendices)
    if (name == appendix_name(id)) return id;
  throw Error(Errc::ParseError, "unknown appendix '" + name + "'");
}

long appendix_min_r(AppendixId id) {
  switch (id) {
    case AppendixId::A10: return 3;
    case AppendixId::B11:
    case AppendixId::C12: return 1;
    default: return 2;
  }
}

bool appendix_odd(AppendixId id) {
  return id == AppendixId::A10 || id == AppendixId::B11 || id == AppendixId::C12;
}

Rational appendix_entry(long r, long top, long j, long m) {
  Integer c = binom_int(top - m, j - m);
  if (c == 0) return 0;
  Rational v = Rational(c) * Rational(factorial(m)) * Rational(r - m);
  for (long t = 0; t <= m; ++t) v /= Rational(r - j - t);
  return v;
}

AppendixSystem build_system(AppendixId id, long r) {
  if ((r % 2 == 1) != appendix_odd(id))
    throw Error(Errc::ParityMismatch, std::string(appendix_name(id)) + " needs " +
                                          (appendix_odd(id) ? "odd" : "even") + " r, got " +
                                          std::to_string(r));
  if (r < appendix_min_r(id))
    throw Error(Errc::InvalidArgument, std::string(appendix_name(id)) + " needs r >= " +
                                           std::to_string(appendix_min_r(id)));
  AppendixSystem sys{id, r, {}, {}, {}};
  auto alloc = [&](long n) {
    sys.matrix.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    sys.rhs.assign(static_cast<std::size_t>(n), AffineInL{0, 0});
    for (long m = 0; m < n; ++m) sys.subscripts.push_back(r - m);
  };
  auto& A = sys.matrix;
  auto at = [&](long j, long m) -> Rational& {
    return A[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
  };
  auto rhs = [&](long j) -> AffineInL& { return sys.rhs[static_cast<std::size_t>(j)]; };

  switch (id) {
    case AppendixId::A10:
    case AppendixId::B11: {
      long n = (r + 1) / 2, top = id == AppendixId::A10 ? (r + 3) / 2 : (r + 1) / 2;
      alloc(n);
      for (long j = 0; j < n; ++j) {
        for (long m = 0; m <= j; ++m) at(j, m) = appendix_entry(r, top, j, m);
        rhs(j) = binom_rhs(top, j);
      }
      break;
    }
    case AppendixId::C12: {
      long h = (r + 1) / 2, n = h + 1;
      alloc(n);
      sys.subscripts.back() = (r - 1) / 2;
      for (long j = 0; j < h; ++j) {
        for (long m = 0; m <= j; ++m) at(j, m) = appendix_entry(r, h, j, m);
        rhs(j) = binom_rhs(h, j);
      }
      for (long m = 0; m < (r - 1) / 2; ++m) at(h, m) = appendix_entry(r, h, h, m);
      at(h, n - 1) = 1;
      break;
    }
    case AppendixId::D16: {
      long n = r / 2, top = (r + 2) / 2;
      alloc(n);
      for (long j = 0; j < n; ++j) {
        for (long m = 0; m < n - 1; ++m) at(j, m) = appendix_entry(r, top, j, m);
        at(j, n - 1) = binom(top, j);
        rhs(j) = binom_rhs(top, j);
      }
      break;
    }
    case AppendixId::E17: {
      long n = (r + 2) / 2, top = r / 2;
      alloc(n);
      for (long j = 0; j < n; ++j) {
        for (long m = 0; m < n - 2; ++m) at(j, m) = appendix_entry(r, top, j, m);
        at(j, n - 2) = binom(top, j);
        rhs(j) = AffineInL::constant(-Rational(n) * binom(top, j) * (harmonic(n - j) - Rational(1)));
      }
      at(n - 1, n - 1) = 1;
      break;
    }
  }
  return sys;
}

std::vector<AffineInL> solve_affine(const AppendixSystem& sys) {
  std::vector<AffineInL> x = solve_affine(sys.matrix, sys.rhs);
  for (const AffineInL& e : residual(sys.matrix, x, sys.rhs))
    if (!(e == AffineInL{0, 0}))
      throw Error(Errc::Singular, std::string(appendix_name(sys.id)) + " r=" + std::to_string(sys.r) +
                                      ": nonzero residual " + e.str());
  return x;
}

std::map<long, AffineInL> closed_form(AppendixId id, long r) {
  switch (id) {
    case AppendixId::A10: {
      Rational s = sgn_pow((r - 1) / 2) * Rational(r + 3, 4);
      AffineInL t = AffineInL::L() - AffineInL::constant(harmonic((r - 1) / 2) + harmonic((r + 1) / 2));
      return {{(r + 1) / 2, s * t}};
    }
    case AppendixId::B11:
      return {{(r + 1) / 2, sgn_pow((r - 1) / 2) * shifted(r)}};
    case AppendixId::C12: {
      Rational s = sgn_pow((r - 1) / 2);
      AffineInL low = -AffineInL::L() + AffineInL::constant(s * Rational(2, r + 1)) +
                      (s * Rational(r + 1, 2)) * shifted(r);
      return {{(r + 1) / 2, s * shifted(r)}, {(r - 1) / 2, low}};
    }
    case AppendixId::D16:
      return {{(r + 2) / 2, shifted(r)}};
    case AppendixId::E17: {
      Rational h = Rational(r + 2, 2);
      return {{(r + 2) / 2, AffineInL::constant(h * (Rational(1) - shift_constant(r)))},
              {r / 2, AffineInL::constant(-sgn_pow(r / 2) * Rational(2, r))}};
    }
  }
  return {};
}

bool verify_appendix(AppendixId id, long r) {
  AppendixSystem sys = build_system(id, r);
  std::vector<AffineInL> x = solve_affine(sys);
  for (const auto& [sub, want] : closed_form(id, r)) {
    std::size_t col = 0;
    while (col < sys.subscripts.size() && sys.subscripts[col] != sub) ++col;
    if (col == sys.subscripts.size())
      throw Error(Errc::CheckFailed, "no unknown x_" + std::to_string(sub));
    if (!(x[col] == want))
      throw Error(Errc::CheckFailed, std::string(appendix_name(id)) + " r=" + std::to_string(r) +
                                         ": x_" + std::to_string(sub) + " = " + x[col].str() +
                                         ", expected " + want.str());
  }
  return true;
}

}  // namespace ssred
