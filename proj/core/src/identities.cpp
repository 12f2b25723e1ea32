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
#include "ssred/identities.hpp"

#include <functional>

#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"
#include "ssred/finite_field.hpp"
#include "ssred/padic.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

namespace {

using R = Rational;

R sg(long e) { return e % 2 == 0 ? R(1) : R(-1); }
R C(long n, long k) { return (n < 0 || k < 0 || k > n) ? R(0) : binom(n, k); }
R H(long n) { return harmonic(n); }
R frac(long a, long b) { return R(Integer(a), Integer(b)); }

R sum(long lo, long hi, const std::function<R(long)>& f) {
  R s = 0;
  for (long k = lo; k <= hi; ++k) s += f(k);
  return s;
}

struct Entry {
  IdentityName id;
  const char* name;
  IdentityRange range;
};

const Entry kEntries[] = {
    {IdentityName::MAIN10, "MAIN10", {"r", 3, 2}},
    {IdentityName::MAIN11, "MAIN11", {"r", 1, 2}},
    {IdentityName::EASY_GAUSS, "EASY_GAUSS", {"n", 1, 1}},
    {IdentityName::TRICKY10, "TRICKY10", {"n", 1, 1}},
    {IdentityName::TRICKY11, "TRICKY11", {"n", 1, 1}},
    {IdentityName::MAIN12, "MAIN12", {"r", 1, 2}},
    {IdentityName::SIGMA12a, "SIGMA12a", {"n", 1, 1}},
    {IdentityName::SIGMA12b, "SIGMA12b", {"n", 1, 1}},
    {IdentityName::MAIN16, "MAIN16", {"r", 2, 2}},
    {IdentityName::MAIN16_FIRST, "MAIN16_FIRST", {"n", 1, 1}},
    {IdentityName::MAIN16_SECOND, "MAIN16_SECOND", {"n", 1, 1}},
    {IdentityName::E17_LOW, "E17_LOW", {"r", 2, 2}},
    {IdentityName::GAUSS17, "GAUSS17", {"n", 1, 1}},
    {IdentityName::MAIN17, "MAIN17", {"n", 1, 1}},
    {IdentityName::G1p4, "G1p4", {"n", 1, 1}},
    {IdentityName::G1p22, "G1p22", {"n", 1, 1}},
    {IdentityName::GOULD183, "GOULD183", {"r", 3, 2}},
    {IdentityName::GOULD639, "GOULD639", {"r", 3, 2}},
    {IdentityName::SUMB, "SUMB", {"p", 5, 1}},
    {IdentityName::SUMB2, "SUMB2", {"p", 5, 1}},
    {IdentityName::ROOTS, "ROOTS", {"p", 5, 1}},
};

const Entry& entry(IdentityName id) {
  for (const Entry& e : kEntries)
    if (e.id == id) return e;
  throw Error(Errc::InvalidArgument, "unknown identity");
}

// Inner sums of the odd-r appendix identities.
R inner10(long m, long n) {
  return sum(1, n, [&](long j) { return sg(j - 1) * C(2 * j - 1, j) * C(m + j, 2 * j - 1); });
}

R sides_check(std::pair<R, R> s) { return s.first - s.second; }

[[noreturn]] void fail(IdentityId id, const std::string& detail) {
  throw Error(Errc::CheckFailed, std::string(identity_name(id.name)) + " " +
                                     identity_range(id.name).param + "=" + std::to_string(id.param) +
                                     ": " + detail);
}

// sum_{b=1}^{p-1} (lambda - b)^A b^B over F_p, with 0^0 = 1 and B < 0 via inverses.
FpElt sum_over_b(long p, long lambda, long A, long B) {
  FpElt s(p, 0);
  for (long b = 1; b < p; ++b) {
    FpElt base(p, lambda - b);
    FpElt term = (A == 0 ? FpElt(p, 1) : base.pow(A)) * FpElt(p, b).pow(B);
    s = s + term;
  }
  return s;
}

FpElt fp_pow0(long p, long lambda, long e) {
  if (e == 0) return FpElt(p, 1);
  return FpElt(p, lambda).pow(e);
}

void check_sumb(IdentityId id) {
  long p = id.param;
  for (long r = 1; r <= p - 1; ++r)
    for (long i = 1; i <= r; ++i)
      for (long n = std::max(r - i + 2, i - 1); n <= r; ++n)
        for (long l = 1; l <= i - 1; ++l) {
          long A = n - i + 1, B = r - l - n;
          for (long lambda = 0; lambda < p; ++lambda) {
            FpElt lhs = sum_over_b(p, lambda, A, B);
            FpElt rhs(p, 0);
            if (l >= r - n) {
              Integer c = binom_int(A, n - r + l);
              if (c != 0) {
                FpElt cf = FpElt::from_rational(p, R(c)) * FpElt(p, (n - r + l + 1) % 2 ? -1 : 1);
                rhs = cf * fp_pow0(p, lambda, r - l - i + 1);
              }
            }
            if (!(lhs == rhs))
              fail(id, "r=" + std::to_string(r) + " i=" + std::to_string(i) + " n=" +
                           std::to_string(n) + " l=" + std::to_string(l) + " lambda=" +
                           std::to_string(lambda) + ": " + std::to_string(lhs.value()) +
                           " != " + std::to_string(rhs.value()));
          }
        }
}

void check_sumb2(IdentityId id) {
  long p = id.param;
  for (long t = 2 - p; t <= p - 3; ++t)
    for (long lambda = 0; lambda < p; ++lambda) {
      FpElt lhs = sum_over_b(p, lambda, 2, t);
      FpElt rhs(p, 0);
      if (t >= -2 && t <= 0)
        rhs = FpElt::from_rational(p, sg(1 - t) * C(2, -t)) * fp_pow0(p, lambda, 2 + t);
      else if (t == p - 3)
        rhs = FpElt(p, -1);
      if (!(lhs == rhs))
        fail(id, "t=" + std::to_string(t) + " lambda=" + std::to_string(lambda) + ": " +
                     std::to_string(lhs.value()) + " != " + std::to_string(rhs.value()));
    }
}

void check_roots(IdentityId id) {
  long p = id.param;
  const int N = 4;
  Integer m = ipow(p, N);
  std::vector<Integer> lifts;
  for (long i = 1; i < p; ++i) lifts.push_back(teichmuller(i, p, N).unit());
  for (long j = 1; j <= 2 * (p - 1); ++j) {
    Integer s = 0;
    for (const Integer& t : lifts) {
      Integer v;
      mpz_powm_ui(v.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(j), m.get_mpz_t());
      s += v;
    }
    s %= m;
    Integer want = j % (p - 1) == 0 ? Integer(p - 1) : Integer(0);
    if (s != want)
      fail(id, "j=" + std::to_string(j) + ": power sum " + s.get_str() + " mod p^4, expected " +
                   want.get_str());
  }
}

}  // namespace

const std::vector<IdentityName>& all_identities() {
  static const std::vector<IdentityName> v = [] {
    std::vector<IdentityName> out;
    for (const Entry& e : kEntries) out.push_back(e.id);
    return out;
  }();
  return v;
}

const char* identity_name(IdentityName id) { return entry(id).name; }

IdentityName parse_identity(const std::string& name) {
  for (const Entry& e : kEntries)
    if (name == e.name) return e.id;
  throw Error(Errc::ParseError, "unknown identity '" + name + "'");
}

IdentityRange identity_range(IdentityName id) { return entry(id).range; }

std::pair<Rational, Rational> identity_sides(IdentityId id) {
  IdentityRange range = identity_range(id.name);
  long x = id.param;
  if (x < range.min || (range.step == 2 && (x - range.min) % 2 != 0))
    throw Error(Errc::InvalidArgument, std::string(identity_name(id.name)) + ": parameter " +
                                           std::to_string(x) + " out of range");
  long n = x, r = x, m = (r - 1) / 2, h = r / 2;
  switch (id.name) {
    case IdentityName::MAIN10:
      return {sum(2, (r + 1) / 2, [&](long k) { return frac(1, k + 1) * inner10(m, k - 1); }),
              sg(m) * (H((r + 3) / 2) - H(m) - H((r + 1) / 2))};
    case IdentityName::MAIN11:
      return {sum(1, m, [&](long k) { return frac(1, k + 1) * inner10(m, k); }), sg(m) * -H(m)};
    case IdentityName::EASY_GAUSS:
      return {sum(1, n, [&](long k) { return sg(k - 1) * C(n + k, k) * C(n, k - 1); }),
              sg(n) * (R(1) - C(2 * n + 1, n + 1))};
    case IdentityName::TRICKY10:
      return {sum(1, n, [&](long k) { return sg(k) * C(n + k, k) * C(n, k - 1) * H(k + 1); }),
              sg(n) * (-H(n) - H(n + 1)) +
                  sg(n) * frac((2 * n + 1) * (2 * n + 3), (n + 1) * (n + 1) * (n + 2)) * C(2 * n, n) +
                  sg(n) * frac(2 * n + 1, n + 1) * C(2 * n, n) * H(n)};
    case IdentityName::TRICKY11:
      return {sum(1, n, [&](long k) { return sg(k) * C(n + k, k) * C(n, k - 1) * H(k); }),
              sg(n) * (-H(n) - H(n + 1)) + sg(n) * H(n + 1) * C(2 * n + 1, n + 1)};
    case IdentityName::MAIN12: {
      R lhs = sum(0, m, [&](long k) {
        R in = sum(2, k, [&](long j) {
          return sg(j - 1) * frac(j - 1, j) * C(2 * j - 1, j) * C(m + j, 2 * j - 1);
        });
        return frac(1, k + 1) * (R(1) + frac(r + 1, 2) * in);
      });
      return {lhs, sg(m) * frac(2, r + 1) - sg(m) * frac(r + 1, 2) * H(m)};
    }
    case IdentityName::SIGMA12a:
      return {sum(2, n, [&](long k) { return sg(k - 1) * frac(k - 1, k) * C(n + k, k) * C(n, k - 1); }),
              -frac(1, n + 1) + sg(n) - sg(n) * frac(n * (2 * n + 1), (n + 1) * (n + 1)) * C(2 * n, n)};
    case IdentityName::SIGMA12b:
      return {sum(2, n,
                  [&](long k) { return sg(k) * frac(k - 1, k) * C(n + k, k) * C(n, k - 1) * H(k); }),
              -sg(n) * frac(n, (n + 1) * (n + 1)) - R(2) * sg(n) * H(n) +
                  sg(n) * frac(n * (2 * n + 1), (n + 1) * (n + 1) * (n + 1)) * C(2 * n, n) +
                  sg(n) * frac(n * (2 * n + 1), (n + 1) * (n + 1)) * C(2 * n, n) * H(n)};
    case IdentityName::MAIN16: {
      R lhs = sg((r - 2) / 2) * sum(2, h, [&](long k) {
                return frac(1, k + 1) * sum(1, k - 1, [&](long j) {
                         return sg(j - 1) * C(2 * j, j - 1) * C(h + j, 2 * j);
                       });
              });
      return {lhs, -H((r - 2) / 2)};
    }
    case IdentityName::MAIN16_FIRST:
      return {sum(1, n - 1, [&](long k) { return sg(k) * C(n + k, k - 1) * C(n + 1, k + 1); }),
              sg(n) - sg(n) * C(2 * n, n - 1)};
    case IdentityName::MAIN16_SECOND:
      return {sum(1, n - 1,
                  [&](long k) { return sg(k) * C(n + k, k - 1) * C(n + 1, k + 1) * H(k + 1); }),
              sg(n) * (H(n - 1) + H(n + 1)) - sg(n) * C(2 * n, n - 1) * H(n + 1)};
    case IdentityName::E17_LOW:
      return {sum(1, h,
                  [&](long k) {
                    return R(h + 1) * sg(k - 1) * frac(k, k + 1) * C(2 * k - 1, k - 1) *
                           C(h + k, h - k) / C(h + 1, h - 1);
                  }),
              sg(h + 1) * frac(1, h)};
    case IdentityName::GAUSS17:
      return {sum(0, n + 1, [&](long k) { return sg(k) * C(n + 1 + k, k - 1) * C(n + 2, k + 1); }),
              sg(n + 1)};
    case IdentityName::MAIN17:
      return {sum(1, n, [&](long k) { return sg(k) * C(n + k, k - 1) * C(n + 1, k + 1) * H(k + 1); }),
              sg(n) * (H(n - 1) + H(n + 1))};
    case IdentityName::G1p4:
      return {sum(0, n, [&](long k) { return sg(k) * C(2 * k, k) * C(n + k, 2 * k); }), sg(n)};
    case IdentityName::G1p22:
      return {sum(0, n, [&](long k) { return sg(k) * frac(1, k + 1) * C(2 * k, k) * C(n + k, 2 * k); }),
              R(0)};
    case IdentityName::GOULD183:
      return {R(1) + sum(1, m, [&](long j) { return sg(j) * C((r + 1) / 2, j - 1) * C(r - j, (r + 1) / 2); }),
              R(0)};
    case IdentityName::GOULD639:
      return {sum(1, (r + 1) / 2, [&](long j) { return sg(j) * C((r + 1) / 2, j - 1) * C(r - j, m); }),
              R(0)};
    default:
      throw Error(Errc::InvalidArgument,
                  std::string(identity_name(id.name)) + " is checked over F_p, not as two sides");
  }
}

bool verify_identity(IdentityId id) {
  switch (id.name) {
    case IdentityName::SUMB:
    case IdentityName::SUMB2:
    case IdentityName::ROOTS:
      require_prime(id.param);
      if (id.name == IdentityName::SUMB) check_sumb(id);
      if (id.name == IdentityName::SUMB2) check_sumb2(id);
      if (id.name == IdentityName::ROOTS) check_roots(id);
      return true;
    default: {
      auto sides = identity_sides(id);
      if (!sides_check(sides).is_zero())
        fail(id, "lhs = " + sides.first.str() + ", rhs = " + sides.second.str());
      return true;
    }
  }
}

std::vector<long> identity_batch(IdentityName id, long bound) {
  IdentityRange range = identity_range(id);
  if (std::string(range.param) == "p") return {5, 7, 11, 13};
  std::vector<long> out;
  for (long x = range.min; x <= bound; x += range.step) out.push_back(x);
  return out;
}

}  // namespace ssred
