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
#include "ssred/wz.hpp"

#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"

namespace ssred {

namespace {

Rational sg(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }
Rational C(long n, long k) { return (n < 0 || k < 0 || k > n) ? Rational(0) : binom(n, k); }

// C(x + k + 1, k + 1) = prod_{t=1}^{k+1} (x + t) / (k+1)!
Poly x_binom(long k) {
  Poly p(Rational(1));
  for (long t = 1; t <= k + 1; ++t) p = p * Poly({Rational(t), Rational(1)});
  return Rational(1) / Rational(factorial(k + 1)) * p;
}

Poly scale(const Rational& s, const Poly& p) { return Poly(s) * p; }

Poly recurrence(long k, long n, Poly (*F)(long, long)) {
  Rational a = Rational(n * n * (n + 2) * (n + 2));
  Poly b({Rational((3 + 2 * n) * (3 + 6 * n + 2 * n * n)), Rational((3 + 2 * n) * (4 + 6 * n + 2 * n * n))});
  Rational c = Rational((n + 1) * (n + 1) * (n + 3) * (n + 3));
  return scale(a, F(k, n)) - b * F(k, n + 1) - scale(c, F(k, n + 2));
}

[[noreturn]] void fail(long k, long n, const std::string& what) {
  throw Error(Errc::CheckFailed, "WZ n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + what);
}

}  // namespace

Poly wz_summand(long k, long n) { return scale(sg(k) * C(n + k, k - 1) * C(n + 1, k + 1), x_binom(k)); }

Rational wz_certificate(long k, long n) {
  long d = (n - k + 1) * (n - k + 2);
  if (d == 0) throw Error(Errc::InvalidArgument, "certificate pole at k = " + std::to_string(k));
  return Rational(Integer(2 * (k - 1) * (k + 1) * (k + 1)) * (n + 1) * (n + 2) * (2 * n + 3), Integer(d));
}

Poly wz_product(long k, long n) {
  // C(n+1, k+1) / ((n-k+1)(n-k+2)) = C(n+3, k+1) / ((n+2)(n+3))
  Rational s = sg(k) * Rational(Integer(2 * (k - 1) * (k + 1) * (k + 1)) * (n + 1) * (2 * n + 3), Integer(n + 3)) *
               C(n + k, k - 1) * C(n + 3, k + 1);
  return scale(s, x_binom(k));
}

Poly wz_recurrence_lhs(long k, long n) { return recurrence(k, n, wz_summand); }

Poly wz_summand_variant(long k, long n) { return scale(sg(k) * C(n, k - 1) * C(n + 1, k + 1), x_binom(k)); }

Rational wz_certificate_variant(long k, long n) {
  long d = (n - k + 1) * (n - k + 2);
  if (d == 0) throw Error(Errc::InvalidArgument, "certificate pole at k = " + std::to_string(k));
  return Rational(Integer(2 * (k - 1) * (k + 1) * (k + 1)) * (n + 1) * (n + 2) * (n + 3), Integer(d));
}

bool wz_variant_holds(long k, long n) {
  Poly lhs = recurrence(k, n, wz_summand_variant);
  Poly rhs = scale(wz_certificate_variant(k + 1, n), wz_summand_variant(k + 1, n)) -
             scale(wz_certificate_variant(k, n), wz_summand_variant(k, n));
  return lhs == rhs;
}

bool wz_certificate_check(long n_max, const std::vector<long>& x_samples) {
  for (long n = 1; n <= n_max; ++n) {
    if (!wz_summand(n + 1, n).is_zero()) fail(n + 1, n, "F(n+1, n) != 0");
    if (!wz_certificate(1, n).is_zero()) fail(1, n, "R(1, n) != 0");
    Poly total;
    for (long k = 1; k <= n + 2; ++k) {
      Poly lhs = wz_recurrence_lhs(k, n);
      Poly rhs = wz_product(k + 1, n) - wz_product(k, n);
      if (!(lhs == rhs)) fail(k, n, "lhs " + lhs.str("x") + " != " + rhs.str("x"));
      if (k <= n && !(wz_product(k, n) == scale(wz_certificate(k, n), wz_summand(k, n))))
        fail(k, n, "G != F*R");
      for (long x : x_samples)
        if (lhs(Rational(x)) != rhs(Rational(x))) fail(k, n, "mismatch at x = " + std::to_string(x));
      total = total + lhs;
    }
    if (!total.is_zero()) fail(0, n, "summed recurrence " + total.str("x"));

    // d/dx at x = 0 of the summed recurrence, with S(m) = sum_k dF/dx(k, m) at 0 and
    // T(n+1) = sum_k F(k, n+1) at 0.
    auto S = [](long m) {
      Rational s = 0;
      for (long k = 1; k <= m + 2; ++k) s += wz_summand(k, m).derivative()(Rational(0));
      return s;
    };
    Rational T = 0;
    for (long k = 1; k <= n + 3; ++k) T += wz_summand(k, n + 1)(Rational(0));
    if (T != sg(n + 1)) fail(0, n, "T(0, n+1) = " + T.str());
    Rational main17 = sg(n) * (harmonic(n - 1) + harmonic(n + 1));
    if (S(n) != main17) fail(0, n, "S(n) = " + S(n).str() + ", expected " + main17.str());
    Rational e = Rational(n * n * (n + 2) * (n + 2)) * S(n) -
                 Rational((3 + 2 * n) * (4 + 6 * n + 2 * n * n)) * T -
                 Rational((3 + 2 * n) * (3 + 6 * n + 2 * n * n)) * S(n + 1) -
                 Rational((n + 1) * (n + 1) * (n + 3) * (n + 3)) * S(n + 2);
    if (!e.is_zero()) fail(0, n, "harmonic recurrence residual " + e.str());
  }
  return true;
}

}  // namespace ssred
