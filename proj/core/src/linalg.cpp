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
#include "ssred/linalg.hpp"

#include "ssred/errors.hpp"

namespace ssred {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw Error(Errc::InvalidArgument, "dimension mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size();
  if (b.size() != n) throw Error(Errc::InvalidArgument, "dimension mismatch");
  std::size_t m = n ? b[0].size() : 0, w = n + m;

  // Clear denominators row by row.
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(w));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || b[i].size() != m) throw Error(Errc::InvalidArgument, "dimension mismatch");
    Integer l = 1;
    for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (const auto& x : b[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (std::size_t j = 0; j < w; ++j) {
      const Rational& x = j < n ? a[i][j] : b[i][j - n];
      M[i][j] = x.num() * (l / x.den());
    }
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && M[piv][k] == 0) ++piv;
    if (piv == n) throw Error(Errc::Singular, "matrix is singular");
    if (piv != k) std::swap(M[piv], M[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        Integer t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }

  RatMatrix x(n, std::vector<Rational>(m));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational s(M[i][n + c]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (M[i][j] != 0) s -= Rational(M[i][j]) * x[j][c];
      x[i][c] = s / Rational(M[i][i]);
    }
  }
  return x;
}

std::string AffineInL::str() const {
  if (c1.is_zero()) return c0.str();
  std::string l = c1 == Rational(1) ? "L" : (c1 == Rational(-1) ? "-L" : c1.str() + "*L");
  if (c0.is_zero()) return l;
  return l + (c0.sign() < 0 ? " - " + (-c0).str() : " + " + c0.str());
}

std::vector<AffineInL> solve_affine(const RatMatrix& a, const std::vector<AffineInL>& rhs) {
  RatMatrix b(rhs.size(), std::vector<Rational>(2));
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = {rhs[i].c0, rhs[i].c1};
  RatMatrix x = solve_exact(a, b);
  std::vector<AffineInL> out;
  out.reserve(x.size());
  for (const auto& row : x) out.push_back({row[0], row[1]});
  return out;
}

std::vector<AffineInL> residual(const RatMatrix& a, const std::vector<AffineInL>& x,
                                const std::vector<AffineInL>& rhs) {
  std::vector<AffineInL> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    AffineInL s{0, 0};
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero()) s = s + a[i][j] * x[j];
    out.push_back(s - rhs[i]);
  }
  return out;
}

}  // namespace ssred
