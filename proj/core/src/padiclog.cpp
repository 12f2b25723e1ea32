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
#include "ssred/padiclog.hpp"

#include "ssred/combinatorics.hpp"
#include "ssred/errors.hpp"
#include "ssred/linalg.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

namespace {

long floor_log(long p, long k) {
  long e = 0;
  for (long q = p; q <= k; q *= p) ++e;
  return e;
}

[[noreturn]] void fail(int c, long p, long n, const std::string& what) {
  throw Error(Errc::CheckFailed, "coefficient case " + std::to_string(c) + " p=" + std::to_string(p) +
                                     " n=" + std::to_string(n) + ": " + what);
}

}  // namespace

Integer log_one_unit(const Integer& u, long p, int N) {
  long kmax = 1;
  while (kmax - floor_log(p, kmax) < N) ++kmax;
  long emax = floor_log(p, kmax);
  Integer mod_n = ipow(p, N), mod_m = ipow(p, N + emax);
  Integer t = (u - 1) % mod_m;
  if (t < 0) t += mod_m;
  if (t % p != 0) throw Error(Errc::InvalidArgument, "log series needs u = 1 mod p");
  Integer sum = 0, tk = 1;
  for (long k = 1; k < kmax; ++k) {
    tk = (tk * t) % mod_m;
    long e = 0;
    long kk = k;
    while (kk % p == 0) {
      kk /= p;
      ++e;
    }
    Integer term = tk / ipow(p, e);  // exact: v(T^k) >= k >= e
    term = (term * inverse_mod(Integer(kk), mod_n)) % mod_n;
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  sum %= mod_n;
  if (sum < 0) sum += mod_n;
  return sum;
}

LogValue log_L_eval(const Rational& z, const QuadElt& L, int N) {
  if (z.is_zero()) throw Error(Errc::ZeroArgument, "log_L(0)");
  long p = L.p();
  PadicTrunc pz = PadicTrunc::from_rational(p, z, N + 8);
  long v = pz.valuation();
  Integer w = pz.unit();
  PadicTrunc zeta = teichmuller(w % p, p, N + 8);
  Integer m = ipow(p, N + 8);
  Integer u = (w * inverse_mod(zeta.unit(), m)) % m;
  Integer l = log_one_unit(u, p, N);
  return {Rational(v) * L + Rational(l), N};
}

bool congruent(const LogValue& a, const LogValue& b) {
  int n = std::min(a.precision, b.precision);
  return vp_quad(a.value - b.value) >= HalfInt::integer(n);
}

LogPoly LogPoly::log_term(const Poly& coeff, const Rational& base) {
  LogPoly f;
  f.logs_[base] = coeff;
  f.normalize();
  return f;
}

LogPoly LogPoly::rational(const Poly& q) {
  LogPoly f;
  f.poly_ = q;
  return f;
}

LogPoly LogPoly::pole(const Rational& c, const Rational& base, long order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "pole order must be >= 1");
  LogPoly f;
  f.poles_[base][order] = c;
  f.normalize();
  return f;
}

void LogPoly::normalize() {
  std::erase_if(logs_, [](const auto& kv) { return kv.second.is_zero(); });
  for (auto& [base, terms] : poles_) std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(poles_, [](const auto& kv) { return kv.second.empty(); });
}

LogPoly operator+(const LogPoly& a, const LogPoly& b) {
  LogPoly f = a;
  for (const auto& [base, c] : b.logs_) f.logs_[base] = f.logs_[base] + c;
  f.poly_ = f.poly_ + b.poly_;
  for (const auto& [base, terms] : b.poles_)
    for (const auto& [m, c] : terms) f.poles_[base][m] += c;
  f.normalize();
  return f;
}

LogPoly operator*(const Rational& s, const LogPoly& a) {
  LogPoly f;
  for (const auto& [base, c] : a.logs_) f.logs_[base] = Poly(s) * c;
  f.poly_ = Poly(s) * a.poly_;
  for (const auto& [base, terms] : a.poles_)
    for (const auto& [m, c] : terms) f.poles_[base][m] = s * c;
  f.normalize();
  return f;
}

std::string LogPoly::str() const {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
  for (const auto& [base, c] : logs_)
    add("(" + c.str() + ")*log_L(z - " + base.str() + ")");
  if (!poly_.is_zero()) add(poly_.str());
  for (const auto& [base, terms] : poles_)
    for (const auto& [m, c] : terms) add("(" + c.str() + ")*(z - " + base.str() + ")^-" + std::to_string(m));
  return out.empty() ? "0" : out;
}

LogPoly formal_derivative(const LogPoly& f) {
  LogPoly d = LogPoly::rational(f.polynomial_part().derivative());
  for (const auto& [base, c] : f.log_terms()) {
    // (P log(z - a))' = P' log(z - a) + Q + P(a)/(z - a) where P = Q (z - a) + P(a)
    auto [q, rem] = c.divide_linear(base);
    d = d + LogPoly::log_term(c.derivative(), base) + LogPoly::rational(q);
    if (!rem.is_zero()) d = d + LogPoly::pole(rem, base, 1);
  }
  for (const auto& [base, terms] : f.poles())
    for (const auto& [m, c] : terms) d = d + LogPoly::pole(Rational(-m) * c, base, m + 1);
  return d;
}

bool check_derivative_formula(long n, long j) {
  if (j < 0 || j > n) throw Error(Errc::InvalidArgument, "need 0 <= j <= n");
  LogPoly f = LogPoly::log_term(Poly::monomial(1, n), 0);
  for (long t = 0; t < j; ++t) f = formal_derivative(f);
  Rational s = Rational(factorial(n)) / Rational(factorial(n - j));
  LogPoly want = LogPoly::log_term(Poly::monomial(s, n - j), 0) +
                 LogPoly::rational(Poly::monomial(s * (harmonic(n) - harmonic(n - j)), n - j));
  return f == want;
}

std::vector<Rational> solve_coefficients(int case_no, long p, long n) {
  require_prime(p);
  switch (case_no) {
    case 1: {
      std::vector<Rational> v(static_cast<std::size_t>(p), Rational(1));
      v[0] = Rational(1 - p);
      return v;
    }
    case 2: {
      if (n < 1 || n > p - 1) throw Error(Errc::InvalidArgument, "case 2 needs 1 <= n <= p-1");
      std::size_t sz = static_cast<std::size_t>(n + 1);
      RatMatrix a(sz, std::vector<Rational>(sz)), b(sz, std::vector<Rational>(1));
      for (long j = 0; j <= n; ++j) {
        for (long i = 0; i <= n; ++i)
          a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = (j == 0) ? Rational(1) : pow(Rational(i), j);
        b[static_cast<std::size_t>(j)][0] = pow(Rational(p), j);
      }
      RatMatrix x = solve_exact(a, b);
      std::vector<Rational> out;
      for (const auto& row : x) out.push_back(row[0]);
      out.push_back(Rational(-1));
      return out;
    }
    case 3: {
      std::size_t sz = static_cast<std::size_t>(p - 1);
      RatMatrix a(sz, std::vector<Rational>(sz)), b(sz, std::vector<Rational>(1));
      for (long j = 0; j <= p - 2; ++j) {
        for (long i = 1; i <= p - 1; ++i)
          a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] = pow(Rational(i), j);
        b[static_cast<std::size_t>(j)][0] = j == 0 ? Rational(-1) : Rational(0);
      }
      RatMatrix x = solve_exact(a, b);
      std::vector<Rational> out{Rational(1)};
      for (const auto& row : x) out.push_back(row[0]);
      return out;
    }
  }
  throw Error(Errc::InvalidArgument, "coefficient case must be 1, 2 or 3");
}

bool check_coefficients(int case_no, long p, long n, int N) {
  std::vector<Rational> lam = solve_coefficients(case_no, p, n);
  auto moment = [&](const std::vector<long>& nodes, long j) {
    Rational s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += lam[i] * (j == 0 ? Rational(1) : pow(Rational(nodes[i]), j));
    return s;
  };
  switch (case_no) {
    case 1: {
      Integer m = ipow(p, N);
      for (long j = 0; j <= p - 2; ++j) {
        Integer s = 0;
        for (long i = 0; i < p; ++i) {
          Integer node = teichmuller(i, p, N).residue(N), v;
          if (j == 0) v = 1;
          else mpz_powm_ui(v.get_mpz_t(), node.get_mpz_t(), static_cast<unsigned long>(j), m.get_mpz_t());
          s += rational_mod(lam[static_cast<std::size_t>(i)], m) * v;
        }
        if (s % m != 0) fail(1, p, n, "moment j=" + std::to_string(j) + " is nonzero mod p^N");
      }
      break;
    }
    case 2: {
      std::vector<long> nodes;
      for (long i = 0; i <= n; ++i) nodes.push_back(i);
      nodes.push_back(p);
      for (long j = 0; j <= n; ++j)
        if (!moment(nodes, j).is_zero()) fail(2, p, n, "moment j=" + std::to_string(j) + " is nonzero");
      for (long i = 0; i <= n + 1; ++i) {
        const Rational& l = lam[static_cast<std::size_t>(i)];
        if (vp_rational(l, p) < HalfInt::integer(0)) fail(2, p, n, "lambda not p-integral");
        long want = i == 0 ? 1 : (i == n + 1 ? -1 : 0);
        if (!(FpElt::from_rational(p, l) == FpElt(p, want)))
          fail(2, p, n, "lambda_" + std::to_string(i) + " = " + l.str() + " has the wrong residue");
      }
      break;
    }
    case 3: {
      std::vector<long> nodes;
      for (long i = 0; i < p; ++i) nodes.push_back(i);
      for (long j = 0; j <= p - 2; ++j)
        if (!moment(nodes, j).is_zero()) fail(3, p, n, "moment j=" + std::to_string(j) + " is nonzero");
      for (const Rational& l : lam) {
        if (vp_rational(l, p) < HalfInt::integer(0)) fail(3, p, n, "lambda not p-integral");
        if (!(FpElt::from_rational(p, l) == FpElt(p, 1))) fail(3, p, n, "lambda " + l.str() + " != 1 mod p");
      }
      break;
    }
    default:
      throw Error(Errc::InvalidArgument, "coefficient case must be 1, 2 or 3");
  }
  return true;
}

}  // namespace ssred
