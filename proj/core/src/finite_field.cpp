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
#include "ssred/finite_field.hpp"

#include "ssred/errors.hpp"
#include "ssred/padic.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

void same_field(long p, long q) {
  if (p != q) throw Error(Errc::InvalidArgument, "mixed characteristics");
}

}  // namespace

FpElt::FpElt(long p, long v) : p_(p), v_(v % p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "bad modulus");
  if (v_ < 0) v_ += p;
}

FpElt FpElt::from_rational(long p, const Rational& x) {
  Integer m = p;
  Integer r = rational_mod(x, m);
  return FpElt(p, r.get_si());
}

FpElt operator+(const FpElt& a, const FpElt& b) {
  same_field(a.p_, b.p_);
  return FpElt(a.p_, a.v_ + b.v_);
}

FpElt operator-(const FpElt& a, const FpElt& b) {
  same_field(a.p_, b.p_);
  return FpElt(a.p_, a.v_ - b.v_);
}

FpElt operator*(const FpElt& a, const FpElt& b) {
  same_field(a.p_, b.p_);
  return FpElt(a.p_, mulmod(a.v_, b.v_, a.p_));
}

FpElt FpElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  long r = 1 % p_, b = v_;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p_);
    b = mulmod(b, b, p_);
    e >>= 1;
  }
  return FpElt(p_, r);
}

FpElt FpElt::inverse() const {
  if (v_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero in F_p");
  return pow(p_ - 2);
}

bool FpElt::is_square() const { return v_ == 0 || pow((p_ - 1) / 2).value() == 1; }

// Tonelli-Shanks.
std::optional<FpElt> FpElt::sqrt() const {
  if (v_ == 0) return *this;
  if (!is_square()) return std::nullopt;
  long q = p_ - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  FpElt z(p_, smallest_nonresidue(p_));
  FpElt c = z.pow(q), t = pow(q), r = pow((q + 1) / 2);
  long m = s;
  while (t.value() != 1) {
    long i = 0;
    FpElt t2 = t;
    while (t2.value() != 1) {
      t2 = t2 * t2;
      ++i;
    }
    FpElt b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  if (r.value() > p_ - r.value()) r = -r;
  return r;
}

long smallest_nonresidue(long p) {
  for (long d = 2; d < p; ++d)
    if (!FpElt(p, d).is_square()) return d;
  throw Error(Errc::InvalidArgument, "no quadratic non-residue mod " + std::to_string(p));
}

Fp2Elt::Fp2Elt(long p, long c0, long c1)
    : c0_(p, c0), c1_(p, c1), d_(p, smallest_nonresidue(p)) {}

Fp2Elt operator+(const Fp2Elt& a, const Fp2Elt& b) {
  return Fp2Elt(a.c0_ + b.c0_, a.c1_ + b.c1_, a.d_);
}

Fp2Elt operator-(const Fp2Elt& a, const Fp2Elt& b) {
  return Fp2Elt(a.c0_ - b.c0_, a.c1_ - b.c1_, a.d_);
}

Fp2Elt operator*(const Fp2Elt& a, const Fp2Elt& b) {
  return Fp2Elt(a.c0_ * b.c0_ + a.d_ * a.c1_ * b.c1_, a.c0_ * b.c1_ + a.c1_ * b.c0_, a.d_);
}

Fp2Elt Fp2Elt::inverse() const {
  FpElt norm = c0_ * c0_ - d_ * c1_ * c1_;
  if (norm.is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero in F_p2");
  FpElt ni = norm.inverse();
  return Fp2Elt(c0_ * ni, -c1_ * ni, d_);
}

Fp2Elt Fp2Elt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Fp2Elt r(p(), 1, 0), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string Fp2Elt::str() const {
  if (in_base_field()) return std::to_string(c0_.value());
  return std::to_string(c0_.value()) + "+" + std::to_string(c1_.value()) + "*t";
}

std::pair<Fp2Elt, Fp2Elt> fp2_solve_monic_quadratic(const FpElt& c) {
  long p = c.p();
  FpElt half = FpElt(p, 2).inverse();
  FpElt disc = c * c - FpElt(p, 4);
  if (auto s = disc.sqrt()) {
    Fp2Elt r1((c + *s) * half), r2((c - *s) * half);
    return {r1, r2};
  }
  // disc = d * s^2 with s in F_p, so sqrt(disc) = s*t.
  long d = smallest_nonresidue(p);
  FpElt s = *(disc / FpElt(p, d)).sqrt();
  FpElt h = s * half, m = c * half;
  return {Fp2Elt(p, m.value(), h.value()), Fp2Elt(p, m.value(), (-h).value())};
}

}  // namespace ssred
