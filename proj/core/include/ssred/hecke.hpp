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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssred/finite_field.hpp"
#include "ssred/quad.hpp"
#include "ssred/rational.hpp"

namespace ssred {

class GroupElt {
 public:
  GroupElt(Rational a, Rational b, Rational c, Rational d);
  static GroupElt identity() { return {1, 0, 0, 1}; }
  static GroupElt scalar(const Rational& x) { return {x, 0, 0, x}; }
  static GroupElt alpha(long p) { return {1, 0, 0, p}; }
  static GroupElt beta(long p) { return {0, 1, p, 0}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  Rational det() const { return a_ * d_ - b_ * c_; }
  GroupElt inverse() const;
  std::string str() const;

  friend GroupElt operator*(const GroupElt& x, const GroupElt& y);
  friend bool operator==(const GroupElt&, const GroupElt&) = default;

 private:
  struct Unchecked {};
  GroupElt(Unchecked, Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  Rational a_, b_, c_, d_;
};

// h = p^(-t) h' with h' in the Iwahori subgroup; a_bar, d_bar the diagonal of h' mod p.
struct IZData {
  long t;
  FpElt a_bar;
  FpElt d_bar;
};
std::optional<IZData> iz_membership(const GroupElt& g, long p);

// The coset (p^m, mu; 0, 1) beta^parity IZ, mu in Z[1/p] with 0 <= mu < p^m
// (mu = 0 when m <= 0).
struct CosetRep {
  int parity;
  long m;
  Rational mu;

  GroupElt matrix(long p) const;
  std::string str() const;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend std::strong_ordering operator<=>(const CosetRep& x, const CosetRep& y) {
    if (auto c = x.parity <=> y.parity; c != 0) return c;
    if (auto c = x.m <=> y.m; c != 0) return c;
    return x.mu <=> y.mu;
  }
};

// Representative of mu + p^m Z_p in Z[1/p] ∩ [0, p^m).
Rational reduce_offset(const Rational& mu, long m, long p);

// g = rep.matrix(p) * h with h in IZ.
struct CanonicalForm {
  CosetRep rep;
  GroupElt h;
  IZData iz;
};
CanonicalForm canonicalize(const GroupElt& g, long p);

// Character a^s d^t (values in F_p, or E when s = t = 0) acting on `mult`
// copies, or Sym^r twisted by |det|^(r/2) with coefficients in Q(sqrt(p)).
struct Weight {
  enum class Kind { Character, Sym };
  Kind kind = Kind::Character;
  long s = 0;
  long t = 0;
  long r = 0;
  long mult = 1;

  static Weight character(long s, long t, long mult = 1) { return {Kind::Character, s, t, 0, mult}; }
  static Weight sym(long r) { return {Kind::Sym, 0, 0, r, 1}; }
  std::size_t dim() const { return static_cast<std::size_t>(kind == Kind::Sym ? r + 1 : mult); }
  std::string str() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

FpElt character_value(const Weight& w, const IZData& iz, long p);

// (r+1)x(r+1) matrix of |det g|^(r/2) Sym^r(g) on the basis X^(r-j) Y^j, where
// (g.P)(X, Y) = P((X, Y) g).
std::vector<std::vector<QuadElt>> sym_action(const GroupElt& g, long r, long p);

template <class S>
class InducedVec {
 public:
  using Coeff = std::vector<S>;

  InducedVec(long p, Weight w) : p_(p), w_(w) {}

  long p() const { return p_; }
  const Weight& weight() const { return w_; }
  const std::map<CosetRep, Coeff>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  // Accumulates c at a canonical rep; zero entries are dropped.
  void add(const CosetRep& rep, const Coeff& c);
  // Adds [[g, c]] for an arbitrary group element.
  void add_translate(const GroupElt& g, const Coeff& c);

  InducedVec operator+(const InducedVec& o) const;
  InducedVec operator-(const InducedVec& o) const;
  InducedVec scaled(const S& s) const;
  friend bool operator==(const InducedVec& x, const InducedVec& y) {
    return x.p_ == y.p_ && x.w_ == y.w_ && x.support_ == y.support_;
  }

  // One line per coset, ordered by (parity, m, mu).
  std::string dump() const;

 private:
  long p_;
  Weight w_;
  std::map<CosetRep, Coeff> support_;
};

using ModPVec = InducedVec<FpElt>;
using EVec = InducedVec<QuadElt>;

// Weight action of h in IZ on a coefficient vector.
std::vector<FpElt> weight_apply(const Weight& w, const GroupElt& h, const IZData& iz, const std::vector<FpElt>& v, long p);
std::vector<QuadElt> weight_apply(const Weight& w, const GroupElt& h, const IZData& iz, const std::vector<QuadElt>& v, long p);

// Left translation g.[[c, v]] = [[g c, v]].
template <class S>
InducedVec<S> translate(const GroupElt& g, const InducedVec<S>& v);

enum class HeckeOp { T12, Tm10, T10, Wp, Up, WpSym, UpSym };
const char* hecke_op_name(HeckeOp op);

// T12, Tm10, T10 act on mod-p characters (T10 only when s = t mod p-1);
// Wp, Up on the trivial character over E; WpSym, UpSym on Sym^r over E.
// Anything else throws WeightMismatch.
ModPVec apply_operator(HeckeOp op, const ModPVec& v);
EVec apply_operator(HeckeOp op, const EVec& v);

// [[g, P]] -> g.P (x) [[g, 1]]: from ind Sym^r to Sym^r (x) ind 1.
EVec projection(const EVec& v);

}  // namespace ssred
