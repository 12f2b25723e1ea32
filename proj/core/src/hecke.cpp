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
#include "ssred/hecke.hpp"

#include <sstream>
#include <tuple>

#include "ssred/errors.hpp"
#include "ssred/poly.hpp"
#include "ssred/valuation.hpp"

namespace ssred {

namespace {

long vp(const Rational& x, long p) { return vp_integer(x.num(), p) - vp_integer(x.den(), p); }

Rational ppow(long p, long e) { return pow(Rational(p), e); }

struct Vertex {
  long m;
  Rational mu;
};

// Class of the lattice spanned by the columns of g, as (p^m, mu; 0, 1).
Vertex vertex_of(const GroupElt& g, long p) {
  Rational a = g.a(), b = g.b(), c = g.c(), d = g.d();
  // Column operations over Z_(p): put the bottom entry of least valuation on the right.
  if (d.is_zero() || (!c.is_zero() && vp(c, p) < vp(d, p))) {
    std::swap(a, b);
    std::swap(c, d);
  }
  if (!c.is_zero()) a -= (c / d) * b;
  long va = vp(a, p), vd = vp(d, p);
  Rational ud = d / ppow(p, vd);
  return {va - vd, reduce_offset(b / (ud * ppow(p, vd)), va - vd, p)};
}

GroupElt lower(long p, long lambda) { return {1, 0, Rational(p * lambda), Rational(p)}; }
GroupElt upper(long p, long lambda) { return {Rational(p), Rational(lambda), 0, 1}; }

// Generators the operators translate by: 0..p-1 lower(lambda), p..2p-1 upper(lambda), 2p beta.
GroupElt generator(long p, long index) {
  if (index < p) return lower(p, index);
  if (index < 2 * p) return upper(p, index - p);
  return GroupElt::beta(p);
}

// Operators only ever canonicalize rep * generator, so memoize per thread.
const CanonicalForm& canonical_step(const CosetRep& rep, long index, long p) {
  using Key = std::tuple<long, long, CosetRep>;
  thread_local std::map<Key, CanonicalForm> cache;
  Key key{p, index, rep};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > (1u << 20)) cache.clear();
  return cache.emplace(std::move(key), canonicalize(rep.matrix(p) * generator(p, index), p)).first->second;
}

template <class S>
void add_step(InducedVec<S>& out, const CosetRep& rep, long index, const std::vector<S>& c) {
  const CanonicalForm& cf = canonical_step(rep, index, out.p());
  out.add(cf.rep, weight_apply(out.weight(), cf.h, cf.iz, c, out.p()));
}

[[noreturn]] void mismatch(HeckeOp op, const Weight& w) {
  throw Error(Errc::WeightMismatch, std::string(hecke_op_name(op)) + " is not defined on weight " + w.str());
}

template <class S>
bool all_zero(const std::vector<S>& v) {
  for (const S& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<QuadElt> mat_vec(const std::vector<std::vector<QuadElt>>& m, const std::vector<QuadElt>& v, long p) {
  std::vector<QuadElt> out(m.size(), QuadElt(p));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] = out[i] + m[i][j] * v[j];
  return out;
}

}  // namespace

GroupElt::GroupElt(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw Error(Errc::InvalidArgument, "singular group element");
}

GroupElt GroupElt::inverse() const {
  Rational D = det();
  return {Unchecked{}, d_ / D, -b_ / D, -c_ / D, a_ / D};
}

std::string GroupElt::str() const {
  return "(" + a_.str() + ", " + b_.str() + "; " + c_.str() + ", " + d_.str() + ")";
}

GroupElt operator*(const GroupElt& x, const GroupElt& y) {
  return GroupElt(GroupElt::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                  x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::optional<IZData> iz_membership(const GroupElt& g, long p) {
  long v = vp(g.det(), p);
  if (v % 2 != 0) return std::nullopt;
  Rational s = ppow(p, -v / 2);
  Rational a = s * g.a(), b = s * g.b(), c = s * g.c(), d = s * g.d();
  auto integral = [&](const Rational& x, long min) { return x.is_zero() || vp(x, p) >= min; };
  if (!integral(a, 0) || !integral(b, 0) || !integral(c, 1) || !integral(d, 0)) return std::nullopt;
  FpElt ab = FpElt::from_rational(p, a), db = FpElt::from_rational(p, d);
  if (ab.is_zero() || db.is_zero()) return std::nullopt;
  return IZData{-v / 2, ab, db};
}

GroupElt CosetRep::matrix(long p) const {
  GroupElt u(ppow(p, m), mu, 0, 1);
  return parity ? u * GroupElt::beta(p) : u;
}

std::string CosetRep::str() const {
  return std::to_string(parity) + " " + std::to_string(m) + " " + mu.str();
}

Rational reduce_offset(const Rational& mu, long m, long p) {
  if (mu.is_zero()) return 0;
  Rational x = mu / ppow(p, m);
  long v = vp(x, p);
  if (v >= 0) return 0;
  // x = A / (B p^e) with p prime to B: fractional part is (A/B mod p^e) / p^e.
  Integer pe = ipow(p, -v);
  Integer B = x.den() / pe;
  Integer A = x.num() % pe;
  if (A < 0) A += pe;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), B.get_mpz_t(), pe.get_mpz_t());
  Integer f = (A * inv) % pe;
  return ppow(p, m) * Rational(f, pe);
}

CanonicalForm canonicalize(const GroupElt& g, long p) {
  Vertex o = vertex_of(g, p), t = vertex_of(g * GroupElt::alpha(p), p);
  CosetRep rep;
  if (t.m == o.m - 1) {
    rep = {0, o.m, o.mu};
  } else if (t.m == o.m + 1) {
    rep = {1, t.m, t.mu};
  } else {
    throw Error(Errc::InvalidArgument, "origin and target of " + g.str() + " are not adjacent");
  }
  GroupElt h = rep.matrix(p).inverse() * g;
  auto iz = iz_membership(h, p);
  if (!iz) throw Error(Errc::InvalidArgument, "coset normal form failed for " + g.str());
  return {rep, h, *iz};
}

std::string Weight::str() const {
  if (kind == Kind::Sym) return "Sym^" + std::to_string(r);
  std::string s = "a^" + std::to_string(this->s) + " d^" + std::to_string(t);
  return mult == 1 ? s : s + " x" + std::to_string(mult);
}

FpElt character_value(const Weight& w, const IZData& iz, long p) {
  if (w.kind != Weight::Kind::Character) throw Error(Errc::WeightMismatch, "not a character");
  (void)p;
  return iz.a_bar.pow(w.s) * iz.d_bar.pow(w.t);
}

std::vector<std::vector<QuadElt>> sym_action(const GroupElt& g, long r, long p) {
  QuadElt scale = QuadElt::sqrt_p_power(p, -vp(g.det(), p) * r);
  std::vector<std::vector<QuadElt>> m(static_cast<std::size_t>(r + 1),
                                      std::vector<QuadElt>(static_cast<std::size_t>(r + 1), QuadElt(p)));
  Poly first({g.a(), g.c()}), second({g.b(), g.d()});
  for (long j = 0; j <= r; ++j) {
    Poly e(Rational(1));
    for (long t = 0; t < r - j; ++t) e = e * first;
    for (long t = 0; t < j; ++t) e = e * second;
    for (long i = 0; i <= r; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.coeff(i) * scale;
  }
  return m;
}

std::vector<FpElt> weight_apply(const Weight& w, const GroupElt&, const IZData& iz, const std::vector<FpElt>& v,
                                long p) {
  FpElt s = character_value(w, iz, p);
  std::vector<FpElt> out;
  out.reserve(v.size());
  for (const FpElt& x : v) out.push_back(s * x);
  return out;
}

std::vector<QuadElt> weight_apply(const Weight& w, const GroupElt& h, const IZData&, const std::vector<QuadElt>& v,
                                  long p) {
  if (w.kind == Weight::Kind::Sym) return mat_vec(sym_action(h, w.r, p), v, p);
  if (w.s != 0 || w.t != 0) throw Error(Errc::WeightMismatch, "only the trivial character is defined over E");
  return v;
}

template <class S>
void InducedVec<S>::add(const CosetRep& rep, const Coeff& c) {
  if (c.size() != w_.dim()) throw Error(Errc::InvalidArgument, "coefficient has the wrong dimension");
  auto it = support_.find(rep);
  if (it == support_.end()) {
    if (!all_zero(c)) support_.emplace(rep, c);
    return;
  }
  for (std::size_t i = 0; i < c.size(); ++i) it->second[i] = it->second[i] + c[i];
  if (all_zero(it->second)) support_.erase(it);
}

template <class S>
void InducedVec<S>::add_translate(const GroupElt& g, const Coeff& c) {
  CanonicalForm cf = canonicalize(g, p_);
  add(cf.rep, weight_apply(w_, cf.h, cf.iz, c, p_));
}

template <class S>
InducedVec<S> InducedVec<S>::operator+(const InducedVec& o) const {
  if (!(w_ == o.w_) || p_ != o.p_) throw Error(Errc::WeightMismatch, "adding vectors of different weights");
  InducedVec out = *this;
  for (const auto& [rep, c] : o.support_) out.add(rep, c);
  return out;
}

template <class S>
InducedVec<S> InducedVec<S>::scaled(const S& s) const {
  InducedVec out(p_, w_);
  for (const auto& [rep, c] : support_) {
    Coeff d;
    for (const S& x : c) d.push_back(s * x);
    out.add(rep, d);
  }
  return out;
}

template <class S>
InducedVec<S> InducedVec<S>::operator-(const InducedVec& o) const {
  InducedVec neg(o.p_, o.w_);
  for (const auto& [rep, c] : o.support_) {
    Coeff d;
    for (const S& x : c) d.push_back(-x);
    neg.add(rep, d);
  }
  return *this + neg;
}

template <class S>
std::string InducedVec<S>::dump() const {
  std::ostringstream os;
  for (const auto& [rep, c] : support_) {
    os << rep.str() << " :";
    for (const S& x : c) os << " " << x;
    os << "\n";
  }
  return os.str();
}

template <class S>
InducedVec<S> translate(const GroupElt& g, const InducedVec<S>& v) {
  InducedVec<S> out(v.p(), v.weight());
  for (const auto& [rep, c] : v.support()) out.add_translate(g * rep.matrix(v.p()), c);
  return out;
}

template class InducedVec<FpElt>;
template class InducedVec<QuadElt>;
template InducedVec<FpElt> translate(const GroupElt&, const InducedVec<FpElt>&);
template InducedVec<QuadElt> translate(const GroupElt&, const InducedVec<QuadElt>&);

const char* hecke_op_name(HeckeOp op) {
  switch (op) {
    case HeckeOp::T12: return "T12";
    case HeckeOp::Tm10: return "Tm10";
    case HeckeOp::T10: return "T10";
    case HeckeOp::Wp: return "Wp";
    case HeckeOp::Up: return "Up";
    case HeckeOp::WpSym: return "WpSym";
    case HeckeOp::UpSym: return "UpSym";
  }
  return "?";
}

ModPVec apply_operator(HeckeOp op, const ModPVec& v) {
  long p = v.p();
  const Weight& w = v.weight();
  if (w.kind != Weight::Kind::Character) mismatch(op, w);
  ModPVec out(p, w);
  switch (op) {
    case HeckeOp::T12:
    case HeckeOp::Tm10:
      for (const auto& [rep, c] : v.support()) {
        for (long l = 0; l < p; ++l) add_step(out, rep, op == HeckeOp::T12 ? l : p + l, c);
      }
      return out;
    case HeckeOp::T10: {
      if ((w.s - w.t) % (p - 1) != 0) mismatch(op, w);
      FpElt sign(p, w.s % 2 ? -1 : 1);
      for (const auto& [rep, c] : v.support()) {
        std::vector<FpElt> d;
        for (const FpElt& x : c) d.push_back(sign * x);
        add_step(out, rep, 2 * p, d);
      }
      return out;
    }
    default:
      mismatch(op, w);
  }
}

EVec apply_operator(HeckeOp op, const EVec& v) {
  long p = v.p();
  const Weight& w = v.weight();
  bool trivial = w.kind == Weight::Kind::Character && w.s == 0 && w.t == 0;
  bool sym = w.kind == Weight::Kind::Sym;
  EVec out(p, w);
  switch (op) {
    case HeckeOp::Wp:
      if (!trivial) mismatch(op, w);
      for (const auto& [rep, c] : v.support()) add_step(out, rep, 2 * p, c);
      return out;
    case HeckeOp::Up:
      if (!trivial) mismatch(op, w);
      for (const auto& [rep, c] : v.support())
        for (long l = 0; l < p; ++l) add_step(out, rep, l, c);
      return out;
    case HeckeOp::WpSym: {
      if (!sym) mismatch(op, w);
      auto binv = sym_action(GroupElt::beta(p).inverse(), w.r, p);
      for (const auto& [rep, c] : v.support())
        add_step(out, rep, 2 * p, mat_vec(binv, c, p));
      return out;
    }
    case HeckeOp::UpSym: {
      if (!sym) mismatch(op, w);
      std::vector<std::vector<std::vector<QuadElt>>> inv;
      for (long l = 0; l < p; ++l) inv.push_back(sym_action(lower(p, l).inverse(), w.r, p));
      for (const auto& [rep, c] : v.support())
        for (long l = 0; l < p; ++l)
          add_step(out, rep, l, mat_vec(inv[static_cast<std::size_t>(l)], c, p));
      return out;
    }
    default:
      mismatch(op, w);
  }
}

EVec projection(const EVec& v) {
  const Weight& w = v.weight();
  if (w.kind != Weight::Kind::Sym) throw Error(Errc::WeightMismatch, "projection needs a Sym^r weight");
  long p = v.p();
  EVec out(p, Weight::character(0, 0, w.r + 1));
  for (const auto& [rep, c] : v.support()) out.add(rep, mat_vec(sym_action(rep.matrix(p), w.r, p), c, p));
  return out;
}

}  // namespace ssred
