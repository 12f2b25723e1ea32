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
#include "ssred/hecke_sampler.hpp"

#include <string>
#include <vector>

#include "ssred/errors.hpp"

namespace ssred {

GroupElt HeckeSampler::iwahori(long p) {
  long q = p * p * p * p;
  auto unit = [&] {
    long x;
    do x = below(q);
    while (x % p == 0);
    return Rational(x);
  };
  Rational s = pow(Rational(p), below(5) - 2);
  return GroupElt(s * unit(), s * Rational(below(q)), s * Rational(p * below(q)), s * unit());
}

GroupElt HeckeSampler::step(long p) {
  long l = below(p);
  switch (below(4)) {
    case 0: return GroupElt(1, 0, Rational(p * l), Rational(p));
    case 1: return GroupElt(Rational(p), Rational(l), 0, 1);
    case 2: return GroupElt::beta(p);
    default: return GroupElt(1, Rational(l), 0, 1);
  }
}

GroupElt HeckeSampler::element(long p, int depth) {
  GroupElt g = GroupElt::identity();
  for (int i = 0; i < depth; ++i) g = g * step(p);
  return g;
}

ModPVec HeckeSampler::mod_p_vec(long p, const Weight& w) {
  ModPVec v(p, w);
  for (int n = 1 + static_cast<int>(below(4)); n > 0; --n) {
    std::vector<FpElt> c;
    for (std::size_t j = 0; j < w.dim(); ++j) c.emplace_back(p, 1 + below(p - 1));
    v.add_translate(element(p, static_cast<int>(below(3))), c);
  }
  return v;
}

EVec HeckeSampler::e_vec(long p, const Weight& w) {
  EVec v(p, w);
  for (int n = 1 + static_cast<int>(below(3)); n > 0; --n) {
    std::vector<QuadElt> c;
    for (std::size_t j = 0; j < w.dim(); ++j) c.emplace_back(p, below(7) - 3, below(5) - 2);
    v.add_translate(element(p, static_cast<int>(below(3))), c);
  }
  return v;
}

namespace {

void require(bool ok, const std::string& what, const Weight& w, long p) {
  if (!ok) throw Error(Errc::CheckFailed, what + " fails for p=" + std::to_string(p) + " " + w.str());
}

}  // namespace

int check_hecke_relations(const ModPVec& v, const GroupElt& g) {
  long p = v.p();
  const Weight& w = v.weight();
  auto T = [](HeckeOp op, const ModPVec& x) { return apply_operator(op, x); };
  int n = 0;
  std::vector<HeckeOp> ops{HeckeOp::T12, HeckeOp::Tm10};
  ModPVec t12 = T(HeckeOp::T12, v);
  if ((w.s - w.t) % (p - 1) == 0) {
    ModPVec t10 = T(HeckeOp::T10, v);
    require(T(HeckeOp::T10, t10) == v, "T10^2 = 1", w, p);
    require((T(HeckeOp::T12, T(HeckeOp::T10, t12)) + t12).is_zero(), "T12 T10 T12 = -T12", w, p);
    require(T(HeckeOp::Tm10, v) == T(HeckeOp::T10, T(HeckeOp::T12, t10)), "Tm10 = T10 T12 T10", w, p);
    ops.push_back(HeckeOp::T10);
    n += 3;
  } else {
    require(T(HeckeOp::Tm10, t12).is_zero(), "Tm10 T12 = 0", w, p);
    require(T(HeckeOp::T12, T(HeckeOp::Tm10, v)).is_zero(), "T12 Tm10 = 0", w, p);
    n += 2;
  }
  ModPVec gv = translate(g, v);
  for (HeckeOp op : ops) {
    require(T(op, gv) == translate(g, T(op, v)), std::string(hecke_op_name(op)) + " equivariance", w, p);
    ++n;
  }
  return n;
}

int check_hecke_equivariance(const EVec& v, const GroupElt& g) {
  std::vector<HeckeOp> ops;
  if (v.weight().kind == Weight::Kind::Sym) ops = {HeckeOp::UpSym, HeckeOp::WpSym};
  else ops = {HeckeOp::Up, HeckeOp::Wp};
  EVec gv = translate(g, v);
  for (HeckeOp op : ops)
    require(apply_operator(op, gv) == translate(g, apply_operator(op, v)),
            std::string(hecke_op_name(op)) + " equivariance", v.weight(), v.p());
  return static_cast<int>(ops.size());
}

}  // namespace ssred
