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
#include <gtest/gtest.h>

#include <set>

#include "ssred/errors.hpp"
#include "ssred/hecke.hpp"
#include "test_support.hpp"

using namespace ssred;

namespace {

// ---- oracle: lattices and edges of the tree, independent of canonicalize ----

long val(const Rational& x, long p) {
  long v = 0;
  Integer n = x.num(), d = x.den();
  while (n % p == 0) n /= p, ++v;
  while (d % p == 0) d /= p, --v;
  return v;
}

bool integral(const Rational& x, long p) { return x.is_zero() || val(x, p) >= 0; }

// The column lattices of g1 and g2 are homothetic.
bool same_vertex(const GroupElt& g1, const GroupElt& g2, long p) {
  GroupElt h = g1.inverse() * g2;
  long v = val(h.det(), p);
  if (v % 2) return false;
  Rational s = pow(Rational(p), -v / 2);
  return integral(s * h.a(), p) && integral(s * h.b(), p) && integral(s * h.c(), p) && integral(s * h.d(), p);
}

// Coset gIZ as the oriented edge from the lattice of g to that of g*alpha.
struct Edge {
  GroupElt from, to;
};
Edge edge_of(const GroupElt& g, long p) { return {g, g * GroupElt::alpha(p)}; }
bool same_edge(const Edge& a, const Edge& b, long p) {
  return same_vertex(a.from, b.from, p) && same_vertex(a.to, b.to, p);
}

// The p + 1 neighbours of the vertex of g: its index-p sublattices.
std::vector<GroupElt> neighbours(const GroupElt& g, long p) {
  std::vector<GroupElt> out;
  for (long l = 0; l < p; ++l) out.push_back(g * GroupElt(Rational(p), Rational(l), 0, 1));
  out.push_back(g * GroupElt(1, 0, 0, Rational(p)));
  return out;
}

// ---- random data ----

ssred::testing::Random R(17);

long rnd(long n) { return R.below(n); }
GroupElt random_iwahori(long p) { return R.iwahori(p); }
GroupElt random_element(long p, int depth) { return R.element(p, depth); }
ModPVec random_vec(long p, const Weight& w) { return R.mod_p_vec(p, w); }

}  // namespace

TEST(Hecke, IwahoriMembership) {
  auto id = iz_membership(GroupElt::identity(), 5);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->t, 0);
  EXPECT_EQ(id->a_bar.value(), 1);
  EXPECT_EQ(id->d_bar.value(), 1);
  EXPECT_FALSE(iz_membership(GroupElt::beta(5), 5));
  auto sc = iz_membership(GroupElt::scalar(5), 5);
  ASSERT_TRUE(sc);
  EXPECT_EQ(sc->t, -1);
  EXPECT_EQ(sc->a_bar.value(), 1);
  EXPECT_FALSE(iz_membership(GroupElt(1, 0, 1, 1), 5));
  EXPECT_FALSE(iz_membership(GroupElt(5, 0, 0, 1), 5));
  auto h = iz_membership(GroupElt(3, 7, 10, 2), 5);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->a_bar.value(), 3);
  EXPECT_EQ(h->d_bar.value(), 2);
}

TEST(Hecke, ReduceOffset) {
  EXPECT_EQ(reduce_offset(Rational(7), 1, 5), Rational(2));
  EXPECT_EQ(reduce_offset(Rational(7), 0, 5), Rational(0));
  EXPECT_EQ(reduce_offset(Rational(Integer(1), Integer(25)), -1, 5), Rational(Integer(1), Integer(25)));
  EXPECT_EQ(reduce_offset(Rational(Integer(6), Integer(5)), -1, 5), Rational(0));
  EXPECT_EQ(reduce_offset(Rational(-1), 2, 5), Rational(24));
}

TEST(Hecke, CanonicalExample) {
  for (long p : {5L, 7L})
    for (long l = 0; l < p; ++l) {
      GroupElt g = GroupElt(Rational(p), Rational(l), 0, 1) * GroupElt(1, 0, Rational(p), 1);
      CanonicalForm cf = canonicalize(g, p);
      EXPECT_EQ(cf.rep, (CosetRep{0, 1, Rational(l)}));
      // The Iwahori factor is (1, 0; p, 1): both diagonal residues are 1.
      EXPECT_EQ(cf.iz.a_bar.value(), 1);
      EXPECT_EQ(cf.iz.d_bar.value(), 1);
      EXPECT_EQ(cf.rep.matrix(p) * cf.h, g);
    }
}

TEST(Hecke, CanonicalFormAgainstTreeOracle) {
  for (long p : {5L, 7L}) {
    std::vector<CosetRep> reps;
    std::vector<GroupElt> elts;
    for (int t = 0; t < 300; ++t) {
      GroupElt g = random_element(p, static_cast<int>(rnd(4))) * random_iwahori(p);
      CanonicalForm cf = canonicalize(g, p);
      EXPECT_EQ(cf.rep.matrix(p) * cf.h, g);
      EXPECT_TRUE(same_edge(edge_of(cf.rep.matrix(p), p), edge_of(g, p), p));
      EXPECT_EQ(canonicalize(cf.rep.matrix(p), p).rep, cf.rep);
      reps.push_back(cf.rep);
      elts.push_back(g);
    }
    // Uniqueness: same edge implies same representative and conversely.
    for (std::size_t i = 0; i < reps.size(); i += 3)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_EQ(reps[i] == reps[j], same_edge(edge_of(elts[i], p), edge_of(elts[j], p), p));
  }
}

TEST(Hecke, CosetInvarianceAndMultipliers) {
  for (long p : {5L, 7L}) {
    Weight w = Weight::character(2, 3);
    for (int t = 0; t < 1000; ++t) {
      GroupElt g = random_element(p, static_cast<int>(rnd(4)));
      GroupElt h = random_iwahori(p);
      CanonicalForm a = canonicalize(g, p), b = canonicalize(g * h, p);
      EXPECT_EQ(a.rep, b.rep);
      auto hz = iz_membership(h, p);
      ASSERT_TRUE(hz);
      EXPECT_EQ(character_value(w, b.iz, p), character_value(w, a.iz, p) * character_value(w, *hz, p));
    }
  }
}

TEST(Hecke, Tm10OnIdentity) {
  for (long p : {5L, 7L}) {
    ModPVec v(p, Weight::character(1, 4));
    v.add_translate(GroupElt::identity(), {FpElt(p, 1)});
    ModPVec out = apply_operator(HeckeOp::Tm10, v);
    ASSERT_EQ(out.support().size(), static_cast<std::size_t>(p));
    for (const auto& [rep, c] : out.support()) {
      EXPECT_EQ(c[0].value(), 1);
      bool found = false;
      for (long l = 0; l < p; ++l)
        found |= same_edge(edge_of(rep.matrix(p), p), edge_of(GroupElt(Rational(p), Rational(l), 0, 1), p), p);
      EXPECT_TRUE(found);
    }
  }
}

TEST(Hecke, T10SquaresToOne) {
  for (long s = 0; s < 4; ++s) {
    ModPVec v(5, Weight::character(s, s));
    v.add_translate(GroupElt::identity(), {FpElt(5, 3)});
    ModPVec once = apply_operator(HeckeOp::T10, v);
    ASSERT_EQ(once.support().size(), 1u);
    EXPECT_EQ(once.support().begin()->second[0].value(), s % 2 ? 2 : 3);
    EXPECT_EQ(apply_operator(HeckeOp::T10, once), v);
  }
}

// Up moves an edge o -> t to the p edges t -> x with x a neighbour of t other than o.
TEST(Hecke, UpIsTheSuccessorSum) {
  for (long p : {5L, 7L}) {
    for (int t = 0; t < 20; ++t) {
      GroupElt g = random_element(p, static_cast<int>(rnd(3)));
      EVec v(p, Weight::character(0, 0));
      v.add_translate(g, {QuadElt(p, 1)});
      EVec up = apply_operator(HeckeOp::Up, v);
      ASSERT_EQ(up.support().size(), static_cast<std::size_t>(p));
      Edge e = edge_of(g, p);
      std::set<int> hit;
      auto nb = neighbours(e.to, p);
      for (const auto& [rep, c] : up.support()) {
        EXPECT_EQ(c[0], QuadElt(p, 1));
        Edge f = edge_of(rep.matrix(p), p);
        EXPECT_TRUE(same_vertex(f.from, e.to, p));
        EXPECT_FALSE(same_vertex(f.to, e.from, p));
        for (std::size_t n = 0; n < nb.size(); ++n)
          if (same_vertex(f.to, nb[n], p)) hit.insert(static_cast<int>(n));
      }
      EXPECT_EQ(hit.size(), static_cast<std::size_t>(p));
      EVec wp = apply_operator(HeckeOp::Wp, up);
      EXPECT_EQ(wp.support().size(), static_cast<std::size_t>(p));
      // Wp reverses each edge.
      EXPECT_EQ(apply_operator(HeckeOp::Wp, wp), up);
    }
  }
}

TEST(Hecke, CommutativeRelations) {
  for (long p : {5L, 7L})
    for (long s = 0; s < p - 1; ++s)
      for (long t = 0; t < p - 1; ++t) {
        if ((s - t) % (p - 1) == 0) continue;
        Weight w = Weight::character(s, t);
        for (int n = 0; n < 5; ++n) {
          ModPVec v = random_vec(p, w);
          EXPECT_TRUE(apply_operator(HeckeOp::Tm10, apply_operator(HeckeOp::T12, v)).is_zero());
          EXPECT_TRUE(apply_operator(HeckeOp::T12, apply_operator(HeckeOp::Tm10, v)).is_zero());
        }
      }
}

TEST(Hecke, NonCommutativeRelations) {
  for (long p : {5L, 7L})
    for (long s = 0; s < p - 1; ++s) {
      Weight w = Weight::character(s, s);
      for (int n = 0; n < 5; ++n) {
        ModPVec v = random_vec(p, w);
        auto T = [](HeckeOp op, const ModPVec& x) { return apply_operator(op, x); };
        EXPECT_EQ(T(HeckeOp::T10, T(HeckeOp::T10, v)), v);
        EXPECT_TRUE((T(HeckeOp::T12, T(HeckeOp::T10, T(HeckeOp::T12, v))) + T(HeckeOp::T12, v)).is_zero());
        EXPECT_EQ(T(HeckeOp::Tm10, v), T(HeckeOp::T10, T(HeckeOp::T12, T(HeckeOp::T10, v))));
      }
    }
}

TEST(Hecke, Equivariance) {
  for (long p : {5L, 7L}) {
    for (int n = 0; n < 10; ++n) {
      GroupElt g = random_element(p, 2) * GroupElt(1, Rational(rnd(p * p)), 0, 1) * random_iwahori(p);
      ModPVec v = random_vec(p, Weight::character(3, 3));
      for (HeckeOp op : {HeckeOp::T12, HeckeOp::Tm10, HeckeOp::T10})
        EXPECT_EQ(apply_operator(op, translate(g, v)), translate(g, apply_operator(op, v))) << hecke_op_name(op);
      EVec e(p, Weight::character(0, 0));
      e.add_translate(random_element(p, 2), {QuadElt(p, 2, 1)});
      for (HeckeOp op : {HeckeOp::Up, HeckeOp::Wp})
        EXPECT_EQ(apply_operator(op, translate(g, e)), translate(g, apply_operator(op, e))) << hecke_op_name(op);
      EVec s(p, Weight::sym(2));
      s.add_translate(random_element(p, 2), {QuadElt(p, 1), QuadElt(p, 0, 1), QuadElt(p, 3)});
      for (HeckeOp op : {HeckeOp::UpSym, HeckeOp::WpSym})
        EXPECT_EQ(apply_operator(op, translate(g, s)), translate(g, apply_operator(op, s))) << hecke_op_name(op);
    }
  }
}

TEST(Hecke, SymActionIsAHomomorphism) {
  const long p = 5, r = 3;
  for (int t = 0; t < 30; ++t) {
    GroupElt g = random_element(p, 2) * random_iwahori(p), h = random_element(p, 2);
    auto A = sym_action(g, r, p), B = sym_action(h, r, p), C = sym_action(g * h, r, p);
    for (long i = 0; i <= r; ++i)
      for (long j = 0; j <= r; ++j) {
        QuadElt s(p);
        for (long m = 0; m <= r; ++m) s = s + A[i][m] * B[m][j];
        EXPECT_EQ(s, C[i][j]);
      }
  }
}

TEST(Hecke, ProjectionIntertwines) {
  for (long r : {1L, 2L, 4L}) {
    EVec v(5, Weight::sym(r));
    std::vector<QuadElt> c;
    for (long j = 0; j <= r; ++j) c.emplace_back(5, Rational(j + 1), Rational(j % 2));
    v.add_translate(GroupElt::identity(), c);
    v.add_translate(random_element(5, 2), c);
    EXPECT_EQ(projection(apply_operator(HeckeOp::UpSym, v)), apply_operator(HeckeOp::Up, projection(v)));
    EXPECT_EQ(projection(apply_operator(HeckeOp::WpSym, v)), apply_operator(HeckeOp::Wp, projection(v)));
  }
}

TEST(Hecke, WeightMismatch) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::CheckFailed;
  };
  ModPVec v(5, Weight::character(1, 2));
  v.add_translate(GroupElt::identity(), {FpElt(5, 1)});
  EXPECT_EQ(code([&] { apply_operator(HeckeOp::T10, v); }), Errc::WeightMismatch);
  EXPECT_EQ(code([&] { apply_operator(HeckeOp::Up, v); }), Errc::WeightMismatch);
  EVec e(5, Weight::sym(2));
  EXPECT_EQ(code([&] { apply_operator(HeckeOp::Up, e); }), Errc::WeightMismatch);
  EVec f(5, Weight::character(0, 0));
  EXPECT_EQ(code([&] { apply_operator(HeckeOp::UpSym, f); }), Errc::WeightMismatch);
  EXPECT_EQ(code([&] { ModPVec(5, Weight::character(0, 0)) + v; }), Errc::WeightMismatch);
}

TEST(Hecke, DumpIsOrdered) {
  ModPVec v(5, Weight::character(0, 0));
  v.add_translate(GroupElt::beta(5), {FpElt(5, 2)});
  v.add_translate(GroupElt::identity(), {FpElt(5, 1)});
  v.add_translate(GroupElt(5, 3, 0, 1), {FpElt(5, 4)});
  EXPECT_EQ(v.dump(), "0 0 0 : 1\n0 1 3 : 4\n1 0 0 : 2\n");
  v.add_translate(GroupElt::identity(), {FpElt(5, 4)});
  EXPECT_EQ(v.support().size(), 2u);
}
