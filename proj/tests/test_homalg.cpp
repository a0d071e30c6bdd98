/*
 * Copyright (c) 2026, the gcdim authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include "fixtures.hpp"
#include "gcdim/homalg.hpp"

using namespace gcdim;
using namespace fx;

namespace {

Dualizer D(const FpModule& C, std::size_t bound = 20) { return certify_dualizer(C, bound); }
Dualizer DR(const RingPtr& R) { return D(free(R)); }

bool iso_shift(const FpModule& a, const FpModule& b) {
  return is_isomorphic_up_to_shift(a, b).verdict == IsoVerdict::Iso;
}

}  // namespace

TEST_CASE("dual examples") {
  CHECK(iso(dual(free(R3()), DR(R3())), free(R3())));
  CHECK(is_zero(dual(mod_x(R1()), DR(R1()))));
  FpModule d = dual(k(R2()), DR(R2()));
  CHECK(iso_shift(d, k(R2())));
  // socle x lives in degree 1
  CHECK(minimal_presentation(d).degrees() == std::vector<int>{1});
  CHECK_THROWS_AS(dual(k(R2()), DR(R3())), Error);
}

TEST_CASE("homothety examples") {
  auto h = homothety_map(free(R4()), DR(R4()));
  CHECK(h.is_iso);
  auto hk = homothety_map(k(R4()), DR(R4()));
  CHECK(hk.map.target.ngens() == 0);
  CHECK_FALSE(hk.is_iso);
  CHECK(homothety_map(k(R2()), DR(R2())).is_iso);
  CHECK(is_well_defined(homothety_map(random_coker(R3(), 3), DR(R3())).map));
}

TEST_CASE("is_semidualizing examples") {
  auto r = is_semidualizing(free(R4()), 20);
  CHECK(r.passed());
  CHECK(r.bound == 20);
  auto x = is_semidualizing(mod_x(R1()), 20);
  REQUIRE(x.kind == BoundedVerdict::Kind::Fail);
  REQUIRE(x.witness_index);
  CHECK(*x.witness_index == 1);
  REQUIRE(x.witness);
  CHECK(iso_shift(*x.witness, mod_x(R1())));
  auto kk = is_semidualizing(k(R4()), 20);
  REQUIRE(kk.kind == BoundedVerdict::Kind::Fail);
  CHECK(kk.reason.find("homothety") != std::string::npos);
  CHECK(is_semidualizing(FpModule::zero(R4()), 3).kind == BoundedVerdict::Kind::Fail);

  Dualizer c = certify_dualizer(mod_x(R1()), 5);
  CHECK(c.status == DualizerStatus::Failed);
  CHECK_THROWS_AS(gc_dim(free(R1()), c, 5), Error);
  CHECK_THROWS_AS(is_totally_reflexive(free(R4()), D(free(R4()), 3), 10), Error);
  CHECK_THROWS_AS(gc_dim(free(R4()), make_dualizer(free(R4())), 1), Error);
}

TEST_CASE("is_totally_reflexive examples") {
  CHECK(is_totally_reflexive(free(R5()), DR(R5()), 20).passed());
  CHECK(is_totally_reflexive(k(R2()), DR(R2()), 20).passed());
  auto v = is_totally_reflexive(k(R4()), DR(R4()), 20);
  REQUIRE(v.kind == BoundedVerdict::Kind::Fail);
  CHECK(v.reason.rfind("condition 1", 0) == 0);
  CHECK(*v.witness_index == 2);
}

TEST_CASE("gc_dim examples") {
  auto r = gc_dim(free(R4()), DR(R4()), 20);
  CHECK(r.passed());
  CHECK(r.value == 0);
  auto kv = gc_dim(k(R4()), DR(R4()), 20);
  REQUIRE(kv.passed());
  CHECK(kv.value == 2);
  CHECK(kv.ab_check == "2 + 0 = 2");
  auto m = gc_dim(mod_x(R3()), DR(R3()), 20);
  REQUIRE(m.passed());
  CHECK(m.value == 0);
  CHECK(m.ab_check == "0 + 1 = 1");
  CHECK(m.bound == 20);
  CHECK(gc_dim(k(R5()), DR(R5()), 20).infinite());
}

TEST_CASE("depth examples") {
  CHECK(depth(free(R4())) == 2);
  CHECK(depth(k(R4())) == 0);
  CHECK(depth(free(R5())) == 0);
  CHECK(depth(mod_x(R3())) == 1);
  CHECK(ring_depth(R3()) == 1);
  CHECK_THROWS_AS(depth(FpModule::zero(R4())), Error);
  try {
    depth(FpModule::zero(R4()));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroModule);
  }
}

TEST_CASE("transpose examples") {
  CHECK(is_zero(transpose(free(R4(), {0, 1}), DR(R4())).module));
  auto t = transpose(k(R2()), DR(R2()));
  CHECK(t.flavor == TransposeFlavor::Projective);
  CHECK(iso_shift(t.module, k(R2())));
  CHECK(t.module.degrees() == std::vector<int>{-1});
  CHECK(iso_shift(transpose(mod_x(R1()), DR(R1())).module, mod_x(R1())));
}

TEST_CASE("transpose_wrt examples") {
  RingPtr R = R2();
  Dualizer C = DR(R);
  // minimal presentation agrees with transpose
  FpModule X = random_coker(R3(), 5);
  FpModule mp = minimal_presentation(X);
  FpModule F0 = FpModule::free(R3(), mp.degrees());
  FpModule F1 = FpModule::free(R3(), mp.rels().col_deg());
  auto tw = transpose_wrt(ModuleMap{F1, F0, mp.rels()}, ModuleMap{F0, mp, Matrix::identity(mp.degrees())}, DR(R3()));
  CHECK(tw.flavor == TransposeFlavor::APresentation);
  CHECK(iso(tw.module, transpose(X, DR(R3())).module));

  // R(-1) -x-> R -> k -> 0
  FpModule Rm = free(R), Rm1 = free(R, {1});
  Matrix xm({0}, {1});
  xm.at(0, 0) = R->parse("x");
  Matrix one = Matrix::identity({0});
  auto tk = transpose_wrt(ModuleMap{Rm1, Rm, xm}, ModuleMap{Rm, k(R), one}, C);
  CHECK(iso_shift(tk.module, k(R)));

  // zero map in the middle is not exact
  Matrix z({0}, {1});
  CHECK_THROWS_AS(transpose_wrt(ModuleMap{Rm1, Rm, z}, ModuleMap{Rm, k(R), one}, C), Error);
}

TEST_CASE("transpose_decompose examples") {
  auto f = transpose_decompose(free(R4()), DR(R4()));
  CHECK(is_zero(f.E));
  CHECK(is_zero(f.T));
  CHECK(is_zero(f.S));
  CHECK(f.certified());

  auto x = transpose_decompose(mod_x(R1()), DR(R1()));
  CHECK(x.certified());
  CHECK(iso_shift(x.E, mod_x(R1())));
  CHECK(is_zero(x.S));

  auto kk = transpose_decompose(k(R2()), DR(R2()));
  CHECK(kk.certified());
  CHECK(is_zero(kk.E));
  CHECK(iso(kk.T, kk.S));
}

TEST_CASE("transpose_ses examples") {
  RingPtr R = R2();
  Dualizer C = DR(R);
  auto [inc, proj] = syzygy_sequence(k(R));
  SixTerm s = transpose_ses(inc, proj, C);
  CHECK(s.certified());
  REQUIRE(s.modules.size() == 6);
  // horseshoe presentation of R has a unit entry, so tY comes out free: R(2)
  std::vector<std::vector<long long>> hs;
  for (const auto& m : s.modules) hs.push_back(hilbert(m).range(-2, 3));
  CHECK(hs[0] == std::vector<long long>{0, 0, 0, 1, 0, 0});
  CHECK(hs[1] == std::vector<long long>{0, 0, 1, 1, 0, 0});
  CHECK(hs[2] == std::vector<long long>{0, 0, 1, 0, 0, 0});
  CHECK(hs[3] == std::vector<long long>{0, 1, 0, 0, 0, 0});
  CHECK(hs[4] == std::vector<long long>{1, 1, 0, 0, 0, 0});
  CHECK(hs[5] == std::vector<long long>{1, 0, 0, 0, 0, 0});

  // split sequence X -> X + Z -> Z
  FpModule X = mod_x(R3()), Z = k(R3());
  FpModule Y = direct_sum(X, Z);
  Matrix a({0, 0}, {0}), b({0}, {0, 0});
  a.at(0, 0) = R3()->alg().one();
  b.at(0, 1) = R3()->alg().one();
  SixTerm sp = transpose_ses(ModuleMap{X, Y, a}, ModuleMap{Y, Z, b}, DR(R3()));
  CHECK(sp.certified());
  CHECK(iso(sp.modules[1], direct_sum(sp.modules[0], sp.modules[2])));
  CHECK(hilbert(minimal_presentation(sp.modules[4])) ==
        hilbert(direct_sum(minimal_presentation(sp.modules[3]), minimal_presentation(sp.modules[5]))));

  // not injective on the left
  Matrix zero({0, 0}, {0});
  CHECK_THROWS_AS(transpose_ses(ModuleMap{X, Y, zero}, ModuleMap{Y, Z, b}, DR(R3())), Error);
}

TEST_CASE("cosyzygy examples") {
  CHECK(is_zero(cosyzygy(free(R3()), DR(R3()))));
  FpModule c = cosyzygy(k(R2()), DR(R2()));
  CHECK(iso_shift(c, k(R2())));
  // frozen twist: generator in degree -1
  CHECK(c.degrees() == std::vector<int>{-1});
  CHECK(is_zero(cosyzygy(free(R4(), {2}), DR(R4()))));
}

TEST_CASE("w_words examples") {
  CHECK(w_words(DR(R2()), 0).size() == 1);
  auto one = w_words(make_dualizer(k(R2())), 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].word == "R");
  CHECK(one[1].word == "D(R)");
  CHECK(iso(one[1].module, k(R2())));
  CHECK(w_words(DR(R2()), 2).size() == 1);
}

TEST_CASE("stable_equiv_mod_add examples") {
  RingPtr R = R2();
  Dualizer C = DR(R);
  auto same = stable_equiv_mod_add(k(R), k(R), C, 2);
  CHECK(same.yes);
  CHECK(same.p == "0");
  auto pad = stable_equiv_mod_add(k(R), direct_sum(k(R), free(R)), C, 2);
  CHECK(pad.yes);
  CHECK(pad.p == "R(0)");
  CHECK(pad.q == "0");
  FpModule tt = transpose(transpose(k(R), C).module, C).module;
  CHECK(stable_equiv_mod_add(tt, k(R), C, 4).yes);
  // never claims inequivalence
  auto no = stable_equiv_mod_add(k(R4()), free(R4()), DR(R4()), 1);
  CHECK_FALSE(no.yes);
}

TEST_CASE("ext_vanishing_dim examples") {
  CHECK(ext_vanishing_dim(free(R4()), {free(R4())}, 20).value == 0);
  auto kv = ext_vanishing_dim(k(R4()), {free(R4())}, 20);
  CHECK(kv.passed());
  CHECK(kv.value == 2);
  CHECK(ext_vanishing_dim(k(R2()), {free(R2())}, 20).value == 0);
  CHECK(ext_vanishing_dim(k(R2()), {k(R2())}, 6).infinite());
  CHECK_THROWS_AS(ext_vanishing_dim(k(R2()), {}, 3), Error);
}

// ---------------------------------------------------------------------------
// properties over the fixture rings

TEST_CASE("gc_dim satisfies Auslander-Buchsbaum and the syzygy characterization") {
  for (RingPtr R : {R1(), R2(), R3(), R4(), R5()}) {
    Dualizer C = DR(R);
    for (std::uint64_t seed : {1, 2, 3}) {
      for (const auto& [name, X] : modules(R, seed)) {
        CAPTURE(R->describe());
        CAPTURE(name);
        auto v = gc_dim(X, C, 20);
        if (!v.passed()) continue;
        CHECK(v.value + depth(X) == ring_depth(R));
        CHECK(is_totally_reflexive(syzygy(X, v.value), C, 20).passed());
        if (v.value > 0) CHECK_FALSE(is_totally_reflexive(syzygy(X, v.value - 1), C, 20).passed());
      }
    }
  }
}

TEST_CASE("over a regular ring gc_dim is the projective dimension") {
  RingPtr R = R4();
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (const auto& [name, X] : modules(R, seed)) {
      CAPTURE(name);
      auto pd = projective_dim(X, 20);
      REQUIRE(pd.passed());
      auto g = gc_dim(X, DR(R), 20);
      REQUIRE(g.passed());
      CHECK(g.value == pd.value);
    }
}

TEST_CASE("double transpose is stably equivalent to the module") {
  for (RingPtr R : {R2(), R3()}) {
    Dualizer C = DR(R);
    for (const auto& [name, X] : modules(R, 2)) {
      CAPTURE(R->describe());
      CAPTURE(name);
      FpModule tt = transpose(transpose(X, C).module, C).module;
      CHECK(stable_equiv_mod_add(tt, X, C, 4).yes);
    }
  }
}

TEST_CASE("transpose decomposition is exact with additive Hilbert series") {
  for (RingPtr R : {R1(), R2(), R3(), R4(), R5()}) {
    Dualizer C = DR(R);
    for (const auto& [name, X] : modules(R, 4)) {
      CAPTURE(R->describe());
      CAPTURE(name);
      auto d = transpose_decompose(X, C);
      CHECK(d.certified());
      CHECK(iso(d.E, ext(X, C.module, 1)));
      CHECK(iso(d.T, transpose(X, C).module));
      auto t = hilbert(d.T).range(-10, 10), e = hilbert(d.E).range(-10, 10), s = hilbert(d.S).range(-10, 10);
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == e[i] + s[i]);
    }
  }
}

TEST_CASE("six-term sequence certifies on syzygy sequences") {
  for (RingPtr R : {R2(), R3(), R4(), R5()}) {
    Dualizer C = DR(R);
    for (const auto& [name, X] : modules(R, 6)) {
      CAPTURE(R->describe());
      CAPTURE(name);
      auto [inc, proj] = syzygy_sequence(X);
      SixTerm s = transpose_ses(inc, proj, C);
      CHECK(s.certified());
      CHECK(iso(minimal_presentation(s.modules[5]), transpose(syzygy(X, 1), C).module));
      CHECK(iso(minimal_presentation(s.modules[3]), transpose(X, C).module));
    }
  }
}

TEST_CASE("double dual fixes totally reflexive modules") {
  for (RingPtr R : {R2(), R3(), R5()}) {
    Dualizer C = DR(R);
    for (const auto& [name, X] : modules(R, 7)) {
      if (!is_totally_reflexive(X, C, 20).passed()) continue;
      CAPTURE(name);
      CHECK(iso(X, dual(dual(X, C), C)));
    }
  }
}

TEST_CASE("w_words over a Gorenstein ring with C = R stay free") {
  for (RingPtr R : {R2(), R3(), R4()})
    for (std::size_t k = 0; k <= 3; ++k) CHECK(w_words(DR(R), k).size() == 1);
}
