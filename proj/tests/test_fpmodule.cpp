#include "doctest.h"
#include "fixtures.hpp"

using namespace gcdim;
using namespace fx;

TEST_CASE("minimal_presentation examples") {
  auto R = R4();
  CHECK(minimal_presentation(coker(R, {{"1"}}, {0})).ngens() == 0);

  FpModule two = coker(R, {{"x", "0"}, {"0", "1"}}, {0, 0});
  FpModule m2 = minimal_presentation(two);
  REQUIRE(m2.ngens() == 1);
  REQUIRE(m2.rels().cols() == 1);
  CHECK(R->format(m2.rels().at(0, 0)) == "x");

  // e1 = -y e2 turns x e1 into -x*y e2
  FpModule three = coker(R, {{"x", "1"}, {"0", "y"}}, {0, -1});
  auto data = minimal_presentation_data(three);
  REQUIRE(data.module.ngens() == 1);
  CHECK(data.kept == std::vector<std::size_t>{1});
  CHECK(data.module.degrees() == std::vector<int>{-1});
  REQUIRE(data.module.rels().cols() == 1);
  CHECK(R->format(data.module.rels().at(0, 0)) == "-x*y");
  CHECK(R->format(data.to_new.at(0, 0)) == "-y");
  CHECK(data.module.rels().is_minimal());
}

TEST_CASE("syzygy examples") {
  CHECK(syzygy(free(R4(), {0, 2}), 1).ngens() == 0);
  FpModule om = syzygy(k(R2()), 1);
  CHECK(om.degrees() == std::vector<int>{1});
  CHECK(iso(om, shift(k(R2()), -1)));
  FpModule om4 = syzygy(k(R4()), 1);
  CHECK(om4.degrees() == std::vector<int>{1, 1});
  REQUIRE(om4.rels().cols() == 1);
  CHECK(om4.rels().col_deg()[0] == 2);
}

TEST_CASE("free_resolution examples") {
  auto F = free_resolution(free(R4()), 5);
  CHECK(F.finite);
  CHECK(F.length() == 0);
  auto K = free_resolution(k(R4()), 5);
  CHECK(K.betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(K.finite);
  CHECK(K.length() == 2);
  auto P = free_resolution(k(R2()), 5);
  CHECK(P.betti() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK_FALSE(P.finite);
  for (const auto& d : P.d) {
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 1);
    CHECK(R2()->format(d.at(0, 0)) == "x");
  }
  CHECK(certify_resolution(K));
  CHECK(certify_resolution(P));
}

TEST_CASE("hom examples") {
  FpModule N = coker(R4(), {{"x^2", "x*y"}}, {0});
  CHECK(iso(hom(free(R4()), N), N));
  CHECK(iso(hom(k(R2()), free(R2())), shift(k(R2()), -1)));
  CHECK(is_zero(hom(mod_x(R1()), free(R1()))));
}

TEST_CASE("ext examples") {
  FpModule N = coker(R3(), {{"x"}}, {0});
  CHECK(iso(ext(free(R3()), N, 0), N));
  FpModule e1 = ext(mod_x(R1()), mod_x(R1()), 1);
  CHECK(iso(e1, shift(mod_x(R1()), 1)));
  CHECK(ext_is_zero(k(R4()), free(R4()), 0));
  CHECK(ext_is_zero(k(R4()), free(R4()), 1));
  CHECK(iso(ext(k(R4()), free(R4()), 2), shift(k(R4()), 2)));
  CHECK(ext_is_zero(free(R4()), k(R4()), 1));
  CHECK(is_zero(ext(FpModule::zero(R4()), k(R4()), 0)));
}

TEST_CASE("tor examples") {
  FpModule M = random_coker(R3(), 3);
  CHECK(iso(tor(M, free(R3()), 0), M));
  auto t = tor(k(R4()), k(R4()), 1);
  CHECK(hilbert(t).dim(1) == 2);
  CHECK(krull_dim(t) == 0);
  CHECK(tor_is_zero(mod_x(R4()), mod_y(R4()), 1));
  CHECK_FALSE(tor_is_zero(mod_x(R4()), mod_x(R4()), 0));
}

TEST_CASE("annihilator examples") {
  auto R = R4();
  auto canon = [&](const std::vector<Polynomial>& J) { return ideal_canonical(*R, J); };
  CHECK(canon(annihilator(k(R))) == canon({R->parse("x"), R->parse("y")}));
  CHECK(canon(annihilator(mod_x(R))) == canon({R->parse("x")}));
  CHECK(canon(annihilator(direct_sum(free(R), k(R)))).empty());
  CHECK(canon(annihilator(FpModule::zero(R))) == canon({R->alg().one()}));
  CHECK(ideal_contains(*R, annihilator(k(R)), R->parse("x*y + y^2")));
}

TEST_CASE("hilbert_series and krull_dim examples") {
  CHECK(hilbert_series(k(R4()), 3) == std::vector<long long>{1, 0, 0, 0});
  CHECK(hilbert_series(free(R2()), 3) == std::vector<long long>{1, 1, 0, 0});
  CHECK(hilbert_series(free(R4()), 3) == std::vector<long long>{1, 2, 3, 4});
  CHECK(hilbert_series(FpModule::zero(R4()), 2) == std::vector<long long>{0, 0, 0});
  CHECK(krull_dim(free(R4())) == 2);
  CHECK(krull_dim(free(R2())) == 0);
  CHECK(krull_dim(free(R3())) == 1);
  CHECK(krull_dim(FpModule::zero(R3())) == kZeroDim);
  CHECK(hilbert(shift(k(R4()), -3)).range(2, 4) == std::vector<long long>{0, 1, 0});
}

TEST_CASE("is_isomorphic examples") {
  for (auto R : {R2(), R3(), R4(), R5()}) {
    for (const auto& f : modules(R, 2)) {
      auto r = is_isomorphic(f.M, f.M, 64, 0);
      CHECK(r.verdict == IsoVerdict::Iso);
      REQUIRE(r.map.has_value());
      CHECK(is_well_defined(*r.map));
      CHECK(maps_equal(compose(*r.inverse, *r.map), identity_map(f.M)));
    }
  }
  auto r = is_isomorphic(k(R4()), shift(k(R4()), -1));
  CHECK(r.verdict == IsoVerdict::NotIso);
  CHECK(r.reason == "Hilbert series differ");
  auto s = is_isomorphic(mod_x(R4()), mod_y(R4()));
  CHECK(s.verdict == IsoVerdict::NotIso);
  CHECK(s.reason == "annihilators differ");
  // a non-identity presentation of the same module
  FpModule twisted = coker(R4(), {{"x", "0"}, {"y", "1"}}, {0, 0});
  CHECK(is_isomorphic(twisted, mod_x(R4())).verdict == IsoVerdict::Iso);
}

TEST_CASE("resolutions are certified on fixtures") {
  for (auto R : {R1(), R2(), R3(), R4(), R5()}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      for (const auto& f : modules(R, seed)) {
        auto F = free_resolution(f.M, 4);
        CHECK_MESSAGE(certify_resolution(F), f.name);
        for (const auto& d : F.d) CHECK(d.is_minimal());
      }
    }
  }
}

TEST_CASE("Ext(k,k) over F[x,y] follows the Koszul pattern") {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto hs = hilbert(ext(k(R4()), k(R4()), i));
    long long expect = i == 1 ? 2 : 1;
    for (int j = -4; j <= 4; ++j) CHECK(hs.dim(j) == (j == -static_cast<int>(i) ? expect : 0));
  }
}

TEST_CASE("Hilbert series are additive on direct sums") {
  for (auto R : {R2(), R3(), R4(), R5()})
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      FpModule a = random_coker(R, seed), b = random_coker(R, seed + 10);
      auto sa = hilbert(a).range(-2, 8), sb = hilbert(b).range(-2, 8), ss = hilbert(direct_sum(a, b)).range(-2, 8);
      for (std::size_t d = 0; d < ss.size(); ++d) CHECK(ss[d] == sa[d] + sb[d]);
    }
}

TEST_CASE("Ext dimension shift") {
  for (auto R : {R2(), R3(), R4()})
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      FpModule M = random_coker(R, seed);
      FpModule N = random_coker(R, seed + 5);
      FpModule om = syzygy(M, 1);
      for (std::size_t i = 2; i <= 3; ++i)
        CHECK(hilbert(ext(M, N, i)) == hilbert(ext(om, N, i - 1)));
    }
}

TEST_CASE("maps, kernels and exactness") {
  auto R = R4();
  FpModule Rm = free(R);
  FpModule K = k(R);
  ModuleMap pi{Rm, K, Matrix::identity({0})};
  CHECK(is_surjective(pi));
  CHECK_FALSE(is_injective(pi));
  ModuleMap inc = kernel(pi);
  CHECK(inc.source.ngens() == 2);
  CHECK(is_exact_at(inc, pi));
  CHECK(is_injective(inc));
  ModuleMap bad{Rm, Rm, Matrix::identity({0})};
  CHECK_FALSE(is_exact_at(bad, pi));
  CHECK_THROWS_AS(make_map(K, Rm, Matrix::identity({0})), Error);
}
