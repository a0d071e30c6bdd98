#include <random>

#include "doctest.h"
#include "gcdim/ring.hpp"

using namespace gcdim;

TEST_CASE("monomial orders") {
  PolyAlgebra g(PrimeField(101), {"x", "y", "z"}, MonomialOrder::Grevlex);
  PolyAlgebra l(PrimeField(101), {"x", "y", "z"}, MonomialOrder::Lex);
  PolyAlgebra d(PrimeField(101), {"x", "y", "z"}, MonomialOrder::Deglex);
  auto m = [&](const PolyAlgebra& a, const char* s) { return a.parse(s).leading().mon; };
  // x*z vs y^2: grevlex prefers y^2, deglex/lex prefer x*z
  CHECK(g.cmp(m(g, "y^2"), m(g, "x*z")) > 0);
  CHECK(d.cmp(m(d, "x*z"), m(d, "y^2")) > 0);
  CHECK(l.cmp(m(l, "x"), m(l, "y^5")) > 0);
  CHECK(d.cmp(m(d, "y^5"), m(d, "x")) > 0);
  CHECK_THROWS_AS(parse_order("revlex"), Error);
}

TEST_CASE("parse and format") {
  PolyAlgebra A(PrimeField(101), {"x", "y"}, MonomialOrder::Grevlex);
  CHECK(A.format(A.parse("3*x^2*y + 7*y^3")) == "3*x^2*y + 7*y^3");
  CHECK(A.format(A.parse("x - x")) == "0");
  CHECK(A.format(A.parse("(x+y)^2")) == "x^2 + 2*x*y + y^2");
  CHECK(A.format(A.parse("-x*y + 100*y^2")) == "-x*y - y^2");
  CHECK_THROWS_AS(A.parse("x +* y"), Error);
  CHECK_THROWS_AS(A.parse("z"), Error);
  CHECK_THROWS_AS(A.parse("x^"), Error);
}

TEST_CASE("make_ring examples") {
  auto R = Ring::make(101, {"x"}, "grevlex", {"x^2"});
  REQUIRE(R->ideal_gb().size() == 1);
  CHECK(R->format(R->ideal_gb()[0]) == "x^2");
  try {
    Ring::make(101, {"x", "y"}, "grevlex", {"x - 1"});
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
  try {
    Ring::make(101, {"x", "y"}, "grevlex", {"3"});
    FAIL("expected UnitIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitIdeal);
  }
  try {
    Ring::make(101, {"x"}, "weird", {});
    FAIL("expected BadOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadOrder);
  }
  // S(x^2+xy, y^2) = x*y^3 reduces to 0 by y^2, so the input is already a GB
  auto L = Ring::make(101, {"x", "y"}, "lex", {"x^2 + x*y", "y^2"});
  REQUIRE(L->ideal_gb().size() == 2);
  CHECK(L->format(L->ideal_gb()[0]) == "x^2 + x*y");
  CHECK(L->format(L->ideal_gb()[1]) == "y^2");
  CHECK(L->describe() == "F_101[x,y]/(x^2 + x*y, y^2)");
}

TEST_CASE("normal_form examples") {
  auto R = Ring::make(101, {"x", "y"}, "grevlex", {"x^2"});
  CHECK(R->nf(R->alg().parse("x^2")).is_zero());
  CHECK(R->format(R->nf(R->alg().parse("x^2*y + y"))) == "y");
  auto S = Ring::make(101, {"x", "y"}, "grevlex", {"x*y"});
  CHECK(S->nf(S->alg().parse("x*y*x")).is_zero());
  CHECK(S->format(S->parse("x^2 + x*y + y^2")) == "x^2 + y^2");
}

namespace {

Polynomial random_homogeneous(const PolyAlgebra& A, int d, std::mt19937_64& rng) {
  std::vector<Term> terms;
  std::uniform_int_distribution<std::uint32_t> c(0, A.field().characteristic() - 1);
  for (const auto& m : A.monomials_of_degree(d))
    if (rng() % 2) terms.push_back(Term{m, Fp(c(rng))});
  return A.make(terms);
}

}  // namespace

TEST_CASE("normal form is multiplicative, linear, idempotent and graded") {
  std::vector<RingPtr> rings = {
      Ring::make(101, {"x", "y"}, "grevlex", {"x^2", "x*y"}),
      Ring::make(101, {"x", "y", "z"}, "grevlex", {"x*y - z^2", "y^3"}),
      Ring::make(101, {"x", "y", "z"}, "lex", {"x^2 + y*z", "x*z - y^2"}),
      Ring::make(7, {"a", "b"}, "deglex", {"a^2*b + b^3"}),
  };
  std::mt19937_64 rng(7);
  for (const auto& R : rings) {
    const auto& A = R->alg();
    for (int it = 0; it < 40; ++it) {
      int d1 = static_cast<int>(rng() % 4), d2 = static_cast<int>(rng() % 4);
      Polynomial f = random_homogeneous(A, d1, rng), g = random_homogeneous(A, d2, rng);
      Polynomial nfg = R->nf(A.mul(f, g));
      CHECK(nfg == R->nf(A.mul(R->nf(f), R->nf(g))));
      CHECK(R->nf(nfg) == nfg);
      CHECK((nfg.is_zero() || (nfg.is_homogeneous() && nfg.degree() == d1 + d2)));
      Polynomial h = random_homogeneous(A, d1, rng);
      CHECK(R->nf(A.add(f, h)) == A.add(R->nf(f), R->nf(h)));
      for (const auto& gb : R->ideal_gb()) CHECK(R->nf(A.mul(f, gb)).is_zero());
    }
  }
}
