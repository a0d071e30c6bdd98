#include "doctest.h"
#include "fixtures.hpp"
#include "oracle/ext_oracle.hpp"

using namespace fx;

namespace {

oracle::QRing oracle_ring(const RingPtr& R) {
  if (R == R2()) return oracle::QRing(1, {{{{2}, 1}}});
  return oracle::QRing(2, {});
}

}  // namespace

TEST_CASE("oracle sanity") {
  oracle::QRing S(2, {});
  CHECK(S.dim(3) == 4);
  oracle::QRing Q(2, {{{{1, 1}, 1}}});
  CHECK(Q.dim(3) == 2);
  CHECK(oracle::kernel({{1, 0}, {2, 0}, {0, 1}}).size() == 1);

  // Ext^2(k, R) over F[x,y] is k(2)
  oracle::QRing R(2, {});
  oracle::ExtOracle o(R, k(R4()), free(R4()), 3, 12);
  for (int t = -8; t <= 8; ++t) CHECK(o.dim(2, t) == (t == -2 ? 1 : 0));
  CHECK(o.dim(0, 0) == 0);
}

TEST_CASE("Ext graded dimensions match the oracle on R2 and R4 fixtures") {
  long long nonzero = 0;
  for (auto R : {R2(), R4()}) {
    oracle::QRing Q = oracle_ring(R);
    auto mods = modules(R, 1);
    for (const auto& M : mods)
      for (const auto& N : mods) {
        oracle::ExtOracle o(Q, M.M, N.M, 3, 12);
        for (std::size_t i = 0; i <= 3; ++i) {
          auto hs = hilbert(ext(M.M, N.M, i));
          for (int t = -8; t <= 8; ++t)
          {
            long long want = o.dim(i, t);
            nonzero += want != 0;
            CHECK_MESSAGE(hs.dim(t) == want, M.name, " ", N.name, " i=", i, " t=", t);
          }
        }
      }
  }
  CHECK(nonzero > 200);
}
