// Shared fixture rings and modules for the test binaries.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gcdim/fpmodule.hpp"

namespace fx {

using namespace gcdim;

inline RingPtr R1() { static RingPtr r = Ring::make(101, {"x"}, "grevlex"); return r; }
inline RingPtr R2() { static RingPtr r = Ring::make(101, {"x"}, "grevlex", {"x^2"}); return r; }
inline RingPtr R3() { static RingPtr r = Ring::make(101, {"x", "y"}, "grevlex", {"x*y"}); return r; }
inline RingPtr R4() { static RingPtr r = Ring::make(101, {"x", "y"}, "grevlex"); return r; }
inline RingPtr R5() { static RingPtr r = Ring::make(101, {"x", "y"}, "grevlex", {"x^2", "x*y"}); return r; }

/// coker of a matrix given by rows of polynomial strings; column degrees are
/// inferred from the first nonzero entry.
inline FpModule coker(const RingPtr& R, const std::vector<std::vector<std::string>>& rows, std::vector<int> degrees) {
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::vector<int> cd(ncols, 0);
  Matrix m(degrees, cd);
  for (std::size_t j = 0; j < ncols; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Polynomial p = R->parse(rows[i][j]);
      if (!found && !p.is_zero()) {
        cd[j] = p.degree() + degrees[i];
        found = true;
      }
    }
  }
  Matrix out(degrees, cd);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) out.at(i, j) = R->parse(rows[i][j]);
  return FpModule(R, degrees, out);
}

inline FpModule free(const RingPtr& R, std::vector<int> d = {0}) { return FpModule::free(R, std::move(d)); }
inline FpModule k(const RingPtr& R) { return FpModule::residue_field(R); }
inline FpModule mod_x(const RingPtr& R) { return FpModule::cyclic(R, {R->parse("x")}); }
inline FpModule mod_y(const RingPtr& R) { return FpModule::cyclic(R, {R->parse("y")}); }

/// Random homogeneous cokernel, deterministic in the seed: one or two
/// generators in degrees 0/1, relations with entries in the maximal ideal.
inline FpModule random_coker(const RingPtr& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const auto& A = R->alg();
  std::size_t ng = 1 + rng() % 2;
  std::vector<int> degs;
  for (std::size_t i = 0; i < ng; ++i) degs.push_back(static_cast<int>(rng() % 2));
  std::size_t nr = 1 + rng() % 2;
  Matrix m(degs, {});
  int maxdeg = *std::max_element(degs.begin(), degs.end());
  for (std::size_t j = 0; j < nr; ++j) {
    int cd = maxdeg + 1 + static_cast<int>(rng() % 2);
    std::vector<Polynomial> col;
    for (int a : degs) {
      std::vector<Term> ts;
      for (const auto& mon : A.monomials_of_degree(cd - a))
        if (rng() % 2) ts.push_back(Term{mon, Fp(static_cast<std::uint32_t>(1 + rng() % 100))});
      col.push_back(R->nf(A.make(ts)));
    }
    m.append_column(col, cd);
  }
  return FpModule(R, degs, m);
}

struct Named {
  std::string name;
  FpModule M;
};

/// The per-ring fixture list: R, k, R/(x), Omega^1 k, one random coker.
inline std::vector<Named> modules(const RingPtr& R, std::uint64_t seed = 1) {
  return {{"R", free(R)},
          {"k", k(R)},
          {"R/(x)", mod_x(R)},
          {"Omega k", syzygy(k(R), 1)},
          {"random" + std::to_string(seed), random_coker(R, seed)}};
}

inline bool iso(const FpModule& a, const FpModule& b) {
  return is_isomorphic(a, b, 64, 0).verdict == IsoVerdict::Iso;
}

}  // namespace fx
