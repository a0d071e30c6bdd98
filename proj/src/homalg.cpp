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
#include "gcdim/homalg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gcdim {

namespace {

Polynomial one_poly() { return Polynomial({Term{Monomial(), Fp(1)}}); }

void require_certified(const Dualizer& C, std::size_t bound) {
  if (C.status != DualizerStatus::SemidualizingUpTo || C.bound < bound) {
    throw Error(ErrorKind::UncertifiedDualizer, "dualizer is not certified semidualizing up to bound " +
                                                    std::to_string(bound));
  }
}

// coordinates() that tolerates empty ambients and empty element lists
Matrix coords(const RingPtr& R, const Subquotient& sq, const Presentation& p, const Matrix& elems) {
  if (p.module.ngens() == 0 || elems.cols() == 0 || sq.gens.cols() == 0)
    return Matrix(p.module.degrees(), elems.col_deg());
  return coordinates(R, sq, p, elems);
}

Presentation present_or_zero(const RingPtr& R, const Subquotient& sq) {
  if (sq.gens.rows() == 0 || sq.gens.cols() == 0)
    return Presentation{FpModule::zero(R), Matrix(sq.gens.row_deg(), {}), Matrix({}, sq.gens.col_deg())};
  return present(R, sq);
}

// Inclusion of a block of `n` rows at `offset` into an ambient of degrees `amb`.
Matrix block_inclusion(const std::vector<int>& amb, std::size_t offset, const std::vector<int>& block) {
  Matrix m(amb, block);
  for (std::size_t i = 0; i < block.size(); ++i) m.at(offset + i, i) = one_poly();
  return m;
}

Matrix block_projection(const std::vector<int>& amb, std::size_t offset, std::size_t n) {
  std::vector<int> rows(amb.begin() + static_cast<std::ptrdiff_t>(offset),
                        amb.begin() + static_cast<std::ptrdiff_t>(offset + n));
  Matrix m(rows, amb);
  for (std::size_t i = 0; i < n; ++i) m.at(i, offset + i) = one_poly();
  return m;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// coker of the dual of a presentation matrix d : F1 -> F0, unminimized.
FpModule dual_cokernel(const RingPtr& R, const Matrix& d, const FpModule& C) {
  std::vector<int> amb = hom_degrees(d.col_deg(), C);
  return FpModule(R, amb, hconcat(hom_induced(d, C), hom_rels(d.col_deg(), C)));
}

}  // namespace

std::string BoundedVerdict::to_string() const {
  switch (kind) {
    case Kind::Value: return std::to_string(value) + " (bound " + std::to_string(bound) + ")";
    case Kind::Infinite: return "inf (bound " + std::to_string(bound) + ")";
    case Kind::Fail: return "Fail(" + reason + ")";
  }
  return "?";
}

Dualizer make_dualizer(FpModule C) { return Dualizer{std::move(C), DualizerStatus::Unchecked, 0, {}}; }

Dualizer certify_dualizer(FpModule C, std::size_t bound) {
  BoundedVerdict v = is_semidualizing(C, bound);
  Dualizer d{std::move(C), DualizerStatus::Unchecked, bound, {}};
  if (v.passed()) {
    d.status = DualizerStatus::SemidualizingUpTo;
  } else {
    d.status = DualizerStatus::Failed;
    d.witness = v.reason;
  }
  return d;
}

FpModule dual(const FpModule& M, const Dualizer& C) { return hom(M, C.module); }

Homothety homothety_map(const FpModule& M, const Dualizer& C) {
  require_same_ring(M.ring(), C.module.ring());
  const RingPtr& R = M.ring();
  const FpModule& Cm = C.module;
  Subquotient sq1 = hom_subquotient(M, Cm);
  Presentation P1 = present_or_zero(R, sq1);
  const FpModule& D = P1.module;
  Subquotient sq2 = hom_subquotient(D, Cm);
  Presentation P2 = present_or_zero(R, sq2);
  const std::size_t nC = Cm.ngens();
  // eta(mu_k) sends generator j of M^+ to its value at mu_k
  Matrix elems(hom_degrees(D.degrees(), Cm), M.degrees());
  for (std::size_t k = 0; k < M.ngens(); ++k)
    for (std::size_t j = 0; j < D.ngens(); ++j)
      for (std::size_t l = 0; l < nC; ++l) elems.at(j * nC + l, k) = P1.emb.at(k * nC + l, j);
  Homothety h{ModuleMap{M, P2.module, coords(R, sq2, P2, elems)}, false};
  h.is_iso = is_injective(h.map) && is_surjective(h.map);
  return h;
}

Homothety ring_homothety(const FpModule& C) {
  const RingPtr& R = C.ring();
  FpModule Rm = FpModule::free(R, {0});
  Subquotient sq = hom_subquotient(C, C);
  Presentation P = present_or_zero(R, sq);
  const std::size_t n = C.ngens();
  Matrix id(hom_degrees(C.degrees(), C), {0});
  for (std::size_t k = 0; k < n; ++k) id.at(k * n + k, 0) = one_poly();
  Homothety h{ModuleMap{Rm, P.module, coords(R, sq, P, id)}, false};
  h.is_iso = P.module.ngens() > 0 && is_injective(h.map) && is_surjective(h.map);
  return h;
}

BoundedVerdict is_semidualizing(const FpModule& C, std::size_t bound) {
  BoundedVerdict v;
  v.bound = bound;
  if (is_zero(C)) {
    v.kind = BoundedVerdict::Kind::Fail;
    v.reason = "C = 0";
    v.violations.push_back(v.reason);
    return v;
  }
  for (std::size_t i = 1; i <= bound; ++i) {
    if (ext_is_zero(C, C, i)) continue;
    v.violations.push_back("Ext^" + std::to_string(i) + "(C,C) != 0");
    v.witness_index = i;
    v.witness = minimal_presentation(ext(C, C, i));
    break;
  }
  if (!ring_homothety(C).is_iso) v.violations.push_back("homothety R -> Hom(C,C) is not an isomorphism");
  if (!v.violations.empty()) {
    v.kind = BoundedVerdict::Kind::Fail;
    for (const auto& s : v.violations) v.reason += (v.reason.empty() ? "" : "; ") + s;
  } else {
    v.reason = "semidualizing up to bound " + std::to_string(bound);
  }
  return v;
}

BoundedVerdict is_totally_reflexive(const FpModule& X, const Dualizer& C, std::size_t bound) {
  require_certified(C, bound);
  require_same_ring(X.ring(), C.module.ring());
  BoundedVerdict v;
  v.bound = bound;
  auto fail = [&](const std::string& why, std::optional<std::size_t> idx, std::optional<FpModule> w) {
    v.kind = BoundedVerdict::Kind::Fail;
    v.reason = why;
    v.violations.push_back(why);
    v.witness_index = idx;
    v.witness = std::move(w);
    return v;
  };
  for (std::size_t i = 1; i <= bound; ++i)
    if (!ext_is_zero(X, C.module, i))
      return fail("condition 1: Ext^" + std::to_string(i) + "(X,C) != 0", i, minimal_presentation(ext(X, C.module, i)));
  FpModule D = dual(X, C);
  for (std::size_t i = 1; i <= bound; ++i)
    if (!ext_is_zero(D, C.module, i))
      return fail("condition 2: Ext^" + std::to_string(i) + "(X^+,C) != 0", i, minimal_presentation(ext(D, C.module, i)));
  if (!homothety_map(X, C).is_iso) return fail("condition 3: homothety X -> X^++ is not an isomorphism", {}, {});
  v.reason = "totally C-reflexive up to bound " + std::to_string(bound);
  return v;
}

std::size_t depth(const FpModule& M) {
  if (is_zero(M)) throw Error(ErrorKind::ZeroModule, "depth of the zero module");
  FpModule k = FpModule::residue_field(M.ring());
  const std::size_t n = M.ring()->nvars();
  for (std::size_t i = 0; i < n; ++i)
    if (!ext_is_zero(k, M, i)) return i;
  return n;
}

std::size_t ring_depth(const RingPtr& R) { return depth(FpModule::free(R, {0})); }

BoundedVerdict projective_dim(const FpModule& M, std::size_t bound) {
  Resolution F = free_resolution(M, bound + 1);
  BoundedVerdict v;
  v.bound = bound;
  if (F.finite && F.length() <= bound) {
    v.value = F.length();
  } else {
    v.kind = BoundedVerdict::Kind::Infinite;
    v.reason = "F_" + std::to_string(bound + 1) + " != 0";
  }
  return v;
}

BoundedVerdict gc_dim(const FpModule& X, const Dualizer& C, std::size_t bound) {
  require_certified(C, bound);
  require_same_ring(X.ring(), C.module.ring());
  BoundedVerdict v;
  v.bound = bound;
  if (is_zero(X)) {
    v.reason = "zero module";
    return v;
  }
  const std::size_t dR = ring_depth(X.ring());
  // a finite value n satisfies n = depth R - depth X <= depth R
  std::size_t n0 = 0;
  for (std::size_t i = 1; i <= bound; ++i) {
    if (ext_is_zero(X, C.module, i)) continue;
    if (i > dR) {
      v.kind = BoundedVerdict::Kind::Infinite;
      v.witness_index = i;
      v.reason = "Ext^" + std::to_string(i) + "(X,C) != 0 beyond depth R = " + std::to_string(dR);
      return v;
    }
    n0 = i;
  }
  std::string last;
  for (std::size_t n = n0; n <= std::min(dR, bound); ++n) {
    BoundedVerdict t = is_totally_reflexive(syzygy(X, n), C, bound);
    if (!t.passed()) {
      last = "Omega^" + std::to_string(n) + " X: " + t.reason;
      continue;
    }
    const std::size_t dX = depth(X);
    v.value = n;
    v.ab_check = std::to_string(n) + " + " + std::to_string(dX) + " = " + std::to_string(dR);
    if (n + dX != dR) {
      throw Error(ErrorKind::ABViolation, "G_C-dimension " + std::to_string(n) + " + depth " + std::to_string(dX) +
                                              " != depth R " + std::to_string(dR));
    }
    v.reason = "Ext^{>" + std::to_string(n) + "}(X,C) = 0 and Omega^" + std::to_string(n) + " X totally reflexive";
    return v;
  }
  v.kind = BoundedVerdict::Kind::Infinite;
  v.reason = last.empty() ? "no syzygy qualifies" : last;
  return v;
}

// ---------------------------------------------------------------------------
// Transposes

TransposeResult transpose(const FpModule& X, const Dualizer& C) {
  require_same_ring(X.ring(), C.module.ring());
  FpModule mp = minimal_presentation(X);
  const Matrix& d1 = mp.rels();
  return TransposeResult{minimal_presentation(dual_cokernel(X.ring(), d1, C.module)), d1, TransposeFlavor::Projective};
}

ModuleMap hom_map(const ModuleMap& f, const FpModule& N) {
  const RingPtr& R = N.ring();
  Subquotient sqB = hom_subquotient(f.target, N);
  Presentation PB = present_or_zero(R, sqB);
  Subquotient sqA = hom_subquotient(f.source, N);
  Presentation PA = present_or_zero(R, sqA);
  Matrix imgs = multiply(*R, hom_induced(f.matrix, N), PB.emb);
  return ModuleMap{PB.module, PA.module, coords(R, sqA, PA, imgs)};
}

TransposeResult transpose_wrt(const ModuleMap& phi, const ModuleMap& pi, const Dualizer& C) {
  require_same_ring(phi.source.ring(), C.module.ring());
  require_same_ring(pi.source.ring(), C.module.ring());
  if (phi.target.fingerprint() != pi.source.fingerprint())
    throw Error(ErrorKind::RankMismatch, "A1 -> A0 and A0 -> X do not compose");
  if (!is_well_defined(phi) || !is_well_defined(pi) || !is_surjective(pi) || !is_exact_at(phi, pi))
    throw Error(ErrorKind::NotExact, "A1 -> A0 -> X -> 0 is not exact");
  ModuleMap dphi = hom_map(phi, C.module);
  return TransposeResult{minimal_presentation(cokernel(dphi).target), phi.matrix, TransposeFlavor::APresentation};
}

TransposeDecomposition transpose_decompose(const FpModule& X, const Dualizer& C) {
  require_same_ring(X.ring(), C.module.ring());
  const RingPtr& R = X.ring();
  const FpModule& Cm = C.module;
  Resolution F = free_resolution(X, 2);
  const Matrix g = F.module.rels();
  const Matrix f = F.d.size() > 1 ? F.d[1] : Matrix(g.col_deg(), {});
  std::vector<int> amb1 = hom_degrees(g.col_deg(), Cm);
  Matrix K1 = hom_rels(g.col_deg(), Cm);
  Matrix Hf = hom_induced(f, Cm);
  Matrix K2 = hom_rels(f.col_deg(), Cm);
  Matrix GK = hconcat(hom_induced(g, Cm), K1);
  FpModule T(R, amb1, GK);

  Matrix kerf = Hf.rows() == 0 ? Matrix::identity(amb1) : kernel_mod(*R, Hf, K2);
  Presentation PE = present_or_zero(R, Subquotient{kerf, GK});
  Presentation PS = present_or_zero(R, Subquotient{Hf, K2});

  TransposeDecomposition out;
  out.e_to_t = ModuleMap{PE.module, T, PE.emb};
  out.t_to_s = ModuleMap{T, PS.module, PS.module.ngens() ? PS.to_new : Matrix({}, amb1)};
  out.injective = is_injective(out.e_to_t);
  out.surjective = is_surjective(out.t_to_s);
  out.exact = is_exact_at(out.e_to_t, out.t_to_s);
  out.E = minimal_presentation(PE.module);
  out.T = minimal_presentation(T);
  out.S = minimal_presentation(PS.module);
  return out;
}

bool SixTerm::certified() const {
  return exact.size() == 6 && std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

SixTerm transpose_ses(const ModuleMap& alpha, const ModuleMap& beta, const Dualizer& C) {
  require_same_ring(alpha.source.ring(), C.module.ring());
  require_same_ring(beta.source.ring(), C.module.ring());
  if (alpha.target.fingerprint() != beta.source.fingerprint())
    throw Error(ErrorKind::RankMismatch, "X -> Y and Y -> Z do not compose");
  if (!is_well_defined(alpha) || !is_well_defined(beta) || !is_injective(alpha) || !is_surjective(beta) ||
      !is_exact_at(alpha, beta))
    throw Error(ErrorKind::NotExact, "0 -> X -> Y -> Z -> 0 is not exact");
  const RingPtr& R = alpha.source.ring();
  const FpModule& Cm = C.module;
  const FpModule& Y = alpha.target;
  const std::size_t nC = Cm.ngens();

  // minimal presentations of the ends, maps transported
  MinimalPresentation mx = minimal_presentation_data(alpha.source);
  MinimalPresentation mz = minimal_presentation_data(beta.target);
  const FpModule& Xm = mx.module;
  const FpModule& Zm = mz.module;
  Matrix al = alpha.matrix.select_columns(mx.kept);
  Matrix be = multiply(*R, mz.to_new, beta.matrix);
  const Matrix& a = Xm.rels();
  const Matrix& c = Zm.rels();

  // horseshoe: F0 = P0 + Q0 -> Y, relations [[a, -x], [0, c]]
  auto s = lift(*R, be, Matrix::identity(Zm.degrees()), &Zm.rels());
  if (!s) throw Error(ErrorKind::NotExact, "Y -> Z is not surjective");
  auto x = lift(*R, al, multiply(*R, *s, c), &Y.rels());
  if (!x) throw Error(ErrorKind::NotExact, "sequence is not exact at Y");
  const std::size_t p0 = Xm.ngens(), q0 = Zm.ngens(), p1 = a.cols();
  std::vector<int> f0 = concat(Xm.degrees(), Zm.degrees());
  std::vector<int> f1 = concat(a.col_deg(), c.col_deg());
  Matrix B(f0, f1);
  const auto& A = R->alg();
  for (std::size_t j = 0; j < p1; ++j)
    for (std::size_t i = 0; i < p0; ++i) B.at(i, j) = a.at(i, j);
  for (std::size_t j = 0; j < c.cols(); ++j) {
    for (std::size_t i = 0; i < p0; ++i) B.at(i, p1 + j) = A.neg(x->at(i, j));
    for (std::size_t i = 0; i < q0; ++i) B.at(p0 + i, p1 + j) = c.at(i, j);
  }
  FpModule Yb(R, f0, B);
  ModuleMap eps{Yb, Y, hconcat(al, *s)};
  if (!is_well_defined(eps) || !is_injective(eps) || !is_surjective(eps))
    throw Error(ErrorKind::NotExact, "horseshoe presentation does not present Y");

  Subquotient sqZ = hom_subquotient(Zm, Cm), sqY = hom_subquotient(Yb, Cm), sqX = hom_subquotient(Xm, Cm);
  Presentation PZ = present_or_zero(R, sqZ), PY = present_or_zero(R, sqY), PX = present_or_zero(R, sqX);
  FpModule tZ = dual_cokernel(R, c, Cm), tY = dual_cokernel(R, B, Cm), tX = dual_cokernel(R, a, Cm);

  std::vector<int> ambF0 = hom_degrees(f0, Cm), ambF1 = hom_degrees(f1, Cm);
  std::vector<int> ambQ0 = hom_degrees(Zm.degrees(), Cm), ambQ1 = hom_degrees(c.col_deg(), Cm);
  Matrix m1 = coords(R, sqY, PY, multiply(*R, block_inclusion(ambF0, p0 * nC, ambQ0), PZ.emb));
  Matrix m2 = coords(R, sqX, PX, multiply(*R, block_projection(ambF0, 0, p0 * nC), PY.emb));
  Matrix m3 = scale(*R, multiply(*R, hom_induced(*x, Cm), PX.emb), R->field().neg(Fp(1)));
  Matrix m4 = block_inclusion(ambF1, p1 * nC, ambQ1);
  Matrix m5 = block_projection(ambF1, 0, p1 * nC);

  SixTerm out;
  out.modules = {PZ.module, PY.module, PX.module, tZ, tY, tX};
  out.maps = {ModuleMap{PZ.module, PY.module, m1}, ModuleMap{PY.module, PX.module, m2},
              ModuleMap{PX.module, tZ, m3}, ModuleMap{tZ, tY, m4}, ModuleMap{tY, tX, m5}};
  out.exact.push_back(is_injective(out.maps[0]));
  for (std::size_t i = 0; i + 1 < out.maps.size(); ++i) out.exact.push_back(is_exact_at(out.maps[i], out.maps[i + 1]));
  out.exact.push_back(is_surjective(out.maps[4]));
  return out;
}

std::pair<ModuleMap, ModuleMap> syzygy_sequence(const FpModule& X) {
  Resolution F = free_resolution(X, 2);
  FpModule F0 = FpModule::free(X.ring(), F.module.degrees());
  FpModule om = syzygy(X, 1);
  Matrix inc = F.d.empty() ? Matrix(F.module.degrees(), {}) : F.d[0];
  return {ModuleMap{om, F0, inc}, ModuleMap{F0, F.module, Matrix::identity(F.module.degrees())}};
}

FpModule cosyzygy(const FpModule& M, const Dualizer& C) {
  require_same_ring(M.ring(), C.module.ring());
  return minimal_presentation(dual(syzygy(dual(M, C), 1), C));
}

// ---------------------------------------------------------------------------
// Words, stable equivalence, Ext vanishing

std::vector<Word> w_words(const Dualizer& C, std::size_t k, std::uint64_t seed) {
  const RingPtr& R = C.module.ring();
  std::vector<Word> out{Word{"R", FpModule::free(R, {0})}};
  std::vector<Word> frontier = out;
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (char letter : {'O', 'D'}) {
        FpModule N = minimal_presentation(letter == 'O' ? syzygy(w.module, 1) : dual(w.module, C));
        if (is_zero(N)) continue;
        bool seen = false;
        for (const auto& o : out)
          if (is_isomorphic(o.module, N, 64, seed).verdict == IsoVerdict::Iso) {
            seen = true;
            break;
          }
        if (seen) continue;
        Word nw{std::string(1, letter) + "(" + w.word + ")", N};
        out.push_back(nw);
        next.push_back(nw);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

using Numerator = std::map<int, long long>;

void accumulate(Numerator& acc, const Numerator& x, long long sign) {
  for (const auto& [d, c] : x) {
    long long& v = acc[d];
    v += sign * c;
    if (v == 0) acc.erase(d);
  }
}

std::pair<int, int> gen_range(const FpModule& M) {
  const auto& d = M.degrees();
  return {*std::min_element(d.begin(), d.end()), *std::max_element(d.begin(), d.end())};
}

}  // namespace

StableEquivalence stable_equiv_mod_add(const FpModule& X, const FpModule& Y, const Dualizer& C,
                                       std::size_t summand_bound, std::uint64_t seed, int trials) {
  require_same_ring(X.ring(), Y.ring());
  require_same_ring(X.ring(), C.module.ring());
  const RingPtr& R = X.ring();
  StableEquivalence res;
  FpModule mX = minimal_presentation(X), mY = minimal_presentation(Y);
  if (is_isomorphic(mX, mY, trials, seed).verdict == IsoVerdict::Iso) {
    res.yes = true;
    res.p = res.q = "0";
    res.reason = "X and Y are isomorphic";
    return res;
  }
  int lo = 0, hi = 0;
  bool any = false;
  for (const FpModule* M : {&mX, &mY}) {
    if (M->ngens() == 0) continue;
    auto [a, b] = gen_range(*M);
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  --lo;
  ++hi;

  struct Letter {
    std::string name;
    FpModule module;
    Numerator hs;
  };
  std::vector<Letter> alphabet;
  std::vector<std::string> seen;
  auto add_letter = [&](std::string name, FpModule M) {
    M = minimal_presentation(M);
    if (M.ngens() == 0) return;
    std::string fp = M.fingerprint();
    if (std::find(seen.begin(), seen.end(), fp) != seen.end()) return;
    seen.push_back(fp);
    Numerator hs = hilbert(M).numerator;
    alphabet.push_back(Letter{std::move(name), std::move(M), std::move(hs)});
  };
  FpModule Cmin = minimal_presentation(C.module);
  for (int t = lo; t <= hi; ++t) add_letter("R(" + std::to_string(-t) + ")", FpModule::free(R, {t}));
  if (Cmin.ngens() > 0) {
    const int c0 = gen_range(Cmin).first;
    for (int t = lo; t <= hi; ++t) add_letter("C(" + std::to_string(c0 - t) + ")", shift(Cmin, c0 - t));
  }

  // all multisets of at most summand_bound letters
  std::vector<std::vector<std::size_t>> sets{{}};
  for (std::size_t size = 1; size <= summand_bound; ++size) {
    std::vector<std::vector<std::size_t>> grown;
    for (const auto& s : sets) {
      if (s.size() != size - 1) continue;
      for (std::size_t i = s.empty() ? 0 : s.back(); i < alphabet.size(); ++i) {
        auto t = s;
        t.push_back(i);
        grown.push_back(std::move(t));
      }
    }
    sets.insert(sets.end(), grown.begin(), grown.end());
  }
  std::vector<Numerator> hs(sets.size());
  std::map<Numerator, std::vector<std::size_t>> by_hs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t l : sets[i]) accumulate(hs[i], alphabet[l].hs, 1);
    by_hs[hs[i]].push_back(i);
  }
  Numerator hx = hilbert(mX).numerator, hy = hilbert(mY).numerator;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cands;  // total size, P, Q
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Numerator need = hs[i];
    accumulate(need, hx, 1);
    accumulate(need, hy, -1);
    auto it = by_hs.find(need);
    if (it == by_hs.end()) continue;
    for (std::size_t j : it->second) {
      bool shared = false;
      for (std::size_t l : sets[i])
        shared = shared || std::find(sets[j].begin(), sets[j].end(), l) != sets[j].end();
      if (!shared) cands.emplace_back(sets[i].size() + sets[j].size(), i, j);
    }
  }
  std::sort(cands.begin(), cands.end());
  auto build = [&](FpModule M, const std::vector<std::size_t>& s, std::string& name) {
    for (std::size_t l : s) {
      M = direct_sum(M, alphabet[l].module);
      name += (name.empty() ? "" : " + ") + alphabet[l].name;
    }
    if (name.empty()) name = "0";
    return M;
  };
  for (const auto& [total, i, j] : cands) {
    std::string pn, qn;
    FpModule lhs = build(mX, sets[i], pn), rhs = build(mY, sets[j], qn);
    if (is_isomorphic(lhs, rhs, trials, seed).verdict != IsoVerdict::Iso) continue;
    res.yes = true;
    res.p = pn;
    res.q = qn;
    res.reason = "X + P = Y + Q certified";
    return res;
  }
  res.reason = "no certified isomorphism with at most " + std::to_string(summand_bound) + " summands per side";
  return res;
}

BoundedVerdict ext_vanishing_dim(const FpModule& M, const std::vector<FpModule>& B, std::size_t bound) {
  if (B.empty()) throw Error(ErrorKind::BadArgument, "ext_vanishing_dim needs a nonempty module list");
  for (const auto& b : B) require_same_ring(M.ring(), b.ring());
  BoundedVerdict v;
  v.bound = bound;
  for (std::size_t i = 1; i <= bound; ++i)
    for (const auto& b : B)
      if (!ext_is_zero(M, b, i)) {
        v.value = i;
        v.witness_index = i;
        break;
      }
  if (bound > 0 && v.value == bound) {
    v.kind = BoundedVerdict::Kind::Infinite;
    v.reason = "Ext^" + std::to_string(bound) + " != 0";
  }
  return v;
}

IsoResult is_isomorphic_up_to_shift(const FpModule& M, const FpModule& N, int trials, std::uint64_t seed) {
  FpModule a = minimal_presentation(M), b = minimal_presentation(N);
  if (a.ngens() == 0 || b.ngens() == 0) return is_isomorphic(a, b, trials, seed);
  const int t = gen_range(b).first - gen_range(a).first;
  return is_isomorphic(a, shift(b, t), trials, seed);
}

}  // namespace gcdim
