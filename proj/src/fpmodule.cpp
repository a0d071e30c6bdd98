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
#include "gcdim/fpmodule.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

namespace gcdim {

namespace {

Polynomial one_poly() { return Polynomial({Term{Monomial(), Fp(1)}}); }

std::vector<int> shifted(const std::vector<int>& v, int s) {
  std::vector<int> out(v);
  for (auto& x : out) x += s;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FpModule

FpModule::FpModule(RingPtr ring, std::vector<int> degrees, Matrix rels)
    : ring_(std::move(ring)), degrees_(std::move(degrees)) {
  if (rels.rows() != degrees_.size())
    throw Error(ErrorKind::RankMismatch, "relation matrix has " + std::to_string(rels.rows()) + " rows for " +
                                             std::to_string(degrees_.size()) + " generators");
  if (rels.row_deg() != degrees_) {
    Matrix m(degrees_, rels.col_deg());
    for (std::size_t j = 0; j < rels.cols(); ++j)
      for (std::size_t i = 0; i < rels.rows(); ++i) m.at(i, j) = rels.at(i, j);
    rels = std::move(m);
  }
  rels = nf(*ring_, rels);
  if (!rels.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "relations are not homogeneous for the given degrees");
  rels_ = rels.drop_zero_columns();
}

FpModule FpModule::free(RingPtr ring, std::vector<int> degrees) {
  Matrix m(degrees, {});
  return FpModule(std::move(ring), std::move(degrees), std::move(m));
}

FpModule FpModule::cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree) {
  Matrix m({degree}, {});
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    m.append_column({g}, degree + g.degree());
  }
  return FpModule(std::move(ring), {degree}, std::move(m));
}

FpModule FpModule::residue_field(RingPtr ring, int degree) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->alg().variable(i));
  return cyclic(std::move(ring), vars, degree);
}

std::string FpModule::fingerprint() const {
  std::string s = ring_->describe() + "|";
  for (int d : degrees_) s += std::to_string(d) + ",";
  s += "|";
  for (std::size_t j = 0; j < rels_.cols(); ++j) {
    s += "(" + std::to_string(rels_.col_deg()[j]) + ":";
    for (std::size_t i = 0; i < rels_.rows(); ++i) s += ring_->format(rels_.at(i, j)) + ";";
    s += ")";
  }
  return s;
}

std::string FpModule::describe() const {
  std::string s = "coker [";
  for (std::size_t i = 0; i < rels_.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < rels_.cols(); ++j) s += (j ? ", " : "") + ring_->format(rels_.at(i, j));
    s += "]";
  }
  s += "] degrees [";
  for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
  return s + "]";
}

bool is_zero(const FpModule& M) {
  if (M.ngens() == 0) return true;
  return SubmoduleGB(*M.ring(), M.rels()).contains_columns(Matrix::identity(M.degrees()));
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<int> d = a.degrees();
  d.insert(d.end(), b.degrees().begin(), b.degrees().end());
  return FpModule(a.ring(), d, block_diag(a.rels(), b.rels()));
}

FpModule shift(const FpModule& M, int s) {
  Matrix m(shifted(M.degrees(), -s), shifted(M.rels().col_deg(), -s));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = M.rels().at(i, j);
  return FpModule(M.ring(), shifted(M.degrees(), -s), std::move(m));
}

// ---------------------------------------------------------------------------
// Maps

ModuleMap make_map(const FpModule& source, const FpModule& target, Matrix matrix) {
  require_same_ring(source.ring(), target.ring());
  if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens())
    throw Error(ErrorKind::RankMismatch, "map matrix has the wrong shape");
  Matrix m(target.degrees(), source.degrees());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = target.ring()->nf(matrix.at(i, j));
  if (!m.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "map is not homogeneous of degree 0");
  ModuleMap f{source, target, std::move(m)};
  if (!is_well_defined(f)) throw Error(ErrorKind::NotExact, "map does not send relations to relations");
  return f;
}

bool is_well_defined(const ModuleMap& f) {
  const Ring& R = *f.target.ring();
  return SubmoduleGB(R, f.target.rels()).contains_columns(multiply(R, f.matrix, f.source.rels()));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return ModuleMap{f.source, g.target, multiply(*f.source.ring(), g.matrix, f.matrix)};
}

ModuleMap identity_map(const FpModule& M) { return ModuleMap{M, M, Matrix::identity(M.degrees())}; }

bool is_injective(const ModuleMap& f) {
  const Ring& R = *f.source.ring();
  Matrix ker = kernel_mod(R, f.matrix, f.target.rels());
  return SubmoduleGB(R, f.source.rels()).contains_columns(ker);
}

bool is_surjective(const ModuleMap& f) {
  const Ring& R = *f.source.ring();
  return SubmoduleGB(R, hconcat(f.matrix, f.target.rels())).contains_columns(Matrix::identity(f.target.degrees()));
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  const Ring& R = *f.source.ring();
  return SubmoduleGB(R, f.target.rels()).contains_columns(subtract(R, f.matrix, g.matrix));
}

bool is_exact_at(const ModuleMap& f, const ModuleMap& g) {
  const Ring& R = *f.source.ring();
  if (!SubmoduleGB(R, g.target.rels()).contains_columns(multiply(R, g.matrix, f.matrix))) return false;
  Matrix ker = kernel_mod(R, g.matrix, g.target.rels());
  return SubmoduleGB(R, hconcat(f.matrix, f.target.rels())).contains_columns(ker);
}

ModuleMap kernel(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  Subquotient sq{kernel_mod(*R, f.matrix, f.target.rels()), f.source.rels()};
  Presentation p = present(R, sq);
  return ModuleMap{p.module, f.source, p.emb};
}

ModuleMap cokernel(const ModuleMap& f) {
  FpModule C(f.target.ring(), f.target.degrees(), hconcat(f.target.rels(), f.matrix));
  return ModuleMap{f.target, C, Matrix::identity(f.target.degrees())};
}

ModuleMap image(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  Presentation p = present(R, Subquotient{f.matrix, f.target.rels()});
  return ModuleMap{p.module, f.target, p.emb};
}

// ---------------------------------------------------------------------------
// Minimal presentations

MinimalPresentation minimal_presentation_data(const FpModule& M) {
  const Ring& R = *M.ring();
  const auto& F = R.field();
  const auto& A = R.alg();
  const std::size_t r = M.ngens();
  const Matrix& rels = M.rels();

  std::vector<std::vector<Polynomial>> K;
  for (std::size_t j = 0; j < rels.cols(); ++j) K.push_back(rels.column(j));
  // T[k][o]: coefficient of surviving generator k in old generator o
  std::vector<std::vector<Polynomial>> T(r, std::vector<Polynomial>(r));
  for (std::size_t i = 0; i < r; ++i) T[i][i] = one_poly();
  std::vector<bool> row_dead(r, false), col_dead(K.size(), false);

  while (true) {
    std::size_t pi = r, pj = K.size();
    for (std::size_t j = 0; j < K.size() && pj == K.size(); ++j) {
      if (col_dead[j]) continue;
      for (std::size_t i = 0; i < r; ++i)
        if (!row_dead[i] && !K[j][i].is_zero() && K[j][i].is_constant()) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pj == K.size()) break;
    const Fp cinv = F.inv(K[pj][pi].leading().coef);
    // clear row pi from the other columns
    for (std::size_t l = 0; l < K.size(); ++l) {
      if (l == pj || col_dead[l] || K[l][pi].is_zero()) continue;
      Polynomial f = A.scale(K[l][pi], F.neg(cinv));
      for (std::size_t i = 0; i < r; ++i) {
        if (row_dead[i] || K[pj][i].is_zero()) continue;
        K[l][i] = R.nf(A.add(K[l][i], A.mul(f, K[pj][i])));
      }
    }
    // e_pi = -cinv * sum_{k != pi} K[pj][k] e_k
    for (std::size_t o = 0; o < r; ++o) {
      if (T[pi][o].is_zero()) continue;
      for (std::size_t k = 0; k < r; ++k) {
        if (k == pi || row_dead[k] || K[pj][k].is_zero()) continue;
        T[k][o] = R.nf(A.add(T[k][o], A.mul(A.scale(K[pj][k], F.neg(cinv)), T[pi][o])));
      }
    }
    row_dead[pi] = true;
    col_dead[pj] = true;
  }

  MinimalPresentation out;
  std::vector<int> degs;
  for (std::size_t i = 0; i < r; ++i)
    if (!row_dead[i]) {
      out.kept.push_back(i);
      degs.push_back(M.degrees()[i]);
    }
  Matrix rel(degs, {});
  for (std::size_t j = 0; j < K.size(); ++j) {
    if (col_dead[j]) continue;
    std::vector<Polynomial> col;
    bool zero = true;
    for (std::size_t i : out.kept) {
      col.push_back(K[j][i]);
      zero = zero && K[j][i].is_zero();
    }
    if (!zero) rel.append_column(col, rels.col_deg()[j]);
  }
  out.module = FpModule(M.ring(), degs, minimal_columns(R, rel));
  out.to_new = Matrix(degs, M.degrees());
  for (std::size_t k = 0; k < out.kept.size(); ++k)
    for (std::size_t o = 0; o < r; ++o) out.to_new.at(k, o) = T[out.kept[k]][o];
  return out;
}

FpModule minimal_presentation(const FpModule& M) { return minimal_presentation_data(M).module; }

Presentation present(const RingPtr& R, const Subquotient& sq) {
  Matrix K = kernel_mod(*R, sq.gens, sq.rels);
  MinimalPresentation mp = minimal_presentation_data(FpModule(R, sq.gens.col_deg(), K));
  return Presentation{mp.module, sq.gens.select_columns(mp.kept), mp.to_new};
}

bool is_zero(const RingPtr& R, const Subquotient& sq) {
  if (sq.gens.cols() == 0) return true;
  return SubmoduleGB(*R, sq.rels).contains_columns(sq.gens);
}

Matrix coordinates(const RingPtr& R, const Subquotient& sq, const Presentation& p, const Matrix& elems) {
  auto u = lift(*R, sq.gens, elems, &sq.rels);
  if (!u) throw Error(ErrorKind::NotExact, "element does not lie in the subquotient");
  return multiply(*R, p.to_new, *u);
}

// ---------------------------------------------------------------------------
// Resolutions

std::vector<int> Resolution::free_degrees(std::size_t i) const {
  if (i == 0) return module.degrees();
  if (i - 1 < d.size()) return d[i - 1].col_deg();
  return {};
}

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i <= d.size(); ++i) b.push_back(rank(i));
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

std::size_t Resolution::length() const {
  std::size_t len = 0;
  for (std::size_t i = 0; i <= d.size(); ++i)
    if (rank(i) > 0) len = i;
  return len;
}

namespace {

struct CacheEntry {
  std::mutex mu;
  bool init = false;
  Resolution res;
};

std::mutex g_cache_mu;
std::unordered_map<std::string, std::shared_ptr<CacheEntry>> g_cache;

}  // namespace

Resolution free_resolution(const FpModule& M, std::size_t bound) {
  std::shared_ptr<CacheEntry> e;
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto& slot = g_cache[M.fingerprint()];
    if (!slot) slot = std::make_shared<CacheEntry>();
    e = slot;
  }
  std::lock_guard<std::mutex> lk(e->mu);
  Resolution& full = e->res;
  if (!e->init) {
    full.module = minimal_presentation(M);
    e->init = true;
  }
  const Ring& R = *M.ring();
  auto stopped = [&] { return full.module.ngens() == 0 || (!full.d.empty() && full.d.back().cols() == 0); };
  while (full.d.size() < bound && !stopped()) {
    if (full.d.empty()) full.d.push_back(full.module.rels());
    else full.d.push_back(syzygies(R, full.d.back()));
  }
  Resolution out;
  out.module = full.module;
  out.bound = bound;
  out.d.assign(full.d.begin(), full.d.begin() + static_cast<std::ptrdiff_t>(std::min(bound, full.d.size())));
  out.finite = out.module.ngens() == 0;
  for (const auto& m : out.d) out.finite = out.finite || m.cols() == 0;
  return out;
}

void clear_resolution_cache() {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_cache.clear();
}

bool certify_resolution(const Resolution& F) {
  const Ring& R = *F.module.ring();
  for (std::size_t i = 0; i < F.d.size(); ++i) {
    if (!F.d[i].is_minimal() || !F.d[i].is_homogeneous()) return false;
    if (F.d[i].rows() != F.rank(i)) return false;
    if (i + 1 < F.d.size()) {
      if (!multiply(R, F.d[i], F.d[i + 1]).is_zero()) return false;
      Matrix ker = syzygies(R, F.d[i], false);
      if (!SubmoduleGB(R, F.d[i + 1]).contains_columns(ker)) return false;
    } else if (F.d[i].cols() == 0 && i > 0) {
      // resolution ended: d_i must be injective
      if (syzygies(R, F.d[i - 1], false).cols() != 0 &&
          !SubmoduleGB(R, F.d[i]).contains_columns(syzygies(R, F.d[i - 1], false)))
        return false;
    }
  }
  return true;
}

FpModule syzygy(const FpModule& M, std::size_t n) {
  Resolution F = free_resolution(M, n + 1);
  if (n == 0) return F.module;
  std::vector<int> degs = F.free_degrees(n);
  if (degs.empty()) return FpModule::zero(M.ring());
  Matrix rel = n < F.d.size() ? F.d[n] : Matrix(degs, {});
  return FpModule(M.ring(), degs, rel);
}

// ---------------------------------------------------------------------------
// Hom, Ext, Tor

// Ambient of Hom(F, N) for F with generator degrees `fdeg`: block (k, l) of
// degree g_l - fdeg[k]; relations are the shifted copies of N's relations.
std::vector<int> hom_degrees(const std::vector<int>& fdeg, const FpModule& N) {
  std::vector<int> out;
  for (int a : fdeg)
    for (int g : N.degrees()) out.push_back(g - a);
  return out;
}

Matrix hom_rels(const std::vector<int>& fdeg, const FpModule& N) {
  const std::size_t n = N.ngens();
  std::vector<int> cd;
  for (int a : fdeg)
    for (int c : N.rels().col_deg()) cd.push_back(c - a);
  Matrix m(hom_degrees(fdeg, N), cd);
  const std::size_t s = N.rels().cols();
  for (std::size_t k = 0; k < fdeg.size(); ++k)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t l = 0; l < n; ++l) m.at(k * n + l, k * s + j) = N.rels().at(l, j);
  return m;
}

// Precomposition with d : F' -> F, from Hom(F, N) to Hom(F', N).
Matrix hom_induced(const Matrix& d, const FpModule& N) {
  const std::size_t n = N.ngens();
  Matrix m(hom_degrees(d.col_deg(), N), hom_degrees(d.row_deg(), N));
  for (std::size_t k = 0; k < d.rows(); ++k)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.at(k, j).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) m.at(j * n + l, k * n + l) = d.at(k, j);
    }
  return m;
}

namespace {

std::vector<int> tensor_degrees(const std::vector<int>& fdeg, const FpModule& N) {
  std::vector<int> out;
  for (int a : fdeg)
    for (int g : N.degrees()) out.push_back(g + a);
  return out;
}

Matrix tensor_rels(const std::vector<int>& fdeg, const FpModule& N) {
  const std::size_t n = N.ngens();
  std::vector<int> cd;
  for (int a : fdeg)
    for (int c : N.rels().col_deg()) cd.push_back(c + a);
  Matrix m(tensor_degrees(fdeg, N), cd);
  const std::size_t s = N.rels().cols();
  for (std::size_t k = 0; k < fdeg.size(); ++k)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t l = 0; l < n; ++l) m.at(k * n + l, k * s + j) = N.rels().at(l, j);
  return m;
}

// d ⊗ N : F' ⊗ N -> F ⊗ N.
Matrix tensor_induced(const Matrix& d, const FpModule& N) {
  const std::size_t n = N.ngens();
  Matrix m(tensor_degrees(d.row_deg(), N), tensor_degrees(d.col_deg(), N));
  for (std::size_t j = 0; j < d.rows(); ++j)
    for (std::size_t k = 0; k < d.cols(); ++k) {
      if (d.at(j, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) m.at(j * n + l, k * n + l) = d.at(j, k);
    }
  return m;
}

Matrix kernel_or_all(const Ring& R, const Matrix& a, const Matrix& k, const std::vector<int>& amb) {
  if (a.rows() == 0) return Matrix::identity(amb);
  return kernel_mod(R, a, k);
}

}  // namespace

Subquotient hom_subquotient(const FpModule& M, const FpModule& N) {
  require_same_ring(M.ring(), N.ring());
  const Ring& R = *M.ring();
  std::vector<int> amb0 = hom_degrees(M.degrees(), N);
  Matrix K0 = hom_rels(M.degrees(), N);
  Matrix delta = hom_induced(M.rels(), N);
  Matrix K1 = hom_rels(M.rels().col_deg(), N);
  return Subquotient{kernel_or_all(R, delta, K1, amb0), K0};
}

FpModule hom(const FpModule& M, const FpModule& N) { return present(M.ring(), hom_subquotient(M, N)).module; }

Matrix hom_element_to_matrix(const FpModule& M, const FpModule& N, const std::vector<Polynomial>& col) {
  Matrix m(N.degrees(), M.degrees());
  const std::size_t n = N.ngens();
  for (std::size_t k = 0; k < M.ngens(); ++k)
    for (std::size_t l = 0; l < n; ++l) m.at(l, k) = col[k * n + l];
  return m;
}

std::vector<Polynomial> matrix_to_hom_element(const FpModule& M, const FpModule& N, const Matrix& m) {
  const std::size_t n = N.ngens();
  std::vector<Polynomial> col(M.ngens() * n);
  for (std::size_t k = 0; k < M.ngens(); ++k)
    for (std::size_t l = 0; l < n; ++l) col[k * n + l] = m.at(l, k);
  return col;
}

Subquotient ext_subquotient(const FpModule& M, const FpModule& N, std::size_t i) {
  require_same_ring(M.ring(), N.ring());
  const Ring& R = *M.ring();
  Resolution F = free_resolution(M, i + 1);
  std::vector<int> fi = F.free_degrees(i);
  std::vector<int> amb = hom_degrees(fi, N);
  if (amb.empty()) return Subquotient{Matrix(amb, {}), Matrix(amb, {})};
  Matrix Ki = hom_rels(fi, N);
  Matrix gens;
  if (i < F.d.size() && F.d[i].cols() > 0) {
    gens = kernel_mod(R, hom_induced(F.d[i], N), hom_rels(F.d[i].col_deg(), N));
  } else {
    gens = Matrix::identity(amb);
  }
  Matrix rels = Ki;
  if (i > 0) rels = hconcat(hom_induced(F.d[i - 1], N), Ki);
  return Subquotient{gens, rels};
}

FpModule ext(const FpModule& M, const FpModule& N, std::size_t i) {
  return present(M.ring(), ext_subquotient(M, N, i)).module;
}

bool ext_is_zero(const FpModule& M, const FpModule& N, std::size_t i) {
  return is_zero(M.ring(), ext_subquotient(M, N, i));
}

namespace {

Subquotient tor_subquotient(const FpModule& M, const FpModule& N, std::size_t i) {
  require_same_ring(M.ring(), N.ring());
  const Ring& R = *M.ring();
  Resolution F = free_resolution(M, i + 1);
  std::vector<int> fi = F.free_degrees(i);
  std::vector<int> amb = tensor_degrees(fi, N);
  if (amb.empty()) return Subquotient{Matrix(amb, {}), Matrix(amb, {})};
  Matrix Ki = tensor_rels(fi, N);
  Matrix gens = i == 0 ? Matrix::identity(amb)
                       : kernel_mod(R, tensor_induced(F.d[i - 1], N), tensor_rels(F.free_degrees(i - 1), N));
  Matrix rels = Ki;
  if (i < F.d.size() && F.d[i].cols() > 0) rels = hconcat(tensor_induced(F.d[i], N), Ki);
  return Subquotient{gens, rels};
}

}  // namespace

FpModule tor(const FpModule& M, const FpModule& N, std::size_t i) {
  return present(M.ring(), tor_subquotient(M, N, i)).module;
}

bool tor_is_zero(const FpModule& M, const FpModule& N, std::size_t i) {
  return is_zero(M.ring(), tor_subquotient(M, N, i));
}

// ---------------------------------------------------------------------------
// Ideals and annihilators

std::vector<Polynomial> ideal_canonical(const Ring& R, const std::vector<Polynomial>& J) {
  std::vector<Polynomial> gens = R.ideal_gb();
  for (const auto& g : J)
    if (!g.is_zero()) gens.push_back(g);
  return ideal_basis(R.alg(), gens);
}

bool ideal_contains(const Ring& R, const std::vector<Polynomial>& J, const Polynomial& f) {
  if (f.is_zero()) return true;
  auto gb = ideal_canonical(R, J);
  std::vector<Vec> basis;
  GroebnerEngine e(R.alg(), {0});
  for (const auto& g : gb) e.add(poly_to_vec(g, 0));
  e.complete();
  // the engine needs homogeneous input; reduce each graded piece separately
  std::map<int, std::vector<Term>> pieces;
  for (const auto& t : f.terms()) pieces[t.mon.degree()].push_back(t);
  for (auto& [d, ts] : pieces)
    if (!e.reduce(poly_to_vec(Polynomial(ts), 0)).empty()) return false;
  return true;
}

bool ideal_subset(const Ring& R, const std::vector<Polynomial>& A, const std::vector<Polynomial>& B) {
  for (const auto& f : A)
    if (!ideal_contains(R, B, f)) return false;
  return true;
}

std::vector<Polynomial> annihilator(const FpModule& Min) {
  const RingPtr& R = Min.ring();
  FpModule M = minimal_presentation(Min);
  if (M.ngens() == 0) return {one_poly()};
  const std::size_t m = M.ngens();
  // R -> (+)_i M(a_i), 1 |-> (e_1, ..., e_m); copy i has degrees a_l - a_i
  std::vector<int> amb;
  Matrix K;
  for (std::size_t i = 0; i < m; ++i) {
    FpModule Mi = shift(M, M.degrees()[i]);
    for (int d : Mi.degrees()) amb.push_back(d);
    K = i == 0 ? Mi.rels() : block_diag(K, Mi.rels());
  }
  Matrix a(amb, {0});
  for (std::size_t i = 0; i < m; ++i) a.at(i * m + i, 0) = one_poly();
  Matrix ker = kernel_mod(*R, a, K);
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < ker.cols(); ++j)
    if (!ker.at(0, j).is_zero()) out.push_back(ker.at(0, j));
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using IntPoly = std::vector<long long>;

void poly_add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/J for a monomial ideal J.
IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens)
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g.exponent(v)) ++count[v];
  std::size_t pivot = kMaxVars;
  int best = 1;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (count[v] > best) {
      best = count[v];
      pivot = v;
    }
  if (pivot == kMaxVars) {
    // pairwise coprime generators
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() = -1;
      r = poly_mul(r, f);
    }
    return r;
  }
  Monomial x = Monomial::variable(pivot);
  std::vector<Monomial> plus = gens, colon;
  plus.push_back(x);
  for (const auto& g : gens) colon.push_back(g.exponent(pivot) ? g.divided_by(x) : g);
  IntPoly r = hilbert_numerator(std::move(plus));
  poly_add_shifted(r, hilbert_numerator(std::move(colon)), 1);
  return r;
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long HilbertSeries::dim(int d) const {
  long long s = 0;
  const long long n = static_cast<long long>(nvars);
  for (const auto& [e, c] : numerator)
    if (d >= e) s += c * binom(d - e + n - 1, n - 1);
  return s;
}

std::vector<long long> HilbertSeries::range(int lo, int hi) const {
  std::vector<long long> out;
  for (int d = lo; d <= hi; ++d) out.push_back(dim(d));
  return out;
}

int HilbertSeries::krull_dim() const {
  if (numerator.empty()) return kZeroDim;
  const int low = numerator.begin()->first;
  IntPoly q(static_cast<std::size_t>(numerator.rbegin()->first - low + 1), 0);
  for (const auto& [e, c] : numerator) q[static_cast<std::size_t>(e - low)] = c;
  int mult = 0;
  while (true) {
    long long at1 = std::accumulate(q.begin(), q.end(), 0LL);
    if (at1 != 0) break;
    IntPoly p(q.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      p[k] = acc;
    }
    q = std::move(p);
    ++mult;
  }
  return static_cast<int>(nvars) - mult;
}

HilbertSeries hilbert(const FpModule& M) {
  HilbertSeries hs;
  hs.nvars = M.ring()->nvars();
  if (M.ngens() == 0) return hs;
  SubmoduleGB gb(*M.ring(), M.rels());
  std::vector<std::vector<Monomial>> lead(M.ngens());
  for (const auto& [pos, mon] : gb.leading_terms()) lead[pos].push_back(mon);
  for (std::size_t pos = 0; pos < M.ngens(); ++pos) {
    IntPoly p = hilbert_numerator(std::move(lead[pos]));
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k]) hs.numerator[M.degrees()[pos] + static_cast<int>(k)] += p[k];
  }
  for (auto it = hs.numerator.begin(); it != hs.numerator.end();)
    it = it->second == 0 ? hs.numerator.erase(it) : std::next(it);
  return hs;
}

std::vector<long long> hilbert_series(const FpModule& M, int D) { return hilbert(M).range(0, D); }

int krull_dim(const FpModule& M) { return hilbert(M).krull_dim(); }

// ---------------------------------------------------------------------------
// Isomorphism search

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Iso: return "Iso";
    case IsoVerdict::NotIso: return "NotIso";
    case IsoVerdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

IsoResult is_isomorphic(const FpModule& M, const FpModule& N, int trials, std::uint64_t seed) {
  require_same_ring(M.ring(), N.ring());
  const RingPtr& R = M.ring();
  const auto& A = R->alg();
  IsoResult res;
  if (!(hilbert(M) == hilbert(N))) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "Hilbert series differ";
    return res;
  }
  FpModule mM = minimal_presentation(M), mN = minimal_presentation(N);
  if (sorted(mM.degrees()) != sorted(mN.degrees()) || sorted(mM.rels().col_deg()) != sorted(mN.rels().col_deg())) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "Betti numbers differ";
    return res;
  }
  if (mM.ngens() == 0) {
    res.verdict = IsoVerdict::Iso;
    res.reason = "both modules are zero";
    res.map = ModuleMap{M, N, Matrix(N.degrees(), M.degrees())};
    res.inverse = ModuleMap{N, M, Matrix(M.degrees(), N.degrees())};
    return res;
  }
  if (ideal_canonical(*R, annihilator(mM)) != ideal_canonical(*R, annihilator(mN))) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "annihilators differ";
    return res;
  }

  Subquotient sq = hom_subquotient(M, N);
  // spanning set of Hom(M, N)_0 inside the ambient
  std::vector<std::vector<Polynomial>> basis;
  for (std::size_t j = 0; j < sq.gens.cols(); ++j) {
    int e = sq.gens.col_deg()[j];
    if (e > 0) continue;
    for (const auto& mon : R->standard_monomials(-e)) {
      std::vector<Polynomial> col = sq.gens.column(j);
      bool zero = true;
      for (auto& p : col) {
        p = R->nf(A.mul_term(p, mon, Fp(1)));
        zero = zero && p.is_zero();
      }
      if (!zero) basis.push_back(std::move(col));
    }
  }
  if (basis.empty()) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "no nonzero homomorphism of degree 0";
    return res;
  }
  SubmoduleGB relM(*R, M.rels());
  SubmoduleGB relN(*R, N.rels());
  Matrix idN = Matrix::identity(N.degrees());
  Matrix idM = Matrix::identity(M.degrees());
  std::mt19937_64 rng(seed);
  const std::uint32_t p = R->field().characteristic();
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial> u(basis.front().size());
    for (const auto& b : basis) {
      Fp c(static_cast<std::uint32_t>(rng() % p));
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = A.add_scaled(u[i], b[i], Monomial(), c);
    }
    Matrix phi = hom_element_to_matrix(M, N, u);
    auto psi = lift(*R, phi, idN, &N.rels());
    if (!psi) continue;
    Matrix back = subtract(*R, multiply(*R, *psi, phi), idM);
    if (!relM.contains_columns(back)) continue;
    if (!relM.contains_columns(multiply(*R, *psi, N.rels()))) continue;
    if (!relN.contains_columns(multiply(*R, phi, M.rels()))) continue;
    Matrix inv(M.degrees(), N.degrees());
    for (std::size_t j = 0; j < inv.cols(); ++j)
      for (std::size_t i = 0; i < inv.rows(); ++i) inv.at(i, j) = psi->at(i, j);
    res.verdict = IsoVerdict::Iso;
    res.reason = "verified two-sided inverse (trial " + std::to_string(t + 1) + ")";
    res.map = ModuleMap{M, N, phi};
    res.inverse = ModuleMap{N, M, inv};
    return res;
  }
  res.verdict = IsoVerdict::Unknown;
  res.reason = "no invertible map among " + std::to_string(trials) + " random candidates";
  return res;
}

}  // namespace gcdim
