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
#include "gcdim/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace gcdim {

Matrix::Matrix(std::vector<int> row_deg, std::vector<int> col_deg)
    : row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)), data_(row_deg_.size() * col_deg_.size()) {}

Matrix Matrix::identity(const std::vector<int>& degs) {
  Matrix m(degs, degs);
  for (std::size_t i = 0; i < degs.size(); ++i) m.at(i, i) = Polynomial({Term{Monomial(), Fp(1)}});
  return m;
}

std::vector<Polynomial> Matrix::column(std::size_t j) const {
  return std::vector<Polynomial>(data_.begin() + static_cast<std::ptrdiff_t>(j * rows()),
                                 data_.begin() + static_cast<std::ptrdiff_t>((j + 1) * rows()));
}

void Matrix::append_column(const std::vector<Polynomial>& col, int degree) {
  if (col.size() != rows()) throw Error(ErrorKind::RankMismatch, "column length does not match row count");
  data_.insert(data_.end(), col.begin(), col.end());
  col_deg_.push_back(degree);
}

bool Matrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows(); ++i)
    if (!at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(row_deg_, {});
  for (std::size_t j : idx) m.append_column(column(j), col_deg_[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<int> rd;
  for (std::size_t i : idx) rd.push_back(row_deg_[i]);
  Matrix m(rd, col_deg_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t k = 0; k < idx.size(); ++k) m.at(k, j) = at(idx[k], j);
  return m;
}

Matrix Matrix::drop_zero_columns() const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols(); ++j)
    if (!column_is_zero(j)) keep.push_back(j);
  return select_columns(keep);
}

Matrix Matrix::row_block(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx(end - begin);
  std::iota(idx.begin(), idx.end(), begin);
  return select_rows(idx);
}

bool Matrix::is_homogeneous() const {
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows(); ++i) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != col_deg_[j] - row_deg_[i]) return false;
    }
  return true;
}

bool Matrix::is_minimal() const {
  for (const auto& p : data_)
    if (!p.is_zero() && p.terms().back().mon.is_one()) return false;
  return true;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.row_deg() != b.row_deg()) throw Error(ErrorKind::RankMismatch, "hconcat of matrices with different rows");
  Matrix m = a;
  for (std::size_t j = 0; j < b.cols(); ++j) m.append_column(b.column(j), b.col_deg()[j]);
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  std::vector<int> rd = a.row_deg(), cd = a.col_deg();
  rd.insert(rd.end(), b.row_deg().begin(), b.row_deg().end());
  cd.insert(cd.end(), b.col_deg().begin(), b.col_deg().end());
  Matrix m(rd, cd);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

Matrix multiply(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::RankMismatch, "matrix product with mismatched inner dimension");
  const auto& alg = R.alg();
  Matrix m(a.row_deg(), b.col_deg());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& bk = b.at(k, j);
      if (bk.is_zero()) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const Polynomial& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        m.at(i, j) = alg.add(m.at(i, j), alg.mul(aik, bk));
      }
    }
  return nf(R, m);
}

Matrix scale(const Ring& R, const Matrix& a, Fp c) {
  Matrix m = a;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = R.alg().scale(a.at(i, j), c);
  return m;
}

Matrix subtract(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::RankMismatch, "matrix difference");
  Matrix m = a;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = R.sub(a.at(i, j), b.at(i, j));
  return m;
}

Matrix nf(const Ring& R, const Matrix& m) {
  if (R.is_polynomial_ring()) return m;
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, j) = R.nf(m.at(i, j));
  return out;
}

Vec column_vec(const Matrix& m, std::size_t j, std::uint32_t offset) {
  Vec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& t : m.at(i, j).terms()) v.push_back(VTerm{static_cast<std::uint32_t>(i) + offset, t.mon, t.coef});
  return v;
}

std::vector<Polynomial> vec_column(const Vec& v, std::size_t rows, std::uint32_t offset) {
  std::vector<std::vector<Term>> terms(rows);
  for (const auto& t : v) {
    if (t.pos < offset || t.pos - offset >= rows) continue;
    terms[t.pos - offset].push_back(Term{t.mon, t.coef});
  }
  std::vector<Polynomial> col;
  col.reserve(rows);
  for (auto& ts : terms) col.emplace_back(std::move(ts));
  return col;
}

namespace {

void add_ideal(GroebnerEngine& eng, const Ring& R, std::size_t rows) {
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& g : R.ideal_gb()) eng.add(poly_to_vec(g, static_cast<std::uint32_t>(i)));
}

VTerm unit(std::size_t pos) { return VTerm{static_cast<std::uint32_t>(pos), Monomial(), Fp(1)}; }

// Engine over the augmented module R^(r+c): top rows are `a`'s rows, bottom
// rows index a's columns. Generators (a_j ; e_j), (k_l ; 0), (g e_i ; 0).
GroebnerEngine augmented(const Ring& R, const Matrix& a, const Matrix* k) {
  std::vector<int> tw = a.row_deg();
  tw.insert(tw.end(), a.col_deg().begin(), a.col_deg().end());
  GroebnerEngine eng(R.alg(), tw);
  const std::size_t r = a.rows();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec v = column_vec(a, j);
    v.push_back(unit(r + j));
    eng.add(std::move(v));
  }
  if (k)
    for (std::size_t l = 0; l < k->cols(); ++l) eng.add(column_vec(*k, l));
  add_ideal(eng, R, r);
  eng.complete();
  return eng;
}

}  // namespace

SubmoduleGB::SubmoduleGB(const Ring& R, const Matrix& gens) : eng_(R.alg(), gens.row_deg()), rows_(gens.rows()) {
  for (std::size_t j = 0; j < gens.cols(); ++j) eng_.add(column_vec(gens, j));
  add_ideal(eng_, R, rows_);
  eng_.complete();
}

SubmoduleGB::SubmoduleGB(const Ring& R, std::vector<int> row_deg) : eng_(R.alg(), row_deg), rows_(row_deg.size()) {
  add_ideal(eng_, R, rows_);
  eng_.complete();
}

std::vector<Polynomial> SubmoduleGB::reduce(const std::vector<Polynomial>& col) const {
  Vec v;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms()) v.push_back(VTerm{static_cast<std::uint32_t>(i), t.mon, t.coef});
  return vec_column(eng_.reduce(v), rows_);
}

bool SubmoduleGB::contains(const std::vector<Polynomial>& col) const {
  for (const auto& p : reduce(col))
    if (!p.is_zero()) return false;
  return true;
}

bool SubmoduleGB::contains_columns(const Matrix& m) const {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.column(j))) return false;
  return true;
}

Matrix syzygies(const Ring& R, const Matrix& a, bool minimal) {
  if (!a.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "syzygies of a non-homogeneous matrix");
  GroebnerEngine eng = augmented(R, a, nullptr);
  const std::size_t r = a.rows();
  Matrix ker(a.col_deg(), {});
  for (const auto& v : eng.reduced_basis()) {
    if (v.front().pos < r) continue;
    std::vector<Polynomial> col = vec_column(v, a.cols(), static_cast<std::uint32_t>(r));
    bool zero = true;
    for (auto& p : col) {
      p = R.nf(p);
      zero = zero && p.is_zero();
    }
    if (!zero) ker.append_column(col, vec_degree(v, eng.twists()));
  }
  return minimal ? minimal_columns(R, ker) : ker;
}

Matrix kernel_mod(const Ring& R, const Matrix& a, const Matrix& k) {
  if (k.cols() == 0) return syzygies(R, a, true);
  Matrix s = syzygies(R, hconcat(a, k), false);
  return minimal_columns(R, s.row_block(0, a.cols()));
}

Matrix minimal_columns(const Ring& R, const Matrix& gens, const Matrix* base) {
  GroebnerEngine eng(R.alg(), gens.row_deg());
  add_ideal(eng, R, gens.rows());
  if (base)
    for (std::size_t j = 0; j < base->cols(); ++j) eng.add(column_vec(*base, j));
  std::vector<std::size_t> order(gens.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return gens.col_deg()[x] < gens.col_deg()[y]; });
  std::vector<std::size_t> keep;
  for (std::size_t j : order) {
    Vec v = column_vec(gens, j);
    if (v.empty()) continue;
    eng.complete_to(gens.col_deg()[j]);
    if (eng.reduce(v).empty()) continue;
    keep.push_back(j);
    eng.add(std::move(v));
  }
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t x, std::size_t y) {
              if (gens.col_deg()[x] != gens.col_deg()[y]) return gens.col_deg()[x] < gens.col_deg()[y];
              return x < y;
            });
  return nf(R, gens.select_columns(keep));
}

std::optional<Matrix> lift(const Ring& R, const Matrix& a, const Matrix& t, const Matrix* k) {
  if (a.row_deg() != t.row_deg()) throw Error(ErrorKind::RankMismatch, "lift target has different rows");
  GroebnerEngine eng = augmented(R, a, k);
  const std::size_t r = a.rows();
  Matrix x(a.col_deg(), {});
  const auto& F = R.field();
  for (std::size_t j = 0; j < t.cols(); ++j) {
    Vec red = eng.reduce(column_vec(t, j));
    if (!red.empty() && red.front().pos < r) return std::nullopt;
    std::vector<Polynomial> col = vec_column(red, a.cols(), static_cast<std::uint32_t>(r));
    for (auto& p : col) p = R.nf(R.alg().scale(p, F.neg(Fp(1))));
    x.append_column(col, t.col_deg()[j]);
  }
  return x;
}

}  // namespace gcdim
