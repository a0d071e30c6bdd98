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
#pragma once

#include <optional>
#include <vector>

#include "gcdim/groebner.hpp"
#include "gcdim/ring.hpp"

namespace gcdim {

/// Homogeneous map between graded free modules R^c -> R^r, stored column-major.
/// Column j is the image of the j-th basis vector of the source, which has
/// degree col_deg[j]; row i is the basis vector of the target of degree
/// row_deg[i]. Entry (i, j) is zero or homogeneous of degree
/// col_deg[j] - row_deg[i].
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::vector<int> row_deg, std::vector<int> col_deg);

  static Matrix identity(const std::vector<int>& degs);

  std::size_t rows() const { return row_deg_.size(); }
  std::size_t cols() const { return col_deg_.size(); }
  const std::vector<int>& row_deg() const { return row_deg_; }
  const std::vector<int>& col_deg() const { return col_deg_; }

  Polynomial& at(std::size_t i, std::size_t j) { return data_[j * rows() + i]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data_[j * rows() + i]; }

  std::vector<Polynomial> column(std::size_t j) const;
  void append_column(const std::vector<Polynomial>& col, int degree);
  bool column_is_zero(std::size_t j) const;
  bool is_zero() const;

  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix drop_zero_columns() const;
  /// Rows [begin, end).
  Matrix row_block(std::size_t begin, std::size_t end) const;

  /// Every entry homogeneous of the degree its position demands.
  bool is_homogeneous() const;
  /// Every entry lies in the graded maximal ideal.
  bool is_minimal() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.row_deg_ == b.row_deg_ && a.col_deg_ == b.col_deg_ && a.data_ == b.data_;
  }

 private:
  std::vector<int> row_deg_, col_deg_;
  std::vector<Polynomial> data_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
/// Block diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix multiply(const Ring& R, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& R, const Matrix& a, Fp c);
Matrix subtract(const Ring& R, const Matrix& a, const Matrix& b);

Vec column_vec(const Matrix& m, std::size_t j, std::uint32_t offset = 0);
std::vector<Polynomial> vec_column(const Vec& v, std::size_t rows, std::uint32_t offset = 0);

/// Groebner basis of im(gens) + I * R^r inside the ambient free module, which
/// makes normal forms canonical modulo the image in R^r.
class SubmoduleGB {
 public:
  SubmoduleGB(const Ring& R, const Matrix& gens);
  SubmoduleGB(const Ring& R, std::vector<int> row_deg);

  /// Canonical representative of v modulo the submodule.
  Vec reduce(const Vec& v) const { return eng_.reduce(v); }
  std::vector<Polynomial> reduce(const std::vector<Polynomial>& col) const;
  bool contains(const std::vector<Polynomial>& col) const;
  bool contains_columns(const Matrix& m) const;
  std::size_t rank() const { return rows_; }
  std::vector<std::pair<std::uint32_t, Monomial>> leading_terms() const { return eng_.leading_terms(); }

 private:
  GroebnerEngine eng_;
  std::size_t rows_;
};

/// Generators of ker(A) over R, minimal when `minimal` is set.
Matrix syzygies(const Ring& R, const Matrix& a, bool minimal = true);

/// Generators of {u : A u in im(K)} (A and K share rows), minimal.
Matrix kernel_mod(const Ring& R, const Matrix& a, const Matrix& k);

/// Minimal generating subset of the columns of `gens` modulo im(base),
/// chosen greedily in ascending degree (stable for ties).
Matrix minimal_columns(const Ring& R, const Matrix& gens, const Matrix* base = nullptr);

/// Solves A X = T modulo im(K) (K may be null); nullopt when some column of T
/// is outside im(A) + im(K).
std::optional<Matrix> lift(const Ring& R, const Matrix& a, const Matrix& t, const Matrix* k = nullptr);

/// Normal-forms every entry.
Matrix nf(const Ring& R, const Matrix& m);

}  // namespace gcdim
