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

#include <climits>
#include <cstdint>
#include <map>
#include <vector>

#include "gcdim/polynomial.hpp"

namespace gcdim {

/// One term c * mon * e_pos of an element of a free module S^r.
struct VTerm {
  std::uint32_t pos;
  Monomial mon;
  Fp coef;
};

/// Element of a free module, terms sorted descending in position-over-term
/// order: lower position index is larger, ties broken by the monomial order.
using Vec = std::vector<VTerm>;

inline int compare(const VTerm& a, const VTerm& b, MonomialOrder order) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return compare(a.mon, b.mon, order);
}

/// Twisted degree of a nonzero homogeneous vector.
inline int vec_degree(const Vec& v, const std::vector<int>& twists) {
  return v.front().mon.degree() + twists[v.front().pos];
}

bool vec_is_homogeneous(const Vec& v, const std::vector<int>& twists);

/// a + c * m * b.
Vec vec_add_scaled(const PolyAlgebra& alg, const Vec& a, const Vec& b, const Monomial& m, Fp c);
Vec vec_scale(const PolyAlgebra& alg, const Vec& a, const Monomial& m, Fp c);
Vec vec_make(const PolyAlgebra& alg, std::vector<VTerm> terms);
Vec vec_monic(const PolyAlgebra& alg, const Vec& a);

/// How the S-pair reduction phase of a degree batch is scheduled.
enum class Exec { Serial, Parallel };

/// Incremental Buchberger engine for homogeneous submodules of a graded free
/// module over the ambient polynomial ring.
///
/// Work is organised degree by degree. Within one degree every S-polynomial
/// and new input is first fully reduced against the basis of lower degree
/// (independent reductions, run concurrently under Exec::Parallel), then the
/// batch is brought to echelon form serially in a fixed order. The resulting
/// basis is therefore identical for both schedules.
///
/// After `complete_to(d)` the current basis is a Groebner basis in all degrees
/// <= d, so `reduce` is a valid normal form for elements of degree <= d.
class GroebnerEngine {
 public:
  GroebnerEngine(const PolyAlgebra& alg, std::vector<int> twists, Exec exec = Exec::Parallel);

  /// Queues a homogeneous generator (zero vectors are ignored).
  void add(Vec v);

  void complete_to(int degree);
  void complete() { complete_to(INT_MAX); }
  bool has_pending() const { return !pairs_.empty() || !inputs_.empty(); }

  /// Full normal form against the current basis.
  Vec reduce(const Vec& v) const;

  /// Interreduced, monic, sorted descending by leading term.
  std::vector<Vec> reduced_basis() const;

  const std::vector<int>& twists() const { return twists_; }
  const PolyAlgebra& algebra() const { return alg_; }
  std::size_t basis_size() const { return basis_.size(); }
  /// (position, leading monomial) of every basis element.
  std::vector<std::pair<std::uint32_t, Monomial>> leading_terms() const;
  /// Number of S-pairs discarded by the chain criterion.
  std::size_t pairs_skipped() const { return skipped_; }

 private:
  struct Elem {
    Vec v;  // monic
    std::uint32_t pos;
    Monomial lm;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  int find_divisor(std::uint32_t pos, const Monomial& m) const;
  void insert(Vec v);
  void process_degree(int d);

  PolyAlgebra alg_;
  std::vector<int> twists_;
  Exec exec_;
  std::vector<Elem> basis_;
  std::vector<std::vector<std::pair<Monomial, std::size_t>>> by_pos_;
  std::map<int, std::vector<Pair>> pairs_;
  std::map<int, std::vector<Vec>> inputs_;
  std::size_t skipped_ = 0;
};

/// Reduced Groebner basis via the batched engine.
std::vector<Vec> groebner_basis(const PolyAlgebra& alg, const std::vector<int>& twists, const std::vector<Vec>& gens,
                                Exec exec = Exec::Parallel);

/// Textbook Buchberger: one S-pair at a time, no criteria beyond positions.
/// Kept as the reference the batched engine is tested and benchmarked against.
std::vector<Vec> groebner_basis_reference(const PolyAlgebra& alg, const std::vector<int>& twists,
                                          const std::vector<Vec>& gens);

/// Reduced Groebner basis of a homogeneous ideal of the ambient ring.
std::vector<Polynomial> ideal_basis(const PolyAlgebra& alg, const std::vector<Polynomial>& gens);

Vec poly_to_vec(const Polynomial& f, std::uint32_t pos);
Polynomial vec_component(const PolyAlgebra& alg, const Vec& v, std::uint32_t pos);

}  // namespace gcdim
