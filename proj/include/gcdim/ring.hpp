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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gcdim/polynomial.hpp"

namespace gcdim {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Graded quotient ring R = F_p[x_1..x_n]/I, immutable once built. I is kept
/// as a reduced Groebner basis in the ring's order.
class Ring {
 public:
  /// Throws NotHomogeneous, UnitIdeal, BadOrder, BadArgument or Parse.
  static RingPtr make(std::uint64_t p, std::vector<std::string> vars, std::string_view order,
                      const std::vector<std::string>& ideal_gens = {});
  static RingPtr make(const PolyAlgebra& alg, const std::vector<Polynomial>& ideal_gens);

  const PolyAlgebra& alg() const { return alg_; }
  const PrimeField& field() const { return alg_.field(); }
  std::size_t nvars() const { return alg_.nvars(); }
  const std::vector<Polynomial>& ideal_gb() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.empty(); }

  /// Canonical representative of f + I.
  Polynomial nf(const Polynomial& f) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return nf(alg_.mul(a, b)); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return alg_.add(a, b); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return alg_.sub(a, b); }

  /// Parses and normal-forms a polynomial.
  Polynomial parse(std::string_view text) const { return nf(alg_.parse(text)); }
  std::string format(const Polynomial& f) const { return alg_.format(f); }
  /// `F_101[x,y]/(x*y)` style summary.
  std::string describe() const;

  /// Monomials of degree d that are standard (not leading terms of I).
  std::vector<Monomial> standard_monomials(int d) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.alg_ == b.alg_ && a.gb_ == b.gb_; }

 private:
  Ring(PolyAlgebra alg, std::vector<Polynomial> gb) : alg_(std::move(alg)), gb_(std::move(gb)) {}

  PolyAlgebra alg_;
  std::vector<Polynomial> gb_;
};

/// Throws RingMismatch unless both rings are the same object or equal.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace gcdim
