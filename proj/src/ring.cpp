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
#include "gcdim/ring.hpp"

#include "gcdim/groebner.hpp"

namespace gcdim {

RingPtr Ring::make(std::uint64_t p, std::vector<std::string> vars, std::string_view order,
                   const std::vector<std::string>& ideal_gens) {
  PolyAlgebra alg(PrimeField(p), std::move(vars), parse_order(order));
  std::vector<Polynomial> gens;
  gens.reserve(ideal_gens.size());
  for (const auto& s : ideal_gens) gens.push_back(alg.parse(s));
  return make(alg, gens);
}

RingPtr Ring::make(const PolyAlgebra& alg, const std::vector<Polynomial>& ideal_gens) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : ideal_gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "ideal generator " + alg.format(g));
    if (g.degree() == 0) throw Error(ErrorKind::UnitIdeal, "ideal contains the constant " + alg.format(g));
    nonzero.push_back(g);
  }
  // homogeneous generators of positive degree never generate the unit ideal
  auto gb = ideal_basis(alg, nonzero);
  return RingPtr(new Ring(alg, std::move(gb)));
}

Polynomial Ring::nf(const Polynomial& f) const {
  if (gb_.empty() || f.is_zero()) return f;
  const auto& F = alg_.field();
  std::vector<Term> done;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term t = work.leading();
    const Polynomial* hit = nullptr;
    for (const auto& g : gb_)
      if (g.leading().mon.divides(t.mon)) {
        hit = &g;
        break;
      }
    if (!hit) {
      done.push_back(t);
      work = Polynomial(std::vector<Term>(work.terms().begin() + 1, work.terms().end()));
      continue;
    }
    // reduced GB elements are monic
    work = alg_.add_scaled(work, *hit, t.mon.divided_by(hit->leading().mon), F.neg(t.coef));
  }
  return Polynomial(std::move(done));
}

std::string Ring::describe() const {
  std::string s = "F_" + std::to_string(field().characteristic()) + "[";
  for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + alg_.var_names()[i];
  s += "]";
  if (!gb_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < gb_.size(); ++i) s += (i ? ", " : "") + alg_.format(gb_[i]);
    s += ")";
  }
  return s;
}

std::vector<Monomial> Ring::standard_monomials(int d) const {
  std::vector<Monomial> out;
  for (const auto& m : alg_.monomials_of_degree(d)) {
    bool standard = true;
    for (const auto& g : gb_)
      if (g.leading().mon.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::RingMismatch, "operands live over different rings");
}

}  // namespace gcdim
