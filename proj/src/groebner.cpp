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
#include "gcdim/groebner.hpp"

#include <algorithm>
#include <deque>

namespace gcdim {

bool vec_is_homogeneous(const Vec& v, const std::vector<int>& twists) {
  if (v.empty()) return true;
  int d = vec_degree(v, twists);
  for (const auto& t : v)
    if (t.mon.degree() + twists[t.pos] != d) return false;
  return true;
}

namespace {

// out += a[ai..] + c*m*b[bi..], both inputs sorted descending.
void merge_into(const PolyAlgebra& alg, Vec& out, const Vec& a, std::size_t ai, const Vec& b, std::size_t bi,
                const Monomial& m, Fp c) {
  const auto& F = alg.field();
  const MonomialOrder ord = alg.order();
  out.reserve(out.size() + (a.size() - ai) + (b.size() - bi));
  while (ai < a.size() || bi < b.size()) {
    if (bi == b.size()) {
      out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(ai), a.end());
      return;
    }
    VTerm tb{b[bi].pos, b[bi].mon * m, F.mul(b[bi].coef, c)};
    if (ai == a.size()) {
      out.push_back(tb);
      ++bi;
      continue;
    }
    int s = compare(a[ai], tb, ord);
    if (s > 0) {
      out.push_back(a[ai++]);
    } else if (s < 0) {
      out.push_back(tb);
      ++bi;
    } else {
      Fp v = F.add(a[ai].coef, tb.coef);
      if (!v.is_zero()) out.push_back(VTerm{tb.pos, tb.mon, v});
      ++ai;
      ++bi;
    }
  }
}

}  // namespace

Vec vec_add_scaled(const PolyAlgebra& alg, const Vec& a, const Vec& b, const Monomial& m, Fp c) {
  if (c.is_zero() || b.empty()) return a;
  Vec out;
  merge_into(alg, out, a, 0, b, 0, m, c);
  return out;
}

Vec vec_scale(const PolyAlgebra& alg, const Vec& a, const Monomial& m, Fp c) {
  Vec out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(VTerm{t.pos, t.mon * m, alg.field().mul(t.coef, c)});
  return out;
}

Vec vec_make(const PolyAlgebra& alg, std::vector<VTerm> terms) {
  const MonomialOrder ord = alg.order();
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b, ord) > 0; });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mon == t.mon) {
      out.back().coef = alg.field().add(out.back().coef, t.coef);
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(t);
    }
  }
  return out;
}

Vec vec_monic(const PolyAlgebra& alg, const Vec& a) {
  if (a.empty() || a.front().coef == Fp(1)) return a;
  return vec_scale(alg, a, Monomial(), alg.field().inv(a.front().coef));
}

Vec poly_to_vec(const Polynomial& f, std::uint32_t pos) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(VTerm{pos, t.mon, t.coef});
  return v;
}

Polynomial vec_component(const PolyAlgebra& alg, const Vec& v, std::uint32_t pos) {
  (void)alg;
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.pos == pos) terms.push_back(Term{t.mon, t.coef});
  return Polynomial(std::move(terms));
}

// ---------------------------------------------------------------------------
// GroebnerEngine

GroebnerEngine::GroebnerEngine(const PolyAlgebra& alg, std::vector<int> twists, Exec exec)
    : alg_(alg), twists_(std::move(twists)), exec_(exec), by_pos_(twists_.size()) {}

void GroebnerEngine::add(Vec v) {
  if (v.empty()) return;
  int d = vec_degree(v, twists_);
  inputs_[d].push_back(std::move(v));
}

int GroebnerEngine::find_divisor(std::uint32_t pos, const Monomial& m) const {
  for (const auto& [lm, idx] : by_pos_[pos])
    if (lm.divides(m)) return static_cast<int>(idx);
  return -1;
}

Vec GroebnerEngine::reduce(const Vec& v) const {
  Vec done;
  Vec work = v;
  std::size_t cur = 0;
  const auto& F = alg_.field();
  while (cur < work.size()) {
    const VTerm& t = work[cur];
    int k = find_divisor(t.pos, t.mon);
    if (k < 0) {
      done.push_back(t);
      ++cur;
      continue;
    }
    const Elem& g = basis_[static_cast<std::size_t>(k)];
    Monomial m = t.mon.divided_by(g.lm);
    Fp c = F.neg(t.coef);
    Vec next;
    merge_into(alg_, next, work, cur + 1, g.v, 1, m, c);
    work.swap(next);
    cur = 0;
  }
  return done;
}

void GroebnerEngine::insert(Vec v) {
  std::size_t idx = basis_.size();
  std::uint32_t pos = v.front().pos;
  Monomial lm = v.front().mon;
  for (const auto& [olm, k] : by_pos_[pos]) {
    Monomial l = olm.lcm(lm);
    pairs_[l.degree() + twists_[pos]].push_back(Pair{k, idx, l});
  }
  by_pos_[pos].emplace_back(lm, idx);
  basis_.push_back(Elem{std::move(v), pos, lm});
}

void GroebnerEngine::process_degree(int d) {
  std::vector<Vec> cands;
  if (auto it = pairs_.find(d); it != pairs_.end()) {
    std::vector<Pair> ps = std::move(it->second);
    pairs_.erase(it);
    const auto& F = alg_.field();
    for (const auto& p : ps) {
      const Elem& a = basis_[p.i];
      const Elem& b = basis_[p.j];
      bool chain = false;
      for (const auto& [lm, k] : by_pos_[a.pos]) {
        if (k == p.i || k == p.j || !lm.divides(p.lcm)) continue;
        if (lm.lcm(a.lm) != p.lcm && lm.lcm(b.lm) != p.lcm) {
          chain = true;
          break;
        }
      }
      if (chain) {
        ++skipped_;
        continue;
      }
      Vec s = vec_scale(alg_, a.v, p.lcm.divided_by(a.lm), Fp(1));
      s = vec_add_scaled(alg_, s, b.v, p.lcm.divided_by(b.lm), F.neg(Fp(1)));
      if (!s.empty()) cands.push_back(std::move(s));
    }
  }
  if (auto it = inputs_.find(d); it != inputs_.end()) {
    for (auto& v : it->second) cands.push_back(std::move(v));
    inputs_.erase(it);
  }
  if (cands.empty()) return;

  std::vector<Vec> reduced(cands.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cands.size());
#pragma omp parallel for schedule(dynamic) if (exec_ == Exec::Parallel && n > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) reduced[static_cast<std::size_t>(i)] = reduce(cands[static_cast<std::size_t>(i)]);

  // Echelon form of the batch. Every term of every reduced vector is already
  // irreducible by the old basis, so only exact leading-term matches remain.
  std::vector<Vec> fresh;
  const auto& F = alg_.field();
  for (auto& r : reduced) {
    if (r.empty()) continue;
    Vec done;
    Vec work = std::move(r);
    std::size_t cur = 0;
    while (cur < work.size()) {
      const VTerm& t = work[cur];
      const Vec* hit = nullptr;
      for (const auto& f : fresh)
        if (f.front().pos == t.pos && f.front().mon == t.mon) {
          hit = &f;
          break;
        }
      if (!hit) {
        done.push_back(t);
        ++cur;
        continue;
      }
      Vec next;
      merge_into(alg_, next, work, cur + 1, *hit, 1, Monomial(), F.neg(t.coef));
      work.swap(next);
      cur = 0;
    }
    if (!done.empty()) fresh.push_back(vec_monic(alg_, done));
  }
  for (auto& f : fresh) insert(std::move(f));
}

void GroebnerEngine::complete_to(int degree) {
  while (true) {
    int next = INT_MAX;
    if (!pairs_.empty()) next = std::min(next, pairs_.begin()->first);
    if (!inputs_.empty()) next = std::min(next, inputs_.begin()->first);
    if (next == INT_MAX || next > degree) return;
    process_degree(next);
  }
}

std::vector<std::pair<std::uint32_t, Monomial>> GroebnerEngine::leading_terms() const {
  std::vector<std::pair<std::uint32_t, Monomial>> out;
  out.reserve(basis_.size());
  for (const auto& e : basis_) out.emplace_back(e.pos, e.lm);
  return out;
}

std::vector<Vec> GroebnerEngine::reduced_basis() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (const auto& [lm, k] : by_pos_[basis_[i].pos]) {
      if (k == i || !lm.divides(basis_[i].lm)) continue;
      // equal leading monomials: keep the earliest
      if (lm == basis_[i].lm && k > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Vec> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) {
    const Vec& v = basis_[i].v;
    Vec tail(v.begin() + 1, v.end());
    Vec red = reduce(tail);
    Vec r;
    r.reserve(red.size() + 1);
    r.push_back(v.front());
    r.insert(r.end(), red.begin(), red.end());
    out.push_back(std::move(r));
  }
  const MonomialOrder ord = alg_.order();
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return compare(a.front(), b.front(), ord) > 0; });
  return out;
}

std::vector<Vec> groebner_basis(const PolyAlgebra& alg, const std::vector<int>& twists, const std::vector<Vec>& gens,
                                Exec exec) {
  GroebnerEngine eng(alg, twists, exec);
  for (const auto& g : gens) eng.add(g);
  eng.complete();
  return eng.reduced_basis();
}

// ---------------------------------------------------------------------------
// Reference implementation

namespace {

Vec reference_reduce(const PolyAlgebra& alg, const std::vector<Vec>& G, Vec f) {
  Vec done;
  while (!f.empty()) {
    const VTerm t = f.front();
    const Vec* hit = nullptr;
    for (const auto& g : G)
      if (g.front().pos == t.pos && g.front().mon.divides(t.mon)) {
        hit = &g;
        break;
      }
    if (!hit) {
      done.push_back(t);
      f.erase(f.begin());
      continue;
    }
    Fp c = alg.field().neg(alg.field().div(t.coef, hit->front().coef));
    f = vec_add_scaled(alg, f, *hit, t.mon.divided_by(hit->front().mon), c);
  }
  return done;
}

}  // namespace

std::vector<Vec> groebner_basis_reference(const PolyAlgebra& alg, const std::vector<int>& twists,
                                          const std::vector<Vec>& gens) {
  (void)twists;
  std::vector<Vec> G;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  std::deque<Vec> todo(gens.begin(), gens.end());
  auto add = [&](Vec h) {
    h = vec_monic(alg, h);
    for (std::size_t k = 0; k < G.size(); ++k)
      if (G[k].front().pos == h.front().pos) pairs.emplace_back(k, G.size());
    G.push_back(std::move(h));
  };
  while (!todo.empty()) {
    Vec h = reference_reduce(alg, G, std::move(todo.front()));
    todo.pop_front();
    if (!h.empty()) add(std::move(h));
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial l = G[i].front().mon.lcm(G[j].front().mon);
    Vec s = vec_scale(alg, G[i], l.divided_by(G[i].front().mon), Fp(1));
    s = vec_add_scaled(alg, s, G[j], l.divided_by(G[j].front().mon), alg.field().neg(Fp(1)));
    Vec h = reference_reduce(alg, G, std::move(s));
    if (!h.empty()) add(std::move(h));
  }
  // minimalise, then tail-reduce
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || G[k].front().pos != G[i].front().pos || !G[k].front().mon.divides(G[i].front().mon)) continue;
      if (G[k].front().mon == G[i].front().mon && k > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Vec> out;
  for (const auto& g : minimal) {
    Vec tail(g.begin() + 1, g.end());
    Vec r{g.front()};
    Vec red = reference_reduce(alg, minimal, tail);
    r.insert(r.end(), red.begin(), red.end());
    out.push_back(std::move(r));
  }
  const MonomialOrder ord = alg.order();
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return compare(a.front(), b.front(), ord) > 0; });
  return out;
}

std::vector<Polynomial> ideal_basis(const PolyAlgebra& alg, const std::vector<Polynomial>& gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens)
    if (!g.is_zero()) vs.push_back(poly_to_vec(g, 0));
  std::vector<Polynomial> out;
  for (const auto& v : groebner_basis(alg, {0}, vs)) out.push_back(vec_component(alg, v, 0));
  return out;
}

}  // namespace gcdim
