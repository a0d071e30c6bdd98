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
#include "gcdim/spectrum.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace gcdim {

namespace {

bool supported_at(const FpModule& M, const PrimeRecord& p) {
  // M_p != 0 iff ann(M) is inside p
  return ideal_subset(*M.ring(), annihilator(M), p.ideal);
}

const PrimeRecord* find_prime(const std::vector<PrimeRecord>& primes, const std::string& label) {
  for (const auto& p : primes)
    if (p.label == label) return &p;
  return nullptr;
}

bool le(const LocalDim& a, const LocalDim& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

LocalDim to_local(const BoundedVerdict& v) {
  if (v.passed()) return v.value;
  return std::nullopt;
}

LocalDim local_dim(const FpModule& X, const ModuleKind& kind, const PrimeRecord& p, std::size_t bound) {
  if (kind.tag == ModuleKind::Tag::Projectives) return to_local(local_pd(X, p, bound));
  return to_local(local_gcdim(X, *kind.C, p, bound));
}

}  // namespace

std::string to_string(const LocalDim& d) { return d ? std::to_string(*d) : "inf"; }

PrimeRecord make_prime(const RingPtr& R, std::string label, std::vector<Polynomial> ideal,
                       std::vector<std::string> inclusions, const std::vector<PrimeRecord>& known) {
  for (auto& f : ideal) {
    f = R->nf(f);
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "prime " + label + " has a non-homogeneous generator");
  }
  if (ideal_contains(*R, ideal, R->alg().one()))
    throw Error(ErrorKind::UnitIdeal, "prime " + label + " is the unit ideal");
  PrimeRecord p{std::move(label), std::move(ideal), std::move(inclusions)};
  for (const auto& q : p.declared_inclusions) {
    const PrimeRecord* r = find_prime(known, q);
    if (!r) throw Error(ErrorKind::BadArgument, "prime " + p.label + " declares unknown prime " + q);
    if (!ideal_subset(*R, r->ideal, p.ideal))
      throw Error(ErrorKind::BadArgument, "declared inclusion " + q + " in " + p.label + " does not hold");
  }
  return p;
}

PrimeRecord maximal_prime(const RingPtr& R, std::string label) {
  std::vector<Polynomial> m;
  for (std::size_t i = 0; i < R->nvars(); ++i) m.push_back(R->alg().variable(i));
  return PrimeRecord{std::move(label), m, {}};
}

std::size_t grade(const RingPtr& R, const std::vector<Polynomial>& I) {
  if (ideal_contains(*R, I, R->alg().one())) throw Error(ErrorKind::UnitIdeal, "grade of the unit ideal");
  FpModule M = FpModule::cyclic(R, I);
  FpModule Rm = FpModule::free(R, {0});
  const std::size_t n = R->nvars();
  for (std::size_t i = 0; i < n; ++i)
    if (!ext_is_zero(M, Rm, i)) return i;
  return n;
}

LocalDim local_depth(const FpModule& M, const PrimeRecord& p) {
  const RingPtr& R = M.ring();
  if (ideal_contains(*R, p.ideal, R->alg().one())) throw Error(ErrorKind::UnitIdeal, "prime " + p.label + " is the unit ideal");
  if (is_zero(M) || !supported_at(M, p)) return std::nullopt;
  FpModule Rp = FpModule::cyclic(R, p.ideal);
  const std::size_t n = R->nvars();
  for (std::size_t i = 0; i < n; ++i)
    if (supported_at(ext(Rp, M, i), p)) return i;
  return n;
}

BoundedVerdict local_pd(const FpModule& M, const PrimeRecord& p, std::size_t bound) {
  const RingPtr& R = M.ring();
  if (ideal_contains(*R, p.ideal, R->alg().one())) throw Error(ErrorKind::UnitIdeal, "prime " + p.label + " is the unit ideal");
  BoundedVerdict v;
  v.bound = bound;
  if (is_zero(M) || !supported_at(M, p)) {
    v.reason = "M_p = 0";
    return v;
  }
  FpModule Rp = FpModule::cyclic(R, p.ideal);
  // a finite value is at most depth R_p
  const std::size_t dRp = local_depth(FpModule::free(R, {0}), p).value_or(0);
  for (std::size_t i = 1; i <= bound; ++i) {
    if (!supported_at(tor(M, Rp, i), p)) {
      v.value = i - 1;
      return v;
    }
    if (i > dRp) {
      v.kind = BoundedVerdict::Kind::Infinite;
      v.witness_index = i;
      v.reason = "Tor_" + std::to_string(i) + "(M,R/p)_p != 0 beyond depth R_p = " + std::to_string(dRp);
      return v;
    }
  }
  v.kind = BoundedVerdict::Kind::Infinite;
  v.reason = "Tor_" + std::to_string(bound) + "(M,R/p)_p != 0";
  return v;
}

BoundedVerdict local_gcdim(const FpModule& X, const Dualizer& C, const PrimeRecord& p, std::size_t bound) {
  if (C.status != DualizerStatus::SemidualizingUpTo || C.bound < bound)
    throw Error(ErrorKind::UncertifiedDualizer, "dualizer is not certified up to bound " + std::to_string(bound));
  const RingPtr& R = X.ring();
  if (ideal_contains(*R, p.ideal, R->alg().one())) throw Error(ErrorKind::UnitIdeal, "prime " + p.label + " is the unit ideal");
  BoundedVerdict v;
  v.bound = bound;
  LocalDim dX = local_depth(X, p);
  if (!dX) {
    v.reason = "X_p = 0";
    return v;
  }
  const std::size_t dRp = local_depth(FpModule::free(R, {0}), p).value_or(0);
  if (*dX > dRp) {
    v.kind = BoundedVerdict::Kind::Infinite;
    v.reason = "depth X_p exceeds depth R_p";
    return v;
  }
  const std::size_t n = dRp - *dX;
  for (std::size_t i = n + 1; i <= bound; ++i) {
    if (!supported_at(ext(X, C.module, i), p)) continue;
    v.kind = BoundedVerdict::Kind::Infinite;
    v.witness_index = i;
    v.reason = "Ext^" + std::to_string(i) + "(X,C)_p != 0";
    return v;
  }
  v.value = n;
  v.ab_check = std::to_string(n) + " + " + std::to_string(*dX) + " = " + std::to_string(dRp);
  v.reason = "local Ext vanishes for " + std::to_string(n) + " < i <= " + std::to_string(bound);
  return v;
}

GradeFnTable phi(const std::vector<FpModule>& S, const ModuleKind& kind, const std::vector<PrimeRecord>& primes,
                 std::size_t bound) {
  if (S.empty()) throw Error(ErrorKind::BadArgument, "phi needs a nonempty module list");
  if (kind.tag == ModuleKind::Tag::Dualizer) {
    if (!kind.C || kind.C->status != DualizerStatus::SemidualizingUpTo || kind.C->bound < bound)
      throw Error(ErrorKind::UncertifiedDualizer, "dualizer is not certified up to bound " + std::to_string(bound));
  }
  std::vector<LocalDim> vals(primes.size(), LocalDim(0));
  std::exception_ptr err;
  const long np = static_cast<long>(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < np; ++i) {
    try {
      LocalDim best = 0;
      for (const auto& X : S) {
        LocalDim d = local_dim(X, kind, primes[static_cast<std::size_t>(i)], bound);
        if (!le(d, best)) best = d;
      }
      vals[static_cast<std::size_t>(i)] = best;
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  GradeFnTable t;
  for (std::size_t i = 0; i < primes.size(); ++i) t.entries[primes[i].label] = vals[i];
  return t;
}

Judgement is_grade_consistent(const GradeFnTable& f, const std::vector<PrimeRecord>& primes, const RingPtr& R) {
  auto value = [&](const std::string& label) {
    auto it = f.entries.find(label);
    if (it == f.entries.end()) throw Error(ErrorKind::BadArgument, "function is not defined at " + label);
    return it->second;
  };
  for (const auto& p : primes) {
    LocalDim fp = value(p.label);
    std::size_t g = grade(R, p.ideal);
    if (!le(fp, LocalDim(g)))
      return {false, "grade bound: f(" + p.label + ") = " + to_string(fp) + " > grade " + std::to_string(g)};
    for (const auto& q : p.declared_inclusions) {
      LocalDim fq = value(q);
      if (!le(fq, fp))
        return {false, "monotonicity: " + q + " in " + p.label + " but f(" + q + ") = " + to_string(fq) + " > f(" +
                           p.label + ") = " + to_string(fp)};
    }
  }
  return {true, "grade consistent on the supplied primes"};
}

Judgement lambda_member(const FpModule& X, const GradeFnTable& f, const ModuleKind& kind,
                        const std::vector<PrimeRecord>& primes, std::size_t bound) {
  GradeFnTable own = phi({X}, kind, primes, bound);
  for (const auto& p : primes) {
    auto it = f.entries.find(p.label);
    if (it == f.entries.end()) throw Error(ErrorKind::BadArgument, "function is not defined at " + p.label);
    LocalDim d = own.entries.at(p.label);
    if (!le(d, it->second))
      return {false, p.label + ": local dimension " + to_string(d) + " > f = " + to_string(it->second)};
  }
  return {true, "member relative to the supplied primes"};
}

std::string to_string(WitnessNode::Kind k) {
  switch (k) {
    case WitnessNode::Kind::Generator: return "Generator";
    case WitnessNode::Kind::Free: return "Free";
    case WitnessNode::Kind::Extension: return "Extension";
    case WitnessNode::Kind::EpiKernel: return "EpiKernel";
    case WitnessNode::Kind::Syzygy: return "Syzygy";
    case WitnessNode::Kind::Summand: return "Summand";
  }
  return "?";
}

WitnessVerdict check_resolving_witness(const ResolvingWitness& w, const std::vector<FpModule>& S,
                                       const FpModule& target) {
  using K = WitnessNode::Kind;
  std::vector<FpModule> mods;
  auto bad = [](std::size_t i, std::string why) { return WitnessVerdict{false, i, std::move(why)}; };
  const RingPtr& R = target.ring();
  for (std::size_t i = 0; i < w.nodes.size(); ++i) {
    const WitnessNode& n = w.nodes[i];
    std::size_t need = 0;
    switch (n.kind) {
      case K::Generator: case K::Free: need = 0; break;
      case K::Extension: case K::EpiKernel: need = 2; break;
      case K::Syzygy: case K::Summand: need = 1; break;
    }
    if (n.children.size() != need) return bad(i, "expected " + std::to_string(need) + " children");
    for (std::size_t c : n.children)
      if (c >= i) return bad(i, "child " + std::to_string(c) + " does not precede the node");
    if ((n.kind == K::Extension || n.kind == K::EpiKernel || n.kind == K::Summand) && !n.module)
      return bad(i, "missing module");
    try {
      switch (n.kind) {
        case K::Generator:
          if (n.index >= S.size()) return bad(i, "generator index out of range");
          mods.push_back(S[n.index]);
          break;
        case K::Free:
          mods.push_back(FpModule::free(R, n.twists));
          break;
        case K::Syzygy:
          mods.push_back(syzygy(mods[n.children[0]], 1));
          break;
        case K::Extension: {
          // 0 -> B0 -> A -> B1 -> 0
          const FpModule &b0 = mods[n.children[0]], &b1 = mods[n.children[1]], &a = *n.module;
          if (n.left.rows() != a.ngens() || n.left.cols() != b0.ngens() || n.right.rows() != b1.ngens() ||
              n.right.cols() != a.ngens())
            return bad(i, "RankMismatch");
          ModuleMap f{b0, a, n.left}, g{a, b1, n.right};
          if (!is_well_defined(f) || !is_well_defined(g) || !is_injective(f) || !is_surjective(g) || !is_exact_at(f, g))
            return bad(i, "NotExact");
          mods.push_back(a);
          break;
        }
        case K::EpiKernel: {
          // 0 -> A -> B0 -> B1 -> 0
          const FpModule &b0 = mods[n.children[0]], &b1 = mods[n.children[1]], &a = *n.module;
          if (n.left.rows() != b0.ngens() || n.left.cols() != a.ngens() || n.right.rows() != b1.ngens() ||
              n.right.cols() != b0.ngens())
            return bad(i, "RankMismatch");
          ModuleMap f{a, b0, n.left}, g{b0, b1, n.right};
          if (!is_well_defined(f) || !is_well_defined(g) || !is_injective(f) || !is_surjective(g) || !is_exact_at(f, g))
            return bad(i, "NotExact");
          mods.push_back(a);
          break;
        }
        case K::Summand: {
          FpModule comp = n.complement ? *n.complement : FpModule::zero(R);
          if (is_isomorphic(mods[n.children[0]], direct_sum(*n.module, comp)).verdict != IsoVerdict::Iso)
            return bad(i, "decomposition not certified");
          mods.push_back(*n.module);
          break;
        }
      }
    } catch (const Error& e) {
      return bad(i, std::string(to_string(e.kind())));
    }
  }
  if (w.root >= mods.size()) return bad(w.root, "root out of range");
  if (is_isomorphic(mods[w.root], target).verdict != IsoVerdict::Iso)
    return bad(w.root, "root is not isomorphic to the target");
  return {true, w.root, "valid"};
}

}  // namespace gcdim
