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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcdim/fpmodule.hpp"

namespace gcdim {

enum class DualizerStatus { Unchecked, SemidualizingUpTo, Failed };

/// Candidate semidualizing module C together with its certification state.
struct Dualizer {
  FpModule module;
  DualizerStatus status = DualizerStatus::Unchecked;
  std::size_t bound = 0;
  std::string witness;  // set when Failed
};

/// Result of a check certified only up to a bound. `kind` is Value for a
/// finite number (0 doubles as "passes" for predicate checks), Infinite for the
/// sentinel, Fail for a refuted predicate.
struct BoundedVerdict {
  enum class Kind { Value, Infinite, Fail };
  Kind kind = Kind::Value;
  std::size_t value = 0;
  std::size_t bound = 0;
  std::string reason;
  std::vector<std::string> violations;
  std::optional<std::size_t> witness_index;
  std::optional<FpModule> witness;
  std::string ab_check;

  bool passed() const { return kind == Kind::Value; }
  bool infinite() const { return kind == Kind::Infinite; }
  std::string to_string() const;
};

Dualizer make_dualizer(FpModule C);
/// Runs is_semidualizing and records the outcome.
Dualizer certify_dualizer(FpModule C, std::size_t bound);

FpModule dual(const FpModule& M, const Dualizer& C);

struct Homothety {
  ModuleMap map;  // M -> M^{dagger dagger}
  bool is_iso = false;
};
Homothety homothety_map(const FpModule& M, const Dualizer& C);
/// r |-> (c |-> r c), R -> Hom(C, C).
Homothety ring_homothety(const FpModule& C);

BoundedVerdict is_semidualizing(const FpModule& C, std::size_t bound);
BoundedVerdict is_totally_reflexive(const FpModule& X, const Dualizer& C, std::size_t bound);
BoundedVerdict gc_dim(const FpModule& X, const Dualizer& C, std::size_t bound);
/// min{i : Ext^i(k, M) != 0}; throws ZeroModule.
std::size_t depth(const FpModule& M);
std::size_t ring_depth(const RingPtr& R);
/// Projective dimension from the minimal resolution; Infinite when F_bound != 0.
BoundedVerdict projective_dim(const FpModule& M, std::size_t bound);

enum class TransposeFlavor { Projective, APresentation };
struct TransposeResult {
  FpModule module;          // minimally presented
  Matrix presentation_used;
  TransposeFlavor flavor = TransposeFlavor::Projective;
};
TransposeResult transpose(const FpModule& X, const Dualizer& C);
/// `phi: A1 -> A0`, `pi: A0 -> X`; throws NotExact unless A1 -> A0 -> X -> 0 is exact.
TransposeResult transpose_wrt(const ModuleMap& phi, const ModuleMap& pi, const Dualizer& C);

/// Hom(f, N): Hom(B, N) -> Hom(A, N) for f: A -> B, on minimal presentations.
ModuleMap hom_map(const ModuleMap& f, const FpModule& N);

struct TransposeDecomposition {
  FpModule E, T, S;            // minimally presented
  ModuleMap e_to_t, t_to_s;    // on the working presentations
  bool injective = false, exact = false, surjective = false;
  bool certified() const { return injective && exact && surjective; }
};
TransposeDecomposition transpose_decompose(const FpModule& X, const Dualizer& C);

struct SixTerm {
  /// Z^+, Y^+, X^+, tZ, tY, tX, linked by the five maps.
  std::vector<FpModule> modules;
  std::vector<ModuleMap> maps;
  /// Exactness at each of the six terms.
  std::vector<bool> exact;
  bool certified() const;
};
/// `alpha: X -> Y`, `beta: Y -> Z`; throws NotExact unless 0 -> X -> Y -> Z -> 0 is exact.
SixTerm transpose_ses(const ModuleMap& alpha, const ModuleMap& beta, const Dualizer& C);
/// 0 -> Omega^1 X -> F_0 -> X -> 0 from the minimal presentation of X.
std::pair<ModuleMap, ModuleMap> syzygy_sequence(const FpModule& X);

FpModule cosyzygy(const FpModule& M, const Dualizer& C);

struct Word {
  std::string word;  // letters applied left to right to R, e.g. "D" or "SD"
  FpModule module;
};
std::vector<Word> w_words(const Dualizer& C, std::size_t k, std::uint64_t seed = 0);

struct StableEquivalence {
  bool yes = false;
  std::string p, q;  // summands, e.g. "R(-1) + C"
  std::string reason;
};
StableEquivalence stable_equiv_mod_add(const FpModule& X, const FpModule& Y, const Dualizer& C,
                                       std::size_t summand_bound, std::uint64_t seed = 0, int trials = 64);

BoundedVerdict ext_vanishing_dim(const FpModule& M, const std::vector<FpModule>& B, std::size_t bound);

/// Isomorphic after a degree shift aligning the lowest generator degrees.
IsoResult is_isomorphic_up_to_shift(const FpModule& M, const FpModule& N, int trials = 64, std::uint64_t seed = 0);

}  // namespace gcdim
