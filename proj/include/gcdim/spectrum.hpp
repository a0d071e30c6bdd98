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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcdim/homalg.hpp"

namespace gcdim {

/// A prime of R, asserted prime by the caller. `declared_inclusions` are the
/// labels of primes asserted to be contained in this one.
struct PrimeRecord {
  std::string label;
  std::vector<Polynomial> ideal;
  std::vector<std::string> declared_inclusions;
};

/// Checks properness (UnitIdeal), homogeneity and every declared inclusion
/// against the earlier records (BadArgument).
PrimeRecord make_prime(const RingPtr& R, std::string label, std::vector<Polynomial> ideal,
                       std::vector<std::string> inclusions, const std::vector<PrimeRecord>& known);
/// The homogeneous maximal ideal.
PrimeRecord maximal_prime(const RingPtr& R, std::string label = "m");

/// A local dimension; nullopt is the infinity sentinel.
using LocalDim = std::optional<std::size_t>;
std::string to_string(const LocalDim& d);

/// p -> value, ordered by label.
struct GradeFnTable {
  std::map<std::string, LocalDim> entries;
};

/// Which add-closed class the local homological dimension is measured against.
struct ModuleKind {
  enum class Tag { Projectives, Dualizer };
  Tag tag = Tag::Projectives;
  std::optional<Dualizer> C;

  static ModuleKind projectives() { return {}; }
  static ModuleKind dualizer(Dualizer c) { return ModuleKind{Tag::Dualizer, std::move(c)}; }
};

/// min{i : Ext^i(R/I, R) != 0}; throws UnitIdeal.
std::size_t grade(const RingPtr& R, const std::vector<Polynomial>& I);
/// depth of M_p; infinity when M_p = 0.
LocalDim local_depth(const FpModule& M, const PrimeRecord& p);
/// Projective dimension of M_p from the support of Tor_i(M, R/p).
BoundedVerdict local_pd(const FpModule& M, const PrimeRecord& p, std::size_t bound);
BoundedVerdict local_gcdim(const FpModule& X, const Dualizer& C, const PrimeRecord& p, std::size_t bound);

/// Pointwise sup over S of the local dimension, one prime per task.
GradeFnTable phi(const std::vector<FpModule>& S, const ModuleKind& kind, const std::vector<PrimeRecord>& primes,
                 std::size_t bound);

struct Judgement {
  bool yes = false;
  std::string detail;
};

Judgement is_grade_consistent(const GradeFnTable& f, const std::vector<PrimeRecord>& primes, const RingPtr& R);
/// Verdict relative to the supplied primes.
Judgement lambda_member(const FpModule& X, const GradeFnTable& f, const ModuleKind& kind,
                        const std::vector<PrimeRecord>& primes, std::size_t bound);

/// One step of a construction inside res(S + {R}). Children must come earlier
/// in the node list.
struct WitnessNode {
  enum class Kind { Generator, Free, Extension, EpiKernel, Syzygy, Summand };
  Kind kind = Kind::Generator;
  std::size_t index = 0;              // Generator: position in S
  std::vector<int> twists;            // Free: generator degrees
  std::vector<std::size_t> children;  // Extension/EpiKernel: {B0, B1}; Syzygy, Summand: {B0}
  std::optional<FpModule> module;     // Extension, EpiKernel, Summand: the node's module A
  Matrix left, right;                 // Extension: B0 -> A -> B1; EpiKernel: A -> B0 -> B1
  std::optional<FpModule> complement; // Summand: B0 = A + complement
};

struct ResolvingWitness {
  std::vector<WitnessNode> nodes;
  std::size_t root = 0;
};

struct WitnessVerdict {
  bool valid = false;
  std::size_t node = 0;
  std::string reason;
};

WitnessVerdict check_resolving_witness(const ResolvingWitness& w, const std::vector<FpModule>& S,
                                       const FpModule& target);

std::string to_string(WitnessNode::Kind k);

}  // namespace gcdim
