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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcdim/matrix.hpp"

namespace gcdim {

/// Finitely presented graded module coker(rels: R^s -> R^r). Columns of
/// `rels` are relations on the r generators, whose degrees are `degrees`.
class FpModule {
 public:
  FpModule() = default;
  /// Normal-forms the relations; throws NotHomogeneous.
  FpModule(RingPtr ring, std::vector<int> degrees, Matrix rels);

  static FpModule free(RingPtr ring, std::vector<int> degrees);
  static FpModule zero(RingPtr ring) { return free(std::move(ring), {}); }
  /// R/(ideal), generator in degree `degree`.
  static FpModule cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree = 0);
  /// R/m.
  static FpModule residue_field(RingPtr ring, int degree = 0);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const Matrix& rels() const { return rels_; }
  std::size_t ngens() const { return degrees_.size(); }

  /// Stable textual key: ring, generator degrees and relation entries.
  std::string fingerprint() const;
  std::string describe() const;

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  Matrix rels_;
};

/// Homogeneous degree-0 map; column j is the image of source generator j.
struct ModuleMap {
  FpModule source, target;
  Matrix matrix;
};

/// Throws NotExact when matrix * source.rels is not inside im(target.rels).
ModuleMap make_map(const FpModule& source, const FpModule& target, Matrix matrix);
bool is_well_defined(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const FpModule& M);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
/// f and g agree as maps of modules.
bool maps_equal(const ModuleMap& f, const ModuleMap& g);
/// im f = ker g and g f = 0 for X -f-> Y -g-> Z.
bool is_exact_at(const ModuleMap& f, const ModuleMap& g);
/// Kernel of f as a module together with its inclusion into the source.
ModuleMap kernel(const ModuleMap& f);
/// Cokernel of f with the projection from the target.
ModuleMap cokernel(const ModuleMap& f);
/// Image of f with the inclusion into the target.
ModuleMap image(const ModuleMap& f);

bool is_zero(const FpModule& M);

FpModule direct_sum(const FpModule& a, const FpModule& b);
/// M(s): the generator of degree a in M has degree a - s in M(s).
FpModule shift(const FpModule& M, int s);

struct MinimalPresentation {
  FpModule module;
  /// Indices of the original generators that survive; they generate `module`.
  std::vector<std::size_t> kept;
  /// Original generator j equals column j of this matrix in the new generators.
  Matrix to_new;
};

MinimalPresentation minimal_presentation_data(const FpModule& M);
FpModule minimal_presentation(const FpModule& M);

/// (im gens + im rels) / im rels inside a graded free module.
struct Subquotient {
  Matrix gens;
  Matrix rels;
};

struct Presentation {
  FpModule module;  // minimally presented
  Matrix emb;       // ambient coordinates of each generator of `module`
  Matrix to_new;    // sq.gens column j in the generators of `module`
};

Presentation present(const RingPtr& R, const Subquotient& sq);
/// True when the subquotient is zero, without presenting it.
bool is_zero(const RingPtr& R, const Subquotient& sq);
/// Coordinates in `p.module` of ambient elements lying in the subquotient.
Matrix coordinates(const RingPtr& R, const Subquotient& sq, const Presentation& p, const Matrix& elems);

/// Minimal graded free resolution F_bound -> ... -> F_0 -> M.
struct Resolution {
  FpModule module;          // minimal presentation of the input
  std::vector<Matrix> d;    // d[i] is the differential F_{i+1} -> F_i
  std::size_t bound = 0;
  bool finite = false;      // some F_i vanished within the bound

  std::vector<int> free_degrees(std::size_t i) const;
  std::size_t rank(std::size_t i) const { return free_degrees(i).size(); }
  std::vector<std::size_t> betti() const;
  /// Index of the last nonzero F_i when finite.
  std::size_t length() const;
};

/// Cached per module; extending a cached prefix is observationally identical to
/// recomputation.
Resolution free_resolution(const FpModule& M, std::size_t bound);
void clear_resolution_cache();
/// Checks d_i d_{i+1} = 0, exactness via syzygies and minimality.
bool certify_resolution(const Resolution& F);

FpModule syzygy(const FpModule& M, std::size_t n);

/// Hom(M, N) built on M's given presentation. The ambient is Hom(F_0, N), block
/// (k, l) holding the coefficient of N's generator l in the image of M's
/// generator k.
/// Ambient of Hom(F, N) for a free F with generator degrees `fdeg`.
std::vector<int> hom_degrees(const std::vector<int>& fdeg, const FpModule& N);
/// Relations of that ambient: shifted copies of N's relations.
Matrix hom_rels(const std::vector<int>& fdeg, const FpModule& N);
/// Precomposition with d : F' -> F, from Hom(F, N) to Hom(F', N).
Matrix hom_induced(const Matrix& d, const FpModule& N);

Subquotient hom_subquotient(const FpModule& M, const FpModule& N);
FpModule hom(const FpModule& M, const FpModule& N);
/// Turns an ambient Hom(F_0, N) column into the matrix of the map M -> N.
Matrix hom_element_to_matrix(const FpModule& M, const FpModule& N, const std::vector<Polynomial>& col);
std::vector<Polynomial> matrix_to_hom_element(const FpModule& M, const FpModule& N, const Matrix& m);

Subquotient ext_subquotient(const FpModule& M, const FpModule& N, std::size_t i);
FpModule ext(const FpModule& M, const FpModule& N, std::size_t i);
bool ext_is_zero(const FpModule& M, const FpModule& N, std::size_t i);
FpModule tor(const FpModule& M, const FpModule& N, std::size_t i);
bool tor_is_zero(const FpModule& M, const FpModule& N, std::size_t i);

/// Generators of ann(M) (normal forms, minimal). ann(0) = (1).
std::vector<Polynomial> annihilator(const FpModule& M);
/// Reduced Groebner basis of J + I, canonical for comparing ideals of R.
std::vector<Polynomial> ideal_canonical(const Ring& R, const std::vector<Polynomial>& J);
/// f in J (J given by any generators).
bool ideal_contains(const Ring& R, const std::vector<Polynomial>& J, const Polynomial& f);
bool ideal_subset(const Ring& R, const std::vector<Polynomial>& A, const std::vector<Polynomial>& B);

/// Hilbert series N(t) / (1 - t)^n with a Laurent numerator.
struct HilbertSeries {
  std::size_t nvars = 0;
  std::map<int, long long> numerator;  // zero coefficients omitted

  long long dim(int d) const;
  std::vector<long long> range(int lo, int hi) const;
  bool is_zero() const { return numerator.empty(); }
  /// Krull dimension; kZeroDim for the zero module.
  int krull_dim() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.nvars == b.nvars && a.numerator == b.numerator;
  }
};

/// Krull dimension sentinel for the zero module.
inline constexpr int kZeroDim = -1000000;

HilbertSeries hilbert(const FpModule& M);
/// dim_k M_d for d = 0..D.
std::vector<long long> hilbert_series(const FpModule& M, int D);
int krull_dim(const FpModule& M);

enum class IsoVerdict { Iso, NotIso, Unknown };
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::string reason;
  std::optional<ModuleMap> map, inverse;
};
IsoResult is_isomorphic(const FpModule& M, const FpModule& N, int trials = 64, std::uint64_t seed = 0);

std::string to_string(IsoVerdict v);

}  // namespace gcdim
