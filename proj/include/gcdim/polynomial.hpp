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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcdim/field.hpp"

namespace gcdim {

/// Upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVars = 16;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned exponent = 1) {
    Monomial m;
    m.e_[i] = static_cast<std::uint16_t>(exponent);
    m.deg_ = static_cast<std::int32_t>(exponent);
    return m;
  }

  unsigned exponent(std::size_t i) const { return e_[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / d; requires d | this.
  Monomial divided_by(const Monomial& d) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - d.e_[i]);
    r.deg_ = deg_ - d.deg_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::int32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder { Grevlex, Lex, Deglex };

/// Throws Error(BadOrder) for anything other than grevlex, lex or deglex.
MonomialOrder parse_order(std::string_view name);
std::string_view to_string(MonomialOrder order);

/// Three-way comparison: positive when a > b in the given order.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Deglex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      [[fallthrough]];
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
      }
      return 0;
  }
  return 0;
}

struct Term {
  Monomial mon;
  Fp coef;
};

/// Sparse polynomial; terms sorted strictly descending in the owning algebra's
/// order, no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  /// Trusted constructor: `terms` must already be canonical.
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  /// Degree of the leading monomial, -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mon.is_one()); }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mon.degree() != terms_.front().mon.degree()) return false;
    return true;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

/// The ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order.
class PolyAlgebra {
 public:
  PolyAlgebra(PrimeField field, std::vector<std::string> vars, MonomialOrder order);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  MonomialOrder order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

  Polynomial zero() const { return Polynomial(); }
  Polynomial constant(Fp c) const;
  Polynomial one() const { return constant(Fp(1)); }
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Monomial& m, Fp c) const;

  /// Sorts, merges duplicates and drops zeros.
  Polynomial make(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, Fp c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, Fp c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  /// a + c*m*b in one merge pass.
  Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const Monomial& m, Fp c) const;

  /// Renders `3*x^2*y - y^3`; coefficients printed in (-p/2, p/2].
  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;
  /// Parses the polynomial text syntax; throws Error(Parse).
  Polynomial parse(std::string_view text) const;

  /// All monomials of total degree d, descending in the order.
  std::vector<Monomial> monomials_of_degree(int d) const;

  friend bool operator==(const PolyAlgebra& a, const PolyAlgebra& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace gcdim
