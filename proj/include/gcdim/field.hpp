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

#include "gcdim/error.hpp"

namespace gcdim {

/// Residue class in F_p, always stored as its canonical representative in [0, p).
class Fp {
 public:
  constexpr Fp() = default;
  constexpr explicit Fp(std::uint32_t v) : v_(v) {}

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

 private:
  std::uint32_t v_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Arithmetic in the prime field F_p for an odd prime 2 < p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  /// Canonical residue of an arbitrary signed integer.
  Fp from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r));
  }

  /// Signed representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Fp a) const {
    return a.value() > p_ / 2 ? static_cast<std::int64_t>(a.value()) - p_ : a.value();
  }

  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a.value() + b.value();
    return Fp(s >= p_ ? s - p_ : s);
  }
  Fp sub(Fp a, Fp b) const {
    return Fp(a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value());
  }
  Fp neg(Fp a) const { return Fp(a.value() == 0 ? 0 : p_ - a.value()); }
  Fp mul(Fp a, Fp b) const {
    return Fp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value()) * b.value() % p_));
  }
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
  Fp pow(Fp a, std::uint64_t e) const;

  Fp arith(Fp a, Fp b, ArithOp op) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gcdim
