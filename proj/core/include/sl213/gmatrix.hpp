// Copyright 2026 The sl213 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>

#include "sl213/cyclo.hpp"

namespace sl213 {

/// Exact 6x6 matrix over Q(zeta_13); the group elements of the representation.
class GMatrix {
 public:
  static constexpr int kDim = 6;

  GMatrix() = default;
  static GMatrix identity();

  const CycloElem& at(int i, int j) const { return e_[i * kDim + j]; }
  CycloElem& at(int i, int j) { return e_[i * kDim + j]; }

  GMatrix operator-() const;
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
  friend bool operator==(const GMatrix& a, const GMatrix& b) { return a.e_ == b.e_; }
  friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

  GMatrix transpose() const;
  GMatrix pow(unsigned k) const;
  GMatrix scaled(const CycloElem& s) const;

  std::array<CycloElem, kDim> apply(const std::array<CycloElem, kDim>& v) const;

  /// Canonical serialization of all 36 entries; exact dedup key for the
  /// element table.
  std::string canonical_string() const;

 private:
  std::array<CycloElem, kDim * kDim> e_{};
};

/// 2x2 matrix over arbitrary-precision integers (the SL(2,Z) lift side).
struct IntMatrix2 {
  Int a, b, c, d;

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  IntMatrix2 pow(unsigned k) const {
    IntMatrix2 r = identity();
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  Int det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

}  // namespace sl213
