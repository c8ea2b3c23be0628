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

#include <vector>

namespace sl213 {

/// Element of R[y]/(y^13 - 1) for a coefficient ring R (polynomials or
/// series). Evaluating at y = zeta^nu recovers the nu-indexed member of a
/// fourteen-point family, so power sums over nu reduce to the y^0 component:
/// sum_{nu=0..12} F(zeta^nu) = 13 * [y^0] F. All components stay rational for
/// the families handled here, which keeps the hot path free of cyclotomic
/// coefficient arithmetic.
template <class V>
struct CyclicRing13 {
  std::vector<V> c;  // exactly 13 components

  explicit CyclicRing13(const V& zero) : c(13, zero) {}

  V& operator[](int i) { return c[i]; }
  const V& operator[](int i) const { return c[i]; }
};

template <class V>
CyclicRing13<V> cyclic_mul(const CyclicRing13<V>& a, const CyclicRing13<V>& b,
                           const V& zero) {
  CyclicRing13<V> out(zero);
  for (int i = 0; i < 13; ++i) {
    for (int j = 0; j < 13; ++j) {
      out.c[(i + j) % 13] += a.c[i] * b.c[j];
    }
  }
  return out;
}

/// Just the y^0 component of a*b: 13 coefficient-ring products.
template <class V>
V cyclic_component0(const CyclicRing13<V>& a, const CyclicRing13<V>& b, const V& zero) {
  V out = zero;
  for (int i = 0; i < 13; ++i) out += a.c[i] * b.c[(13 - i) % 13];
  return out;
}

}  // namespace sl213
