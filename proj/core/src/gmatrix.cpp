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

#include "sl213/gmatrix.hpp"

namespace sl213 {

GMatrix GMatrix::identity() {
  GMatrix m;
  for (int i = 0; i < kDim; ++i) m.at(i, i) = CycloElem::one();
  return m;
}

GMatrix GMatrix::operator-() const {
  GMatrix r;
  for (int i = 0; i < kDim * kDim; ++i) r.e_[i] = -e_[i];
  return r;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  GMatrix r;
  for (int i = 0; i < GMatrix::kDim; ++i) {
    for (int k = 0; k < GMatrix::kDim; ++k) {
      const CycloElem& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < GMatrix::kDim; ++j) {
        const CycloElem& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
  GMatrix r;
  for (int i = 0; i < GMatrix::kDim * GMatrix::kDim; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

GMatrix GMatrix::transpose() const {
  GMatrix r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r.at(j, i) = at(i, j);
  return r;
}

GMatrix GMatrix::pow(unsigned k) const {
  GMatrix r = identity();
  GMatrix base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

GMatrix GMatrix::scaled(const CycloElem& s) const {
  GMatrix r;
  for (int i = 0; i < kDim * kDim; ++i) r.e_[i] = e_[i] * s;
  return r;
}

std::array<CycloElem, GMatrix::kDim> GMatrix::apply(
    const std::array<CycloElem, kDim>& v) const {
  std::array<CycloElem, kDim> out{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

std::string GMatrix::canonical_string() const {
  std::string out;
  out.reserve(512);
  for (int i = 0; i < kDim * kDim; ++i) {
    if (i) out += '|';
    out += e_[i].to_string();
  }
  return out;
}

}  // namespace sl213
