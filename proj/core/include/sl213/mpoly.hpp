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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sl213/cyclo.hpp"
#include "sl213/gmatrix.hpp"

namespace sl213 {

/// Monomial in z1..z6 with the graded lexicographic order (z1 > ... > z6).
/// Packed into one 64-bit key: total degree in the top byte, then the six
/// exponent bytes, so ascending key order is graded-lex.
struct Monomial {
  std::array<std::uint8_t, 6> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  std::uint64_t key() const {
    std::uint64_t k = static_cast<std::uint64_t>(degree()) << 48;
    for (int i = 0; i < 6; ++i) k |= static_cast<std::uint64_t>(e[i]) << (40 - 8 * i);
    return k;
  }
  static Monomial from_key(std::uint64_t k) {
    Monomial m;
    for (int i = 0; i < 6; ++i) m.e[i] = static_cast<std::uint8_t>((k >> (40 - 8 * i)) & 0xff);
    return m;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < 6; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Sparse multivariate polynomial in z1..z6 over Q(zeta_13). Terms are kept
/// sorted ascending in graded-lex order with no zero coefficients, so equal
/// polynomials compare equal and serialize identically regardless of how
/// they were built.
class MPoly {
 public:
  using Term = std::pair<Monomial, CycloElem>;

  MPoly() = default;

  static MPoly zero() { return MPoly(); }
  static MPoly constant(const CycloElem& c);
  static MPoly constant(const Rational& c);
  /// z_i for i in 1..6.
  static MPoly variable(int i);
  static MPoly term(const Monomial& m, const CycloElem& c);
  /// Builds from unsorted term data, combining duplicates.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  int degree() const { return deg_; }
  std::size_t nterms() const { return t_.size(); }
  std::span<const Term> terms() const { return t_; }
  CycloElem coeff(const Monomial& m) const;
  /// True when every coefficient lies in Q.
  bool is_rational() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const CycloElem& c) const;
  MPoly scaled(const Rational& c) const;
  /// Non-negative integer power by repeated multiplication.
  MPoly pow(unsigned k) const;

  std::string summary() const;

 private:
  std::vector<Term> t_;
  int deg_ = 0;

  void recompute_degree();
  friend MPoly substitute_linear(const MPoly&, const GMatrix&);
  friend CycloElem evaluate(const MPoly&, const std::array<CycloElem, 6>&);
};

/// Composition with the linear change of variables z_i -> sum_k M[i][k] z_k,
/// i.e. p(Mz). Under this convention
///   substitute_linear(p, M*N) == substitute_linear(substitute_linear(p, M), N)
/// and evaluate(substitute_linear(p, M), x) == evaluate(p, M*x).
MPoly substitute_linear(const MPoly& p, const GMatrix& M);

/// Exact value of p at the point, by a Horner cascade over the variables.
CycloElem evaluate(const MPoly& p, const std::array<CycloElem, 6>& point);

/// Partial derivative with respect to z_var (var in 1..6).
MPoly derivative(const MPoly& p, int var);

/// "MPOLY v1" text format: header "MPOLY v1 <nvars> <nterms>", then one line
/// per term with 6 exponents and 12 rationals. Output is canonical (sorted).
void serialize(const MPoly& p, std::ostream& os);
MPoly deserialize_mpoly(std::istream& is);

}  // namespace sl213
