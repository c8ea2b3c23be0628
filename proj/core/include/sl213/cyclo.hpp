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
#include <complex>
#include <iosfwd>
#include <string>

#include "sl213/rational.hpp"

namespace sl213 {

/// Exact element of Q(zeta_13), zeta = exp(2*pi*i/13), stored on the power
/// basis 1, zeta, ..., zeta^11. zeta^12 is always rewritten through
/// 1 + zeta + ... + zeta^12 = 0, so equality is componentwise.
class CycloElem {
 public:
  static constexpr int kDegree = 12;

  CycloElem() = default;
  explicit CycloElem(const Rational& c0) { c_[0] = c0; }
  explicit CycloElem(long c0) { c_[0] = rat(c0); }

  static CycloElem zero() { return CycloElem(); }
  static CycloElem one() { return CycloElem(1); }
  /// zeta^k for any integer k (reduced mod 13).
  static CycloElem zeta_power(long k);

  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  /// True when all zeta-components above the constant vanish.
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  CycloElem& scale(const Rational& r);
  CycloElem scaled(const Rational& r) const {
    CycloElem t = *this;
    t.scale(r);
    return t;
  }

  /// Multiplicative inverse, computed by solving the 12x12 rational system
  /// for the multiplication-by-*this operator. Throws on zero.
  CycloElem inverse() const;

  /// Galois substitution zeta -> zeta^k (k coprime to 13), reduced.
  CycloElem galois(long k) const;

  /// Canonical text form: 12 rationals, space separated, basis order.
  std::string to_string() const;
  static CycloElem from_string(const std::string& s);

  /// Compact display form like "3 - 2*z^5" (z = zeta); "0" when zero.
  std::string pretty() const;

  /// Fast double-precision embedding under zeta -> exp(2*pi*i/13).
  std::complex<double> embed() const;

 private:
  std::array<Rational, kDegree> c_{};
};

/// Decimal embedding with |value - exact| < 10^(1-precision).
/// Returns "re" and "im" as fixed-point decimal strings.
struct EmbedDigits {
  std::string re, im;
};
EmbedDigits embed_decimal(const CycloElem& a, int precision);

/// The quadratic Gauss sum realizing +sqrt(13): alpha + beta + gamma with the
/// explicit zeta-combinations; positive real embedding.
CycloElem gauss_sqrt13();

/// Gaussian periods of length 3 and the radical field constants. The r2/r4
/// members carry the branch that makes the cubic-form transformation law hold;
/// see resolve_radical_signs in invariants.hpp for the operational fix.
struct FieldConstants {
  CycloElem theta1, theta2, theta3, theta4;
  CycloElem alpha, beta, gamma;
  CycloElem sqrt13;
  CycloElem r0, r1, r2, r3, r4, rinf;
};

/// Builds the periods and radicals and checks every squared-value constraint
/// exactly. Throws std::logic_error if any constraint fails.
FieldConstants periods_and_radicals();

std::ostream& operator<<(std::ostream& os, const CycloElem& a);

}  // namespace sl213
