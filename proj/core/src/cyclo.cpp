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

#include "sl213/cyclo.hpp"

#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sl213 {

CycloElem CycloElem::zeta_power(long k) {
  k %= 13;
  if (k < 0) k += 13;
  CycloElem z;
  if (k < kDegree) {
    z.c_[k] = rat(1);
  } else {
    // zeta^12 = -(1 + zeta + ... + zeta^11)
    for (int i = 0; i < kDegree; ++i) z.c_[i] = rat(-1);
  }
  return z;
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloElem CycloElem::operator-() const {
  CycloElem r;
  for (int i = 0; i < kDegree; ++i) r.c_[i] = -c_[i];
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::scale(const Rational& r) {
  for (int i = 0; i < kDegree; ++i) c_[i] *= r;
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  // Rational fast paths dominate in practice: series coefficients and the
  // power-sum components are plain rationals.
  if (a.is_rational()) {
    if (a.c_[0] == 0) return CycloElem();
    CycloElem r = b;
    r.scale(a.c_[0]);
    return r;
  }
  if (b.is_rational()) {
    if (b.c_[0] == 0) return CycloElem();
    CycloElem r = a;
    r.scale(b.c_[0]);
    return r;
  }
  // Sparse-aware convolution into slots 0..22, then reduce zeta^k for k >= 12.
  std::array<Rational, 23> acc{};
  for (int i = 0; i < CycloElem::kDegree; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < CycloElem::kDegree; ++j) {
      if (b.c_[j] == 0) continue;
      acc[i + j] += a.c_[i] * b.c_[j];
    }
  }
  // zeta^(13+m) = zeta^m
  for (int k = 13; k <= 22; ++k) {
    if (acc[k] != 0) acc[k - 13] += acc[k];
  }
  CycloElem r;
  for (int i = 0; i < CycloElem::kDegree; ++i) r.c_[i] = acc[i];
  if (acc[12] != 0) {
    // zeta^12 = -(1 + ... + zeta^11)
    for (int i = 0; i < CycloElem::kDegree; ++i) r.c_[i] -= acc[12];
  }
  return r;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_13)");
  if (is_rational()) {
    CycloElem r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Solve M x = e0 where M is multiplication by *this on the power basis.
  constexpr int n = kDegree;
  std::array<std::array<Rational, n + 1>, n> m{};
  for (int j = 0; j < n; ++j) {
    CycloElem col = *this * zeta_power(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = rat(1);
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rational inv = 1 / m[row][col];
    for (int j = col; j <= n; ++j) m[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  CycloElem r;
  for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
  if (!(*this * r == one())) throw std::logic_error("cyclotomic inversion failed");
  return r;
}

CycloElem CycloElem::galois(long k) const {
  k %= 13;
  if (k < 0) k += 13;
  if (k == 0) throw std::invalid_argument("galois exponent must be coprime to 13");
  CycloElem r;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    CycloElem t = zeta_power((i * k) % 13);
    t.scale(c_[i]);
    r += t;
  }
  return r;
}

std::string CycloElem::to_string() const {
  std::string out;
  for (int i = 0; i < kDegree; ++i) {
    if (i) out += ' ';
    out += rat_to_string(c_[i]);
  }
  return out;
}

CycloElem CycloElem::from_string(const std::string& s) {
  std::istringstream is(s);
  CycloElem r;
  std::string tok;
  for (int i = 0; i < kDegree; ++i) {
    if (!(is >> tok)) throw std::invalid_argument("cyclotomic element needs 12 rationals");
    r.c_[i] = rat_from_string(tok);
  }
  if (is >> tok) throw std::invalid_argument("trailing data after cyclotomic element");
  return r;
}

std::string CycloElem::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    bool neg = v < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational av = neg ? Rational(-v) : v;
    std::string coeff = rat_to_string(av);
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::complex<double> CycloElem::embed() const {
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    double v = c_[i].get_d();
    double ang = 2.0 * M_PI * i / 13.0;
    acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

EmbedDigits embed_decimal(const CycloElem& a, int precision) {
  if (precision < 10) throw std::invalid_argument("embedding precision must be >= 10");
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(precision * 3.33) + 64;
  mpfr_t re, im, ang, c, s, coef, pi;
  mpfr_inits2(bits, re, im, ang, c, s, coef, pi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (int i = 0; i < CycloElem::kDegree; ++i) {
    if (a[i] == 0) continue;
    mpfr_set_q(coef, a[i].get_mpq_t(), MPFR_RNDN);
    mpfr_mul_si(ang, pi, 2 * i, MPFR_RNDN);
    mpfr_div_si(ang, ang, 13, MPFR_RNDN);
    mpfr_cos(c, ang, MPFR_RNDN);
    mpfr_sin(s, ang, MPFR_RNDN);
    mpfr_fma(re, coef, c, re, MPFR_RNDN);
    mpfr_fma(im, coef, s, im, MPFR_RNDN);
  }
  auto fmt = [&](mpfr_t x) {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rf", precision, x);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  };
  EmbedDigits out{fmt(re), fmt(im)};
  mpfr_clears(re, im, ang, c, s, coef, pi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

namespace {

CycloElem zsum(std::initializer_list<long> plus, std::initializer_list<long> minus = {}) {
  CycloElem r;
  for (long k : plus) r += CycloElem::zeta_power(k);
  for (long k : minus) r -= CycloElem::zeta_power(k);
  return r;
}

}  // namespace

CycloElem gauss_sqrt13() {
  // alpha + beta + gamma; the quadratic residues mod 13 enter with +1.
  CycloElem g = zsum({1, 12, 3, 10, 9, 4}, {5, 8, 2, 11, 6, 7});
  return g;
}

FieldConstants periods_and_radicals() {
  FieldConstants f;
  f.theta1 = zsum({1, 3, 9});
  f.theta2 = zsum({2, 6, 5});
  f.theta3 = zsum({4, 12, 10});
  f.theta4 = zsum({8, 11, 7});
  f.alpha = zsum({1, 12}, {5, 8});
  f.beta = zsum({3, 10}, {2, 11});
  f.gamma = zsum({9, 4}, {6, 7});
  f.sqrt13 = gauss_sqrt13();
  if (!(f.sqrt13 * f.sqrt13 == CycloElem(13)))
    throw std::logic_error("sqrt(13) square check failed");
  if (!(f.alpha + f.beta + f.gamma == f.sqrt13))
    throw std::logic_error("alpha+beta+gamma != sqrt(13)");

  auto two = [](const CycloElem& x) { return x.scaled(rat(2)); };
  auto three = [](const CycloElem& x) { return x.scaled(rat(3)); };
  f.r0 = two(f.theta1 - f.theta3) - three(f.theta2 - f.theta4);
  f.rinf = two(f.theta4 - f.theta2) - three(f.theta1 - f.theta3);
  f.r1 = f.theta1 + f.theta2 - f.theta3 - f.theta4;
  f.r3 = -f.theta1 + f.theta2 + f.theta3 - f.theta4;
  // 2*theta + (1 -+ sqrt13)/2: the quartic-subfield square roots of
  // (-13 +- 3 sqrt13)/2. The sign of each is settled against the cubic-form
  // transformation law (resolve_radical_signs); this branch is the one that
  // works, and the squared values are certified here.
  f.r2 = two(f.theta1) + (CycloElem(1) - f.sqrt13).scaled(rat(1, 2));
  f.r4 = two(f.theta2) + (CycloElem(1) + f.sqrt13).scaled(rat(1, 2));

  const CycloElem m13(-13);
  if (!(f.r1 * f.r1 == m13 - f.sqrt13.scaled(rat(2))))
    throw std::logic_error("r1^2 != -13-2*sqrt(13)");
  if (!(f.r3 * f.r3 == m13 + f.sqrt13.scaled(rat(2))))
    throw std::logic_error("r3^2 != -13+2*sqrt(13)");
  if (!(f.r2 * f.r2 == (m13 + f.sqrt13.scaled(rat(3))).scaled(rat(1, 2))))
    throw std::logic_error("r2^2 != (-13+3*sqrt(13))/2");
  if (!(f.r4 * f.r4 == (m13 - f.sqrt13.scaled(rat(3))).scaled(rat(1, 2))))
    throw std::logic_error("r4^2 != (-13-3*sqrt(13))/2");
  return f;
}

std::ostream& operator<<(std::ostream& os, const CycloElem& a) { return os << a.pretty(); }

}  // namespace sl213
