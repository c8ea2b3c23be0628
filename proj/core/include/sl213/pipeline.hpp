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

#include <map>

#include "sl213/invariants.hpp"
#include "sl213/qexp.hpp"
#include "sl213/qseries.hpp"

namespace sl213 {

/// Everything the level-13 modular checks consume: the theta vector, the
/// evaluated form families, the cyclic-transform components of the
/// fourteen-point system, the classical series, and a cached table of
/// power-sum series. `window` is the comparison window (numerator bound);
/// the internal truncation carries extra orders so divisions stay exact
/// through the window.
class ModularSeries {
 public:
  ModularSeries(long long window_orders, const FormFamily& forms);

  const SeriesContext& ctx() const { return ctx_; }
  /// Numerator bound for "verified through q-order N" comparisons.
  long long window() const { return window_; }

  const std::array<QExp, 6>& a() const { return a_; }
  const std::array<QExp, 7>& A() const { return A_; }
  const std::array<QExp, 14>& D() const { return D_; }
  const std::array<QExp, 13>& G() const { return G_; }
  const QExp& eta() const { return eta_; }
  const QExp& delta() const { return delta_; }
  const QExp& E4() const { return E4_; }
  const QExp& E6() const { return E6_; }
  const QExp& j() const { return j_; }
  const CyclicRing13<QExp>& W() const { return W_; }
  const CyclicRing13<QExp>& Del() const { return Del_; }
  const QExp& w_inf() const { return w_inf_; }
  const QExp& delta_inf() const { return delta_inf_; }

  QExp eta_pow(int k);
  /// Unnormalized power sum on the theta vector (the fused path).
  QExp phi_a_unnormalized(int m, int n);
  /// eta^(4m+6n) * norm * phi_a: the weight-(4m+6n)/... modular realization.
  QExp phi_x(int m, int n, const Rational& norm);
  /// Same on the eta^3- and eta^9-scaled vectors.
  QExp phi_y_vec(int m, int n);
  QExp phi_u_vec(int m, int n);

 private:
  SeriesContext ctx_;
  long long window_;
  std::array<QExp, 6> a_;
  std::array<QExp, 7> A_;
  std::array<QExp, 14> D_;
  std::array<QExp, 13> G_;
  QExp eta_, delta_, E4_, E6_, j_;
  CyclicRing13<QExp> W_, Del_;
  QExp w_inf_, delta_inf_;
  std::vector<CyclicRing13<QExp>> wpow_, dpow_;
  std::vector<QExp> winfpow_, dinfpow_;
  std::map<int, QExp> etapow_;
  std::map<std::pair<int, int>, QExp> phi_cache_;

  const CyclicRing13<QExp>& wpower(int m);
  const CyclicRing13<QExp>& dpower(int n);
};

/// The order-5 baseline context: theta pair, weight-one vector, the three
/// binary forms (stored in z1, z2) and their values on the vector.
class IcosaSeries {
 public:
  explicit IcosaSeries(long long window_orders);

  const SeriesContext& ctx() const { return ctx_; }
  long long window() const { return window_; }
  const QExp& a() const { return a_; }
  const QExp& b() const { return b_; }
  const QExp& x1() const { return x1_; }
  const QExp& x2() const { return x2_; }
  const QExp& eta() const { return eta_; }
  const QExp& delta() const { return delta_; }
  const QExp& E4() const { return E4_; }
  const QExp& E6() const { return E6_; }
  const QExp& j() const { return j_; }
  const MPoly& f_poly() const { return f_; }
  const MPoly& h_poly() const { return h_; }
  const MPoly& t_poly() const { return t_; }
  const QExp& f_x() const { return f_x_; }
  const QExp& h_x() const { return h_x_; }
  const QExp& t_x() const { return t_x_; }

 private:
  SeriesContext ctx_;
  long long window_;
  QExp a_, b_, x1_, x2_, eta_, delta_, E4_, E6_, j_;
  MPoly f_, h_, t_;
  QExp f_x_, h_x_, t_x_;
};

/// The displayed degree-12/20/30 binary forms.
MPoly icosa_f();
MPoly icosa_h();
MPoly icosa_t();

}  // namespace sl213
