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

#include "sl213/pipeline.hpp"

namespace sl213 {

namespace {

// Division by eta^8*Delta^2 in the membership checks costs 7/3 q-orders of
// accuracy and j costs two; three extra orders keep every comparison window
// certified.
constexpr long long kMarginOrders = 3;

}  // namespace

ModularSeries::ModularSeries(long long window_orders, const FormFamily& forms)
    : ctx_{312, 312 * (window_orders + kMarginOrders)},
      window_(312 * window_orders),
      a_{QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_)},
      A_{QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_)},
      D_{QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_),
         QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_)},
      G_{QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_),
         QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_), QExp(ctx_)},
      eta_(ctx_), delta_(ctx_), E4_(ctx_), E6_(ctx_), j_(ctx_),
      W_(QExp::zero(ctx_)), Del_(QExp::zero(ctx_)),
      w_inf_(ctx_), delta_inf_(ctx_) {
  a_ = theta_vector_13(ctx_);
  for (int jx = 0; jx < 7; ++jx) A_[jx] = evaluate_poly_on_series(forms.A[jx], a_);
  for (int jx = 0; jx < 14; ++jx) D_[jx] = evaluate_poly_on_series(forms.D[jx], a_);
  for (int jx = 0; jx < 13; ++jx) G_[jx] = evaluate_poly_on_series(forms.G[jx], a_);
  eta_ = eta_series(ctx_);
  delta_ = eta_.pow(24);
  E4_ = eisenstein(4, ctx_);
  E6_ = eisenstein(6, ctx_);
  j_ = E4_.pow(3) * delta_.inverse();

  CyclicRing13<QExp> phiy(QExp::zero(ctx_));
  phiy[0] = A_[0];
  for (int jx = 1; jx <= 6; ++jx) phiy[kPhiWeights[jx]] += A_[jx];
  W_ = cyclic_mul(phiy, phiy, QExp::zero(ctx_));
  Del_[0] = G_[0].scaled(rat(-13));
  for (int k = 1; k < 13; ++k) Del_[k] = G_[k];
  w_inf_ = (A_[0] * A_[0]).scaled(rat(13));
  delta_inf_ = (D_[0] * D_[0] + D_[kInfIndex] * D_[kInfIndex]).scaled(rat(169));

  CyclicRing13<QExp> unit(QExp::zero(ctx_));
  unit[0] = QExp::one(ctx_);
  wpow_.push_back(unit);
  dpow_.push_back(unit);
  winfpow_.push_back(QExp::one(ctx_));
  dinfpow_.push_back(QExp::one(ctx_));
}

const CyclicRing13<QExp>& ModularSeries::wpower(int m) {
  while (static_cast<int>(wpow_.size()) <= m)
    wpow_.push_back(cyclic_mul(wpow_.back(), W_, QExp::zero(ctx_)));
  return wpow_[m];
}

const CyclicRing13<QExp>& ModularSeries::dpower(int n) {
  while (static_cast<int>(dpow_.size()) <= n)
    dpow_.push_back(cyclic_mul(dpow_.back(), Del_, QExp::zero(ctx_)));
  return dpow_[n];
}

QExp ModularSeries::eta_pow(int k) {
  auto it = etapow_.find(k);
  if (it != etapow_.end()) return it->second;
  QExp p = eta_.pow(static_cast<unsigned>(k));
  etapow_.emplace(k, p);
  return p;
}

QExp ModularSeries::phi_a_unnormalized(int m, int n) {
  auto key = std::make_pair(m, n);
  auto it = phi_cache_.find(key);
  if (it != phi_cache_.end()) return it->second;
  QExp core = QExp::zero(ctx_);
  if (n == 0) {
    core = wpower(m)[0];
  } else if (m == 0) {
    core = dpower(n)[0];
  } else {
    core = cyclic_component0(wpower(m), dpower(n), QExp::zero(ctx_));
  }
  while (static_cast<int>(winfpow_.size()) <= m)
    winfpow_.push_back(winfpow_.back() * w_inf_);
  while (static_cast<int>(dinfpow_.size()) <= n)
    dinfpow_.push_back(dinfpow_.back() * delta_inf_);
  QExp out = core.scaled(rat(13)) + winfpow_[m] * dinfpow_[n];
  phi_cache_.emplace(key, out);
  return out;
}

QExp ModularSeries::phi_x(int m, int n, const Rational& norm) {
  return (phi_a_unnormalized(m, n) * eta_pow(4 * m + 6 * n)).scaled(norm);
}

QExp ModularSeries::phi_y_vec(int m, int n) {
  return phi_a_unnormalized(m, n) * eta_pow(3 * (4 * m + 6 * n));
}

QExp ModularSeries::phi_u_vec(int m, int n) {
  return phi_a_unnormalized(m, n) * eta_pow(9 * (4 * m + 6 * n));
}

MPoly icosa_f() {
  auto term = [](long c, int e1, int e2) {
    Monomial m;
    m.e[0] = static_cast<std::uint8_t>(e1);
    m.e[1] = static_cast<std::uint8_t>(e2);
    return MPoly::term(m, CycloElem(c));
  };
  return term(1, 11, 1) + term(11, 6, 6) + term(-1, 1, 11);
}

MPoly icosa_h() {
  auto term = [](long c, int e1, int e2) {
    Monomial m;
    m.e[0] = static_cast<std::uint8_t>(e1);
    m.e[1] = static_cast<std::uint8_t>(e2);
    return MPoly::term(m, CycloElem(c));
  };
  return term(-1, 20, 0) + term(-1, 0, 20) + term(228, 15, 5) + term(-228, 5, 15) +
         term(-494, 10, 10);
}

MPoly icosa_t() {
  auto term = [](long c, int e1, int e2) {
    Monomial m;
    m.e[0] = static_cast<std::uint8_t>(e1);
    m.e[1] = static_cast<std::uint8_t>(e2);
    return MPoly::term(m, CycloElem(c));
  };
  return term(1, 30, 0) + term(1, 0, 30) + term(522, 25, 5) + term(-522, 5, 25) +
         term(-10005, 20, 10) + term(-10005, 10, 20);
}

IcosaSeries::IcosaSeries(long long window_orders)
    : ctx_{120, 120 * (window_orders + kMarginOrders)},
      window_(120 * window_orders),
      a_(ctx_), b_(ctx_), x1_(ctx_), x2_(ctx_), eta_(ctx_), delta_(ctx_),
      E4_(ctx_), E6_(ctx_), j_(ctx_),
      f_(icosa_f()), h_(icosa_h()), t_(icosa_t()),
      f_x_(ctx_), h_x_(ctx_), t_x_(ctx_) {
  auto pair = theta_pair_5(ctx_);
  a_ = pair[0];
  b_ = pair[1];
  eta_ = eta_series(ctx_);
  delta_ = eta_.pow(24);
  E4_ = eisenstein(4, ctx_);
  E6_ = eisenstein(6, ctx_);
  j_ = E4_.pow(3) * delta_.inverse();
  x1_ = eta_ * a_;
  x2_ = eta_ * b_;
  f_x_ = evaluate_poly_on_series2(f_, x1_, x2_);
  h_x_ = evaluate_poly_on_series2(h_, x1_, x2_);
  t_x_ = evaluate_poly_on_series2(t_, x1_, x2_);
}

}  // namespace sl213
