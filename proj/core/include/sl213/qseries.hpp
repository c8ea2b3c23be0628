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

#include "sl213/mpoly.hpp"
#include "sl213/qexp.hpp"

namespace sl213 {

/// Phased theta constant of order `level` (5 or 13) with characteristic
/// [eps_num/eps_den; 1] at (0, level*z): the exponential prefactor is folded
/// in, leaving q^{k^2/(8 level)} * sum_n (-1)^n q^{(level n^2 + k n)/2} with
/// integer coefficients. Requires eps_den == level in {5, 13} and a context
/// grid divisible by 8*level.
QExp theta_characteristic(int eps_num, int eps_den, int level, const SeriesContext& ctx);

/// The six order-13 theta constants a_1..a_6 (the fourth carries its extra
/// sign), as a vector on the shared grid.
std::array<QExp, 6> theta_vector_13(const SeriesContext& ctx);

/// The order-5 pair (a, b) with characteristics 3/5 and 1/5.
std::array<QExp, 2> theta_pair_5(const SeriesContext& ctx);

/// Dedekind eta via the pentagonal-number expansion of the Euler product.
QExp eta_series(const SeriesContext& ctx);
/// Discriminant eta^24.
QExp delta_series(const SeriesContext& ctx);
/// Normalized Eisenstein series of weight 4 or 6.
QExp eisenstein(int weight, const SeriesContext& ctx);
/// j = E4^3 / Delta; the accuracy bound reflects the division.
QExp j_series(const SeriesContext& ctx);

/// Exact composite p(v1..v6) on series, by a Horner cascade over variables.
QExp evaluate_poly_on_series(const MPoly& p, const std::array<QExp, 6>& v);
/// Two-variable convenience used by the degree-two baseline.
QExp evaluate_poly_on_series2(const MPoly& p, const QExp& v1, const QExp& v2);

/// Floating evaluation of the six order-13 theta constants at z (Im z > 0),
/// summing |n| <= terms.
std::array<std::complex<double>, 6> numeric_theta_eval(std::complex<double> z, int terms);

/// Numeric check of the inversion law A(-1/z) = e^{i pi/4} sqrt(z) S A(z)
/// with 0 < arg sqrt(z) <= pi/2.
struct Prop32Result {
  double deviation = 0.0;
  bool converged = false;
  bool ok = false;
};
Prop32Result verify_prop32_S(std::complex<double> z, double tolerance, int terms = 48);

}  // namespace sl213
