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
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl213/cyclic13.hpp"
#include "sl213/grouprep.hpp"
#include "sl213/mpoly.hpp"

namespace sl213 {

/// Index 13 plays the role of the infinity member in every 14-long family.
constexpr int kInfIndex = 13;

/// zeta-exponent weights of A_1..A_6 inside phi_nu (index 0 unused).
constexpr int kPhiWeights[7] = {0, 1, 4, 9, 3, 12, 10};

/// The quadratic forms A_0..A_6, cubic forms D_0..D_12, D_inf and sextic
/// forms G_0..G_12, exactly as displayed.
struct FormFamily {
  std::array<MPoly, 7> A;
  std::array<MPoly, 14> D;  // D[13] = D_inf
  std::array<MPoly, 13> G;
};
FormFamily build_forms();

/// The fourteen-point system: phi_nu (degree 2, with phi_inf = sqrt(13)A_0),
/// w_nu = phi_nu^2 (degree 4) and delta_nu (degree 6), all exact polynomials
/// over Q(zeta_13).
struct FourteenPoints {
  std::array<MPoly, 14> phi;
  std::array<MPoly, 14> w;
  std::array<MPoly, 14> delta;
};
FourteenPoints build_fourteen_points(const FormFamily& f);

/// The same system in the cyclic-transform picture: W(y) = phi(y)^2 and
/// Del(y) with rational components, plus the infinity members. Power sums of
/// the fourteen points are 13*[y^0](W^m Del^n) + w_inf^m delta_inf^n.
struct PointRing {
  CyclicRing13<MPoly> phi_y;
  CyclicRing13<MPoly> W;
  CyclicRing13<MPoly> Del;
  MPoly w_inf;
  MPoly delta_inf;
  PointRing() : phi_y(MPoly::zero()), W(MPoly::zero()), Del(MPoly::zero()) {}
};
PointRing build_point_ring(const FormFamily& f);

/// Radical coefficients of the cubic-form transformation rows.
struct Radicals {
  CycloElem r0, r1, r2, r3, r4, rinf;
};

struct RadicalResolution {
  Radicals radicals;
  int sign2 = 0, sign4 = 0;  // chosen signs on the quartic-subfield branches
  bool ok = false;
  std::string note;
};

/// Settles the r2/r4 branches by requiring both cubic transformation rows at
/// nu = 0; tries the four sign pairs and reports the unique survivor.
RadicalResolution resolve_radical_signs(const FieldConstants& fc, const FormFamily& f,
                                        const Generators& g);

struct TransformCheck {
  bool ok = false;
  std::string witness;
};

/// sqrt(13) * (S T^nu)(A_0) == phi_nu, exact.
TransformCheck verify_A_transformation(int nu, const Generators& g, const FormFamily& f,
                                       const FourteenPoints& pts);
/// -13 sqrt(13) * (S T^nu)(D_0 or D_inf) equals the radical-weighted row.
TransformCheck verify_D_transformation(int nu, bool inf_row, const Generators& g,
                                       const FormFamily& f, const Radicals& r);
/// 13^2 * (S T^nu)(G_0) == delta_nu, exact.
TransformCheck verify_G_transformation(int nu, const Generators& g, const FormFamily& f,
                                       const FourteenPoints& pts);

/// Permutation of the fourteen indices induced by a group element: finds
/// sigma with phi_idx o g = phi_sign * phi_sigma(idx), then certifies
/// w_idx o g = w_sigma(idx) and delta_idx o g = delta_sigma(idx) exactly.
struct PointPermutation {
  std::array<int, 14> sigma{};
  std::array<int, 14> phi_sign{};
  bool ok = false;
  std::string witness;
  std::string cycle_notation() const;
};
PointPermutation compute_group_permutation(const GMatrix& g, const FourteenPoints& pts);

/// Power-sum invariant specification; degree 4m+6n.
struct InvariantSpec {
  int m = 0, n = 0;
  int degree() const { return 4 * m + 6 * n; }
};

/// The classically tabulated normalization constant for Phi_{m,n} (1 when the
/// family is used unnormalized). Six of these disagree with the values this
/// engine derives; derived_normalization carries the corrected table. The
/// verification report cross-checks both.
Rational stated_normalization(int m, int n);
Rational derived_normalization(int m, int n);

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds symbolic invariants with cached cyclic-ring powers. Throws
/// BudgetError when 4m+6n exceeds the degree budget.
class SymbolicInvariantBuilder {
 public:
  SymbolicInvariantBuilder(const FormFamily& forms, int degree_budget);

  int degree_budget() const { return budget_; }
  /// Unnormalized power sum as an exact polynomial.
  MPoly phi_unnormalized(int m, int n);
  /// Normalized with the given constant.
  MPoly phi(int m, int n, const Rational& norm);

 private:
  PointRing ring_;
  int budget_;
  std::vector<CyclicRing13<MPoly>> wpow_, dpow_;
  std::vector<MPoly> winf_pow_, dinf_pow_;
  const CyclicRing13<MPoly>& wpower(int m);
  const CyclicRing13<MPoly>& dpower(int n);
};

/// Exact value of the (unnormalized) invariant at a point, through the
/// fourteen-point values; the sampled-strategy backend.
CycloElem invariant_value_at(int m, int n, const std::array<CycloElem, 6>& x,
                             const FormFamily& forms);

/// Substitution under S and T compared with p itself.
TransformCheck verify_invariance_symbolic(const MPoly& p, const Generators& g);

/// Exact evaluation identity test at `points` seeded integer points in
/// [-9,9]^6: the invariant value is unchanged along S and T orbits.
TransformCheck verify_invariance_points(int m, int n, const FormFamily& forms,
                                        const Generators& g, std::mt19937_64& rng,
                                        int points);

/// Parameter records for the two singular families; constructed from flat
/// parameter lists with a strict count check.
struct E8Params {
  Rational lambda, mu, gamma1, gamma2;
};
struct QE20Params {
  Rational lambda, mu1, mu2, gamma1, gamma2, gamma3;
};
E8Params e8_params(const std::vector<Rational>& v);
QE20Params qe20_params(const std::vector<Rational>& v);

/// Affine combinations of the degree-12/20/30 and degree-12/32/42/44
/// components; V is any ring value (polynomial or series).
template <class V>
struct E8Triple {
  V phi12, phi20, phi30;
};
template <class V>
struct QE20Tuple {
  V phi12, phi32, phi42, phi44;
};

/// Seeded draw helpers: integers in [-9, 9], rationals with numerator in
/// [-9, 9] and denominator in [1, 9].
long draw_int(std::mt19937_64& rng);
Rational draw_rational(std::mt19937_64& rng);
std::array<CycloElem, 6> draw_point(std::mt19937_64& rng);

}  // namespace sl213
