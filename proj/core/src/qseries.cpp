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

#include "sl213/qseries.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "sl213/grouprep.hpp"

namespace sl213 {

QExp theta_characteristic(int eps_num, int eps_den, int level, const SeriesContext& ctx) {
  if ((eps_den != 5 && eps_den != 13) || level != eps_den)
    throw std::invalid_argument("theta characteristic: unsupported denominator");
  if (ctx.denominator % (8LL * level) != 0)
    throw std::invalid_argument("theta characteristic: context grid too coarse");
  const long long D = ctx.denominator;
  const long long k = eps_num;
  const long long head = k * k * (D / (8 * level));
  const long long orders = ctx.orders();
  const int nmax = static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(orders) /
                                                        level))) + 2;
  std::vector<QExp::Term> terms;
  for (int n = -nmax; n <= nmax; ++n) {
    long long quad = static_cast<long long>(level) * n * n + k * n;
    if (quad % 2 != 0) throw std::logic_error("theta exponent fell off the integer grid");
    long long e = head + D * (quad / 2);
    if (e < 0 || e > ctx.limit) continue;
    terms.push_back({e, CycloElem(n % 2 == 0 ? 1 : -1)});
  }
  return QExp::from_terms(ctx, std::move(terms));
}

std::array<QExp, 6> theta_vector_13(const SeriesContext& ctx) {
  static constexpr int kChars[6] = {11, 7, 5, 3, 9, 1};
  std::array<QExp, 6> a{QExp(ctx), QExp(ctx), QExp(ctx), QExp(ctx), QExp(ctx), QExp(ctx)};
  for (int i = 0; i < 6; ++i) {
    a[i] = theta_characteristic(kChars[i], 13, 13, ctx);
    if (i == 3) a[i] = -a[i];
  }
  return a;
}

std::array<QExp, 2> theta_pair_5(const SeriesContext& ctx) {
  return {theta_characteristic(3, 5, 5, ctx), theta_characteristic(1, 5, 5, ctx)};
}

QExp eta_series(const SeriesContext& ctx) {
  if (ctx.denominator % 24 != 0)
    throw std::invalid_argument("eta needs a grid divisible by 24");
  const long long D = ctx.denominator;
  std::vector<QExp::Term> terms;
  for (long long n = -64; n <= 64; ++n) {
    long long e = D / 24 + D * (n * (3 * n - 1) / 2);
    if (e < 0 || e > ctx.limit) continue;
    terms.push_back({e, CycloElem(n % 2 == 0 ? 1 : -1)});
  }
  return QExp::from_terms(ctx, std::move(terms));
}

QExp delta_series(const SeriesContext& ctx) { return eta_series(ctx).pow(24); }

namespace {

long long divisor_power_sum(int k, long long n) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= d;
    s += p;
  }
  return s;
}

}  // namespace

QExp eisenstein(int weight, const SeriesContext& ctx) {
  if (weight != 4 && weight != 6) throw std::invalid_argument("Eisenstein weight must be 4 or 6");
  const long long D = ctx.denominator;
  std::vector<QExp::Term> terms;
  terms.push_back({0, CycloElem(1)});
  const long long c = weight == 4 ? 240 : -504;
  const int k = weight - 1;
  for (long long n = 1; n <= ctx.orders(); ++n)
    terms.push_back({D * n, CycloElem(c * divisor_power_sum(k, n))});
  return QExp::from_terms(ctx, std::move(terms));
}

QExp j_series(const SeriesContext& ctx) {
  QExp e4 = eisenstein(4, ctx);
  return e4.pow(3) * delta_series(ctx).inverse();
}

namespace {

QExp eval_series_rec(std::vector<MPoly::Term> terms, int var,
                     const std::array<QExp, 6>& pt, const SeriesContext& ctx) {
  if (terms.empty()) return QExp::zero(ctx);
  if (var == 6) {
    CycloElem c;
    for (auto& [m, x] : terms) c += x;
    return QExp::monomial(ctx, 0, c);
  }
  std::map<int, std::vector<MPoly::Term>> groups;
  for (auto& [m, c] : terms) {
    int k = m.e[var];
    Monomial mm = m;
    mm.e[var] = 0;
    groups[k].push_back({mm, c});
  }
  int maxk = groups.rbegin()->first;
  QExp res = QExp::zero(ctx);
  for (int k = maxk; k >= 0; --k) {
    if (k != maxk) res = res * pt[var];
    auto it = groups.find(k);
    if (it != groups.end())
      res += eval_series_rec(std::move(it->second), var + 1, pt, ctx);
  }
  return res;
}

}  // namespace

QExp evaluate_poly_on_series(const MPoly& p, const std::array<QExp, 6>& v) {
  const SeriesContext& ctx = v[0].context();
  for (int i = 1; i < 6; ++i)
    if (!(v[i].context() == ctx))
      throw std::invalid_argument("series vector mixes contexts");
  std::vector<MPoly::Term> terms(p.terms().begin(), p.terms().end());
  return eval_series_rec(std::move(terms), 0, v, ctx);
}

QExp evaluate_poly_on_series2(const MPoly& p, const QExp& v1, const QExp& v2) {
  const SeriesContext& ctx = v1.context();
  std::array<QExp, 6> v{v1, v2, QExp::zero(ctx), QExp::zero(ctx), QExp::zero(ctx),
                        QExp::zero(ctx)};
  return evaluate_poly_on_series(p, v);
}

std::array<std::complex<double>, 6> numeric_theta_eval(std::complex<double> z, int terms) {
  static constexpr int kChars[6] = {11, 7, 5, 3, 9, 1};
  static constexpr double kSigns[6] = {1, 1, 1, -1, 1, 1};
  const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
  std::array<std::complex<double>, 6> out{};
  for (int i = 0; i < 6; ++i) {
    const double k = kChars[i];
    std::complex<double> tot = 0.0;
    for (int n = -terms; n <= terms; ++n) {
      double e = k * k / 104.0 + (13.0 * n * n + k * n) / 2.0;
      double sgn = (n % 2 == 0) ? 1.0 : -1.0;
      tot += sgn * std::exp(two_pi_i * z * e);
    }
    out[i] = kSigns[i] * tot;
  }
  return out;
}

Prop32Result verify_prop32_S(std::complex<double> z, double tolerance, int terms) {
  Prop32Result res;
  if (z.imag() <= 0.0) throw std::invalid_argument("z must lie in the upper half plane");
  std::complex<double> w = -1.0 / z;
  // Tail bound: the |n| = terms summand of the slowest-decaying component.
  double im = std::min(z.imag(), w.imag());
  double tail_exp = 2.0 * M_PI * im * (13.0 * terms * terms - 13.0 * terms) / 2.0;
  res.converged = tail_exp > -std::log(tolerance * 1e-3);
  if (!res.converged) return res;

  auto az = numeric_theta_eval(z, terms);
  auto aw = numeric_theta_eval(w, terms);
  static const Generators gens = build_generators();
  std::complex<double> phase = std::exp(std::complex<double>(0.0, M_PI / 4.0));
  std::complex<double> root = std::sqrt(z);  // Im z > 0 puts arg sqrt(z) in (0, pi/2)
  double dev = 0.0;
  for (int i = 0; i < 6; ++i) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < 6; ++j) acc += gens.S.at(i, j).embed() * az[j];
    dev = std::max(dev, std::abs(aw[i] - phase * root * acc));
  }
  res.deviation = dev;
  res.ok = dev < tolerance;
  return res;
}

}  // namespace sl213
