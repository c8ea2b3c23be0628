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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sl213/cyclo.hpp"

namespace sl213 {

/// Shared exponent grid for truncated q-expansions: exponents are
/// numerator/denominator with numerators kept up to `limit`. All series
/// combined in one expression must share the same context.
struct SeriesContext {
  long long denominator = 312;  // lcm(104, 24): order-13 thetas and eta
  long long limit = 312 * 13;   // numerators kept (13 integer q-orders)

  long long orders() const { return limit / denominator; }
  friend bool operator==(const SeriesContext& a, const SeriesContext& b) {
    return a.denominator == b.denominator && a.limit == b.limit;
  }
};

/// Truncated exact series in q with exponents on the context grid. Terms are
/// sorted by numerator with no stored zeros. `upto` is the accuracy bound:
/// every coefficient with numerator <= upto is exact; it shrinks under
/// division and products with negative-valuation factors.
class QExp {
 public:
  using Term = std::pair<long long, CycloElem>;

  explicit QExp(const SeriesContext& ctx) : ctx_(ctx), upto_(ctx.limit) {}

  static QExp zero(const SeriesContext& ctx) { return QExp(ctx); }
  static QExp one(const SeriesContext& ctx) { return monomial(ctx, 0, CycloElem::one()); }
  static QExp monomial(const SeriesContext& ctx, long long numerator, const CycloElem& c);
  static QExp from_terms(const SeriesContext& ctx, std::vector<Term> terms);

  const SeriesContext& context() const { return ctx_; }
  long long upto() const { return upto_; }
  void restrict_upto(long long u) { if (u < upto_) upto_ = u; }
  const std::vector<Term>& series_terms() const { return t_; }

  bool has_terms() const { return !t_.empty(); }
  /// Least stored numerator; throws on an empty series.
  long long valuation() const;
  const CycloElem& leading_coeff() const;
  CycloElem coeff(long long numerator) const;
  /// True when every coefficient has vanishing zeta-components.
  bool is_rational() const;

  QExp operator-() const;
  friend QExp operator+(const QExp& a, const QExp& b);
  friend QExp operator-(const QExp& a, const QExp& b);
  friend QExp operator*(const QExp& a, const QExp& b);
  QExp& operator+=(const QExp& o) { return *this = *this + o; }
  QExp& operator-=(const QExp& o) { return *this = *this - o; }

  QExp scaled(const CycloElem& c) const;
  QExp scaled(const Rational& c) const;
  /// Shift exponents by `numerator` grid units (may be negative).
  QExp shifted(long long numerator) const;
  QExp pow(unsigned k) const;

  /// Inverse of a series with a nonzero leading coefficient. The accuracy
  /// bound drops by twice the valuation. Throws std::domain_error on an
  /// empty series.
  QExp inverse() const;
  friend QExp divide(const QExp& num, const QExp& den) { return num * den.inverse(); }

  /// True when the two series agree on every numerator <= win. Throws
  /// std::logic_error if either accuracy bound does not cover the window.
  bool equal_through(const QExp& o, long long win) const;
  bool is_zero_through(long long win) const;
  /// First numerator <= win where the series differ, if any.
  std::optional<long long> first_difference(const QExp& o, long long win) const;

  /// Unique residue r of the exponents on the 1/modulus grid: every exponent
  /// num/den must equal (r + modulus*Z)/modulus. Returns nullopt when the
  /// exponents leave the grid or hit more than one class, or for an empty
  /// series.
  std::optional<long long> residue_class(long long modulus) const;

  /// "q^{n/d}: coefficient" lines in increasing exponent order; "0" when
  /// there are no terms.
  std::string to_lines() const;

 private:
  SeriesContext ctx_;
  std::vector<Term> t_;
  long long upto_;

  void check_ctx(const QExp& o) const;
};

/// "QEXP v1" cache format: header "QEXP v1 <denominator> <truncation> <nterms>",
/// one line per term (numerator then 12 rationals).
void serialize(const QExp& f, std::ostream& os);
QExp deserialize_qexp(std::istream& is);

/// Renders a grid exponent as "q^0", "q^2", "q^{-1}" or "q^{n/d}" (reduced).
std::string format_exponent(long long numerator, long long denominator);

}  // namespace sl213
