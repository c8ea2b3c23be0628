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

#include "sl213/qexp.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sl213 {

void QExp::check_ctx(const QExp& o) const {
  if (!(ctx_ == o.ctx_))
    throw std::invalid_argument("series from different contexts combined");
}

QExp QExp::monomial(const SeriesContext& ctx, long long numerator, const CycloElem& c) {
  QExp f(ctx);
  if (!c.is_zero() && numerator <= ctx.limit) f.t_.push_back({numerator, c});
  return f;
}

QExp QExp::from_terms(const SeriesContext& ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  QExp f(ctx);
  for (auto& [n, c] : terms) {
    if (n > ctx.limit || c.is_zero()) continue;
    if (!f.t_.empty() && f.t_.back().first == n) {
      f.t_.back().second += c;
      if (f.t_.back().second.is_zero()) f.t_.pop_back();
    } else {
      f.t_.push_back({n, c});
    }
  }
  return f;
}

long long QExp::valuation() const {
  if (t_.empty()) throw std::domain_error("valuation of an empty series");
  return t_.front().first;
}

const CycloElem& QExp::leading_coeff() const {
  if (t_.empty()) throw std::domain_error("leading coefficient of an empty series");
  return t_.front().second;
}

CycloElem QExp::coeff(long long numerator) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), numerator,
                             [](const Term& t, long long n) { return t.first < n; });
  if (it != t_.end() && it->first == numerator) return it->second;
  return CycloElem::zero();
}

bool QExp::is_rational() const {
  for (const auto& [n, c] : t_)
    if (!c.is_rational()) return false;
  return true;
}

QExp QExp::operator-() const {
  QExp r = *this;
  for (auto& [n, c] : r.t_) c = -c;
  return r;
}

QExp operator+(const QExp& a, const QExp& b) {
  a.check_ctx(b);
  QExp r(a.ctx_);
  r.upto_ = std::min(a.upto_, b.upto_);
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    if (a.t_[i].first < b.t_[j].first) {
      r.t_.push_back(a.t_[i++]);
    } else if (b.t_[j].first < a.t_[i].first) {
      r.t_.push_back(b.t_[j++]);
    } else {
      CycloElem c = a.t_[i].second + b.t_[j].second;
      if (!c.is_zero()) r.t_.push_back({a.t_[i].first, c});
      ++i;
      ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

QExp operator-(const QExp& a, const QExp& b) { return a + (-b); }

QExp operator*(const QExp& a, const QExp& b) {
  a.check_ctx(b);
  QExp r(a.ctx_);
  // The product coefficient at n needs a through n - val(b) and b through
  // n - val(a); empty factors contribute no constraint beyond their own bound.
  long long va = a.t_.empty() ? a.upto_ + 1 : a.t_.front().first;
  long long vb = b.t_.empty() ? b.upto_ + 1 : b.t_.front().first;
  r.upto_ = std::min({a.upto_ + vb, b.upto_ + va, a.ctx_.limit});
  if (a.t_.empty() || b.t_.empty()) return r;
  std::map<long long, CycloElem> acc;
  for (const auto& [na, ca] : a.t_) {
    for (const auto& [nb, cb] : b.t_) {
      long long n = na + nb;
      if (n > a.ctx_.limit) break;  // b terms sorted ascending
      acc[n] += ca * cb;
    }
  }
  for (auto& [n, c] : acc)
    if (!c.is_zero()) r.t_.push_back({n, std::move(c)});
  return r;
}

QExp QExp::scaled(const CycloElem& c) const {
  if (c.is_zero()) {
    QExp r(ctx_);
    r.upto_ = upto_;
    return r;
  }
  QExp r(ctx_);
  r.upto_ = upto_;
  r.t_.reserve(t_.size());
  for (const auto& [n, x] : t_) {
    CycloElem y = x * c;
    if (!y.is_zero()) r.t_.push_back({n, y});
  }
  return r;
}

QExp QExp::scaled(const Rational& c) const {
  CycloElem e;
  e[0] = c;
  return scaled(e);
}

QExp QExp::shifted(long long numerator) const {
  QExp r(ctx_);
  r.upto_ = std::min(upto_ + numerator, ctx_.limit);
  for (const auto& [n, c] : t_) {
    long long m = n + numerator;
    if (m <= ctx_.limit) r.t_.push_back({m, c});
  }
  return r;
}

QExp QExp::pow(unsigned k) const {
  QExp r = QExp::one(ctx_);
  QExp base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

QExp QExp::inverse() const {
  if (t_.empty()) throw std::domain_error("inversion of a series with zero leading term");
  const long long v = t_.front().first;
  const CycloElem cinv = t_.front().second.inverse();
  // Write f = q^v * (c0 + tail) and invert the unit part: w0 = 1/c0 and
  // w_n = -(1/c0) * sum_{k>=1} u_k w_{n-k}. Since tail offsets are positive,
  // finalizing pending convolution entries in ascending order is exact.
  const long long window = upto_ - 2 * v;
  QExp r(ctx_);
  r.upto_ = std::min(window, ctx_.limit);
  std::vector<Term> tail;
  for (std::size_t i = 1; i < t_.size(); ++i) tail.push_back({t_[i].first - v, t_[i].second});
  const long long wmax = std::min(window, ctx_.limit) + v;  // unit-part exponent bound
  std::vector<Term> w{{0, cinv}};
  std::map<long long, CycloElem> conv;
  auto push = [&](long long n, const CycloElem& cw) {
    for (const auto& [nt, ct] : tail) {
      long long m = n + nt;
      if (m <= wmax) conv[m] += ct * cw;
    }
  };
  push(0, cinv);
  while (!conv.empty()) {
    auto it = conv.begin();
    long long n = it->first;
    CycloElem c = -(it->second * cinv);
    conv.erase(it);
    if (c.is_zero()) continue;
    w.push_back({n, c});
    push(n, c);
  }
  for (const auto& [n, c] : w) {
    long long m = n - v;
    if (m <= r.upto_ && m <= ctx_.limit) r.t_.push_back({m, c});
  }
  return r;
}

bool QExp::equal_through(const QExp& o, long long win) const {
  return !first_difference(o, win).has_value();
}

bool QExp::is_zero_through(long long win) const {
  if (upto_ < win)
    throw std::logic_error("accuracy bound does not cover the comparison window");
  for (const auto& [n, c] : t_)
    if (n <= win && !c.is_zero()) return false;
  return true;
}

std::optional<long long> QExp::first_difference(const QExp& o, long long win) const {
  check_ctx(o);
  if (upto_ < win || o.upto_ < win)
    throw std::logic_error("accuracy bound does not cover the comparison window");
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    long long na = i < t_.size() ? t_[i].first : win + 1;
    long long nb = j < o.t_.size() ? o.t_[j].first : win + 1;
    long long n = std::min(na, nb);
    if (n > win) break;
    CycloElem ca = na == n ? t_[i].second : CycloElem::zero();
    CycloElem cb = nb == n ? o.t_[j].second : CycloElem::zero();
    if (!(ca == cb)) return n;
    if (na == n) ++i;
    if (nb == n) ++j;
  }
  return std::nullopt;
}

std::optional<long long> QExp::residue_class(long long modulus) const {
  if (t_.empty() || modulus <= 0) return std::nullopt;
  std::optional<long long> r;
  for (const auto& [n, c] : t_) {
    long long scaled_num = n * modulus;
    if (scaled_num % ctx_.denominator != 0) return std::nullopt;
    long long cls = (scaled_num / ctx_.denominator) % modulus;
    if (cls < 0) cls += modulus;
    if (r && *r != cls) return std::nullopt;
    r = cls;
  }
  return r;
}

std::string format_exponent(long long numerator, long long denominator) {
  long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
  if (g == 0) g = 1;
  long long n = numerator / g, d = denominator / g;
  if (d == 1) {
    if (n < 0) return "q^{" + std::to_string(n) + "}";
    return "q^" + std::to_string(n);
  }
  return "q^{" + std::to_string(n) + "/" + std::to_string(d) + "}";
}

std::string QExp::to_lines() const {
  if (t_.empty()) return "0\n";
  std::string out;
  for (const auto& [n, c] : t_) {
    out += format_exponent(n, ctx_.denominator);
    out += ": ";
    out += c.is_rational() ? rat_to_string(c.rational_part()) : c.pretty();
    out += "\n";
  }
  return out;
}

void serialize(const QExp& f, std::ostream& os) {
  os << "QEXP v1 " << f.context().denominator << ' ' << f.context().limit << ' '
     << f.series_terms().size() << "\n";
  for (const auto& [n, c] : f.series_terms()) os << n << ' ' << c.to_string() << "\n";
}

QExp deserialize_qexp(std::istream& is) {
  std::string magic, version;
  long long den = 0, limit = 0;
  std::size_t nterms = 0;
  if (!(is >> magic >> version >> den >> limit >> nterms) || magic != "QEXP" ||
      version != "v1")
    throw std::invalid_argument("bad QEXP header");
  if (den <= 0 || limit < 0) throw std::invalid_argument("bad QEXP context");
  SeriesContext ctx{den, limit};
  std::vector<QExp::Term> terms;
  terms.reserve(nterms);
  for (std::size_t t = 0; t < nterms; ++t) {
    long long n;
    if (!(is >> n)) throw std::invalid_argument("truncated QEXP");
    CycloElem c;
    for (int i = 0; i < CycloElem::kDegree; ++i) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("truncated QEXP term");
      c[i] = rat_from_string(tok);
    }
    if (c.is_zero()) throw std::invalid_argument("zero coefficient stored in QEXP");
    terms.push_back({n, c});
  }
  QExp f = QExp::from_terms(ctx, std::move(terms));
  if (f.series_terms().size() != nterms)
    throw std::invalid_argument("duplicate exponents in QEXP");
  return f;
}

}  // namespace sl213
