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

#include "sl213/mpoly.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sl213 {

namespace {

void sort_and_prune(std::vector<MPoly::Term>& t) {
  std::sort(t.begin(), t.end(), [](const MPoly::Term& a, const MPoly::Term& b) {
    return a.first.key() < b.first.key();
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Monomial m = t[i].first;
    CycloElem c = t[i].second;
    std::size_t j = i + 1;
    while (j < t.size() && t[j].first == m) {
      c += t[j].second;
      ++j;
    }
    if (!c.is_zero()) t[out++] = {m, c};
    i = j;
  }
  t.resize(out);
}

}  // namespace

void MPoly::recompute_degree() {
  deg_ = t_.empty() ? 0 : t_.back().first.degree();
}

MPoly MPoly::constant(const CycloElem& c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back({Monomial{}, c});
  p.recompute_degree();
  return p;
}

MPoly MPoly::constant(const Rational& c) {
  CycloElem e;
  e[0] = c;
  return constant(e);
}

MPoly MPoly::variable(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("variable index must be 1..6");
  Monomial m;
  m.e[i - 1] = 1;
  return term(m, CycloElem::one());
}

MPoly MPoly::term(const Monomial& m, const CycloElem& c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back({m, c});
  p.recompute_degree();
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.t_ = std::move(terms);
  sort_and_prune(p.t_);
  p.recompute_degree();
  return p;
}

CycloElem MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m.key(),
                             [](const Term& t, std::uint64_t k) { return t.first.key() < k; });
  if (it != t_.end() && it->first == m) return it->second;
  return CycloElem::zero();
}

bool MPoly::is_rational() const {
  for (const auto& [m, c] : t_)
    if (!c.is_rational()) return false;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    std::uint64_t ka = a.t_[i].first.key(), kb = b.t_[j].first.key();
    if (ka < kb) {
      r.t_.push_back(a.t_[i++]);
    } else if (kb < ka) {
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
  r.recompute_degree();
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly::zero();
  std::unordered_map<std::uint64_t, CycloElem> acc;
  acc.reserve(a.t_.size() * 2 + b.t_.size());
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      Monomial m = ma * mb;
      acc[m.key()] += ca * cb;
    }
  }
  std::vector<MPoly::Term> t;
  t.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) t.push_back({Monomial::from_key(k), std::move(c)});
  }
  return MPoly::from_terms(std::move(t));
}

MPoly MPoly::scaled(const CycloElem& c) const {
  if (c.is_zero()) return MPoly::zero();
  if (c.is_rational()) return scaled(c.rational_part());
  MPoly r;
  r.t_.reserve(t_.size());
  for (const auto& [m, x] : t_) {
    CycloElem y = x * c;
    if (!y.is_zero()) r.t_.push_back({m, y});
  }
  r.recompute_degree();
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c == 0) return MPoly::zero();
  MPoly r = *this;
  for (auto& [m, x] : r.t_) x.scale(c);
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r = MPoly::constant(CycloElem::one());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string MPoly::summary() const {
  std::ostringstream os;
  os << "poly(deg=" << deg_ << ", terms=" << t_.size() << ")";
  return os.str();
}

namespace {

// Horner cascade over the variables: group the (sorted) terms by the exponent
// of z_var, recurse on the groups, then fold with the image linear form.
MPoly subst_rec(std::vector<MPoly::Term> terms, int var,
                const std::array<MPoly, 6>& forms) {
  if (terms.empty()) return MPoly::zero();
  if (var == 6) {
    CycloElem c;
    for (auto& [m, x] : terms) c += x;
    return MPoly::constant(c);
  }
  std::map<int, std::vector<MPoly::Term>> groups;
  for (auto& [m, c] : terms) {
    int k = m.e[var];
    Monomial mm = m;
    mm.e[var] = 0;
    groups[k].push_back({mm, c});
  }
  int maxk = groups.rbegin()->first;
  MPoly res;
  for (int k = maxk; k >= 0; --k) {
    if (k != maxk) res = res * forms[var];
    auto it = groups.find(k);
    if (it != groups.end()) res += subst_rec(std::move(it->second), var + 1, forms);
  }
  return res;
}

CycloElem eval_rec(std::vector<MPoly::Term> terms, int var,
                   const std::array<CycloElem, 6>& pt) {
  if (terms.empty()) return CycloElem::zero();
  if (var == 6) {
    CycloElem c;
    for (auto& [m, x] : terms) c += x;
    return c;
  }
  std::map<int, std::vector<MPoly::Term>> groups;
  for (auto& [m, c] : terms) {
    int k = m.e[var];
    Monomial mm = m;
    mm.e[var] = 0;
    groups[k].push_back({mm, c});
  }
  int maxk = groups.rbegin()->first;
  CycloElem res;
  for (int k = maxk; k >= 0; --k) {
    if (k != maxk) res = res * pt[var];
    auto it = groups.find(k);
    if (it != groups.end()) res += eval_rec(std::move(it->second), var + 1, pt);
  }
  return res;
}

}  // namespace

MPoly substitute_linear(const MPoly& p, const GMatrix& M) {
  std::array<MPoly, 6> forms;
  for (int i = 0; i < 6; ++i) {
    std::vector<MPoly::Term> t;
    for (int j = 0; j < 6; ++j) {
      if (M.at(i, j).is_zero()) continue;
      Monomial m;
      m.e[j] = 1;
      t.push_back({m, M.at(i, j)});
    }
    forms[i] = MPoly::from_terms(std::move(t));
  }
  std::vector<MPoly::Term> terms(p.t_.begin(), p.t_.end());
  return subst_rec(std::move(terms), 0, forms);
}

CycloElem evaluate(const MPoly& p, const std::array<CycloElem, 6>& point) {
  std::vector<MPoly::Term> terms(p.terms().begin(), p.terms().end());
  return eval_rec(std::move(terms), 0, point);
}

MPoly derivative(const MPoly& p, int var) {
  if (var < 1 || var > 6) throw std::invalid_argument("variable index must be 1..6");
  std::vector<MPoly::Term> t;
  for (const auto& [m, c] : p.terms()) {
    int e = m.e[var - 1];
    if (e == 0) continue;
    Monomial mm = m;
    mm.e[var - 1] = static_cast<std::uint8_t>(e - 1);
    t.push_back({mm, c.scaled(rat(e))});
  }
  return MPoly::from_terms(std::move(t));
}

void serialize(const MPoly& p, std::ostream& os) {
  os << "MPOLY v1 6 " << p.nterms() << "\n";
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < 6; ++i) os << static_cast<int>(m.e[i]) << ' ';
    os << c.to_string() << "\n";
  }
}

MPoly deserialize_mpoly(std::istream& is) {
  std::string magic, version;
  int nvars = 0;
  std::size_t nterms = 0;
  if (!(is >> magic >> version >> nvars >> nterms) || magic != "MPOLY" || version != "v1")
    throw std::invalid_argument("bad MPOLY header");
  if (nvars != 6) throw std::invalid_argument("MPOLY v1 expects 6 variables");
  std::vector<MPoly::Term> terms;
  terms.reserve(nterms);
  for (std::size_t t = 0; t < nterms; ++t) {
    Monomial m;
    for (int i = 0; i < 6; ++i) {
      int e;
      if (!(is >> e) || e < 0 || e > 255) throw std::invalid_argument("bad exponent in MPOLY");
      m.e[i] = static_cast<std::uint8_t>(e);
    }
    CycloElem c;
    for (int i = 0; i < CycloElem::kDegree; ++i) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("truncated MPOLY term");
      c[i] = rat_from_string(tok);
    }
    if (c.is_zero()) throw std::invalid_argument("zero coefficient stored in MPOLY");
    terms.push_back({m, c});
  }
  MPoly p = MPoly::from_terms(std::move(terms));
  if (p.nterms() != nterms) throw std::invalid_argument("duplicate monomials in MPOLY");
  return p;
}

}  // namespace sl213
