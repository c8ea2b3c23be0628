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

#include "sl213/invariants.hpp"

#include <map>
#include <sstream>

namespace sl213 {

namespace {

// c * z_i * z_j
MPoly t2(long c, int i, int j) {
  Monomial m;
  m.e[i - 1] += 1;
  m.e[j - 1] += 1;
  return MPoly::term(m, CycloElem(c));
}

// c * z_i * z_j * z_k
MPoly t3(long c, int i, int j, int k) {
  Monomial m;
  m.e[i - 1] += 1;
  m.e[j - 1] += 1;
  m.e[k - 1] += 1;
  return MPoly::term(m, CycloElem(c));
}

}  // namespace

FormFamily build_forms() {
  FormFamily f;
  f.A[0] = t2(1, 1, 4) + t2(1, 2, 5) + t2(1, 3, 6);
  f.A[1] = t2(1, 1, 1) + t2(-2, 3, 4);
  f.A[2] = t2(-1, 5, 5) + t2(-2, 2, 4);
  f.A[3] = t2(1, 2, 2) + t2(-2, 1, 5);
  f.A[4] = t2(1, 3, 3) + t2(-2, 2, 6);
  f.A[5] = t2(-1, 4, 4) + t2(-2, 1, 6);
  f.A[6] = t2(-1, 6, 6) + t2(-2, 3, 5);

  f.D[0] = t3(1, 1, 2, 3);
  f.D[1] = t3(2, 2, 3, 3) + t3(1, 2, 2, 6) + t3(-1, 4, 4, 5) + t3(1, 1, 5, 6);
  f.D[2] = t3(-1, 6, 6, 6) + t3(1, 2, 2, 4) + t3(-2, 2, 5, 5) + t3(1, 1, 4, 5) +
           t3(3, 3, 5, 6);
  f.D[3] = t3(2, 1, 2, 2) + t3(1, 1, 1, 5) + t3(-1, 4, 6, 6) + t3(1, 3, 4, 5);
  f.D[4] = t3(-1, 2, 2, 3) + t3(1, 1, 6, 6) + t3(-2, 4, 4, 6) + t3(-1, 1, 3, 5);
  f.D[5] = t3(-1, 4, 4, 4) + t3(1, 3, 3, 5) + t3(-2, 3, 6, 6) + t3(1, 2, 5, 6) +
           t3(3, 1, 4, 6);
  f.D[6] = t3(-1, 5, 5, 5) + t3(1, 1, 1, 6) + t3(-2, 1, 4, 4) + t3(1, 3, 4, 6) +
           t3(3, 2, 4, 5);
  f.D[7] = t3(-1, 2, 2, 2) + t3(1, 3, 4, 4) + t3(-1, 1, 3, 6) + t3(-3, 1, 2, 5) +
           t3(2, 1, 1, 4);
  f.D[8] = t3(-1, 1, 1, 1) + t3(1, 2, 6, 6) + t3(-1, 2, 3, 5) + t3(-3, 1, 3, 4) +
           t3(2, 3, 3, 6);
  f.D[9] = t3(2, 1, 1, 3) + t3(1, 3, 3, 4) + t3(-1, 5, 5, 6) + t3(1, 2, 4, 6);
  f.D[10] = t3(-1, 1, 3, 3) + t3(1, 2, 4, 4) + t3(-2, 4, 5, 5) + t3(-1, 1, 2, 6);
  f.D[11] = t3(-1, 3, 3, 3) + t3(1, 1, 5, 5) + t3(-1, 1, 2, 4) + t3(-3, 2, 3, 6) +
            t3(2, 2, 2, 5);
  f.D[12] = t3(-1, 1, 1, 2) + t3(1, 3, 5, 5) + t3(-2, 5, 6, 6) + t3(-1, 2, 3, 4);
  f.D[kInfIndex] = t3(1, 4, 5, 6);

  // G_k as integer combinations of D-products: (coefficient, i, j) triples,
  // with 13 standing for the infinity member.
  static constexpr int kGTable[13][7][3] = {
      {{1, 0, 0}, {1, 13, 13}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
      {{-1, 7, 7}, {2, 0, 1}, {10, 13, 1}, {2, 2, 12}, {-2, 3, 11}, {-4, 4, 10}, {-2, 9, 5}},
      {{-2, 1, 1}, {-4, 0, 2}, {6, 13, 2}, {-2, 4, 11}, {2, 5, 10}, {-2, 6, 9}, {-2, 7, 8}},
      {{-1, 8, 8}, {2, 0, 3}, {10, 13, 3}, {2, 6, 10}, {-2, 9, 7}, {-4, 12, 4}, {-2, 1, 2}},
      {{-1, 2, 2}, {10, 0, 4}, {-2, 13, 4}, {2, 5, 12}, {-2, 9, 8}, {-4, 1, 3}, {-2, 10, 7}},
      {{-2, 9, 9}, {-4, 0, 5}, {6, 13, 5}, {-2, 10, 8}, {2, 6, 12}, {-2, 2, 3}, {-2, 11, 7}},
      {{-2, 3, 3}, {-4, 0, 6}, {6, 13, 6}, {-2, 12, 7}, {2, 2, 4}, {-2, 5, 1}, {-2, 8, 11}},
      {{-2, 10, 10}, {6, 0, 7}, {4, 13, 7}, {-2, 1, 6}, {-2, 2, 5}, {-2, 8, 12}, {-2, 9, 11}},
      {{-2, 4, 4}, {6, 0, 8}, {4, 13, 8}, {-2, 3, 5}, {-2, 6, 2}, {-2, 11, 10}, {-2, 1, 7}},
      {{-1, 11, 11}, {2, 0, 9}, {10, 13, 9}, {2, 5, 4}, {-2, 1, 8}, {-4, 10, 12}, {-2, 3, 6}},
      {{-1, 5, 5}, {10, 0, 10}, {-2, 13, 10}, {2, 6, 4}, {-2, 3, 7}, {-4, 9, 1}, {-2, 12, 11}},
      {{-2, 12, 12}, {6, 0, 11}, {4, 13, 11}, {-2, 9, 2}, {-2, 5, 6}, {-2, 7, 4}, {-2, 3, 8}},
      {{-1, 6, 6}, {10, 0, 12}, {-2, 13, 12}, {2, 2, 10}, {-2, 1, 11}, {-4, 3, 9}, {-2, 4, 8}}};
  for (int k = 0; k < 13; ++k) {
    MPoly g;
    for (const auto& row : kGTable[k]) {
      if (row[0] == 0) continue;
      g += (f.D[row[1]] * f.D[row[2]]).scaled(rat(row[0]));
    }
    f.G[k] = g;
  }
  return f;
}

FourteenPoints build_fourteen_points(const FormFamily& f) {
  FourteenPoints p;
  for (int nu = 0; nu < 13; ++nu) {
    MPoly phi = f.A[0];
    for (int j = 1; j <= 6; ++j)
      phi += f.A[j].scaled(CycloElem::zeta_power(kPhiWeights[j] * nu));
    MPoly del = f.G[0].scaled(rat(-13));
    for (int k = 1; k < 13; ++k)
      del += f.G[k].scaled(CycloElem::zeta_power(k * nu));
    p.phi[nu] = phi;
    p.w[nu] = phi * phi;
    p.delta[nu] = del;
  }
  p.phi[kInfIndex] = f.A[0].scaled(gauss_sqrt13());
  p.w[kInfIndex] = (f.A[0] * f.A[0]).scaled(rat(13));
  p.delta[kInfIndex] =
      (f.D[0] * f.D[0] + f.D[kInfIndex] * f.D[kInfIndex]).scaled(rat(169));
  return p;
}

PointRing build_point_ring(const FormFamily& f) {
  PointRing r;
  r.phi_y[0] = f.A[0];
  for (int j = 1; j <= 6; ++j) r.phi_y[kPhiWeights[j]] += f.A[j];
  r.W = cyclic_mul(r.phi_y, r.phi_y, MPoly::zero());
  r.Del[0] = f.G[0].scaled(rat(-13));
  for (int k = 1; k < 13; ++k) r.Del[k] = f.G[k];
  r.w_inf = (f.A[0] * f.A[0]).scaled(rat(13));
  r.delta_inf = (f.D[0] * f.D[0] + f.D[kInfIndex] * f.D[kInfIndex]).scaled(rat(169));
  return r;
}

namespace {

enum RadId { R0, R1, R2, R3, R4, RINF };

struct RowEntry {
  RadId rad;
  int sign;
  int weight;  // zeta^{weight * nu}
};

// Coefficient of D_idx in the transformed rows, idx order 0..12 then inf.
constexpr RowEntry kRow0[14] = {
    {R0, 1, 0},  {R1, 1, 1},  {R2, 1, 2},  {R1, 1, 3},  {R3, 1, 4},
    {R2, 1, 5},  {R2, 1, 6},  {R4, 1, 7},  {R4, 1, 8},  {R1, 1, 9},
    {R3, 1, 10}, {R4, 1, 11}, {R3, 1, 12}, {RINF, 1, 0}};
constexpr RowEntry kRowInf[14] = {
    {RINF, 1, 0}, {R3, -1, 1},  {R4, -1, 2},  {R3, -1, 3}, {R1, 1, 4},
    {R4, -1, 5},  {R4, -1, 6},  {R2, 1, 7},   {R2, 1, 8},  {R3, -1, 9},
    {R1, 1, 10},  {R2, 1, 11},  {R1, 1, 12},  {R0, -1, 0}};

const CycloElem& pick(const Radicals& r, RadId id) {
  switch (id) {
    case R0: return r.r0;
    case R1: return r.r1;
    case R2: return r.r2;
    case R3: return r.r3;
    case R4: return r.r4;
    default: return r.rinf;
  }
}

MPoly d_row_rhs(int nu, bool inf_row, const FormFamily& f, const Radicals& r) {
  const RowEntry* row = inf_row ? kRowInf : kRow0;
  MPoly rhs;
  for (int idx = 0; idx < 14; ++idx) {
    CycloElem coeff = pick(r, row[idx].rad);
    if (row[idx].sign < 0) coeff = -coeff;
    coeff = coeff * CycloElem::zeta_power(row[idx].weight * nu);
    rhs += f.D[idx].scaled(coeff);
  }
  return rhs;
}

std::string first_term_witness(const MPoly& diff) {
  if (diff.is_zero()) return "exact";
  const auto& t = diff.terms().front();
  std::ostringstream os;
  os << "first deviation at monomial exponents (";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << int(t.first.e[i]);
  os << ") coefficient " << t.second.pretty();
  return os.str();
}

}  // namespace

TransformCheck verify_A_transformation(int nu, const Generators& g, const FormFamily& f,
                                       const FourteenPoints& pts) {
  GMatrix M = g.S * g.T.pow(static_cast<unsigned>(nu));
  MPoly lhs = substitute_linear(f.A[0], M).scaled(gauss_sqrt13());
  MPoly diff = lhs - pts.phi[nu];
  return {diff.is_zero(), first_term_witness(diff)};
}

TransformCheck verify_D_transformation(int nu, bool inf_row, const Generators& g,
                                       const FormFamily& f, const Radicals& r) {
  GMatrix M = g.S * g.T.pow(static_cast<unsigned>(nu));
  const MPoly& src = inf_row ? f.D[kInfIndex] : f.D[0];
  MPoly lhs = substitute_linear(src, M).scaled(gauss_sqrt13().scaled(rat(-13)));
  MPoly diff = lhs - d_row_rhs(nu, inf_row, f, r);
  return {diff.is_zero(), first_term_witness(diff)};
}

TransformCheck verify_G_transformation(int nu, const Generators& g, const FormFamily& f,
                                       const FourteenPoints& pts) {
  GMatrix M = g.S * g.T.pow(static_cast<unsigned>(nu));
  MPoly lhs = substitute_linear(f.G[0], M).scaled(rat(169));
  MPoly diff = lhs - pts.delta[nu];
  return {diff.is_zero(), first_term_witness(diff)};
}

RadicalResolution resolve_radical_signs(const FieldConstants& fc, const FormFamily& f,
                                        const Generators& g) {
  RadicalResolution res;
  for (int s2 : {1, -1}) {
    for (int s4 : {1, -1}) {
      Radicals cand{fc.r0, fc.r1, s2 == 1 ? fc.r2 : -fc.r2, fc.r3,
                    s4 == 1 ? fc.r4 : -fc.r4, fc.rinf};
      if (verify_D_transformation(0, false, g, f, cand).ok &&
          verify_D_transformation(0, true, g, f, cand).ok) {
        if (res.ok) {
          res.ok = false;
          res.note = "sign assignment is not unique";
          return res;
        }
        res.ok = true;
        res.radicals = cand;
        res.sign2 = s2;
        res.sign4 = s4;
      }
    }
  }
  if (!res.ok) {
    res.note = "no (r2, r4) sign assignment satisfies the cubic rows at nu=0";
    return res;
  }
  std::ostringstream os;
  os << "signs (" << (res.sign2 > 0 ? "+" : "-") << ", " << (res.sign4 > 0 ? "+" : "-")
     << ") on the quartic branches; embeddings r2=" << embed_decimal(res.radicals.r2, 12).im
     << "i, r4=" << embed_decimal(res.radicals.r4, 12).im << "i";
  res.note = os.str();
  return res;
}

std::string PointPermutation::cycle_notation() const {
  std::array<bool, 14> used{};
  std::ostringstream os;
  auto label = [](int i) { return i == kInfIndex ? std::string("inf") : std::to_string(i); };
  for (int i = 0; i < 14; ++i) {
    if (used[i]) continue;
    if (sigma[i] == i) {
      used[i] = true;
      continue;
    }
    os << "(" << label(i);
    used[i] = true;
    for (int j = sigma[i]; j != i; j = sigma[j]) {
      os << " " << label(j);
      used[j] = true;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "identity" : s;
}

PointPermutation compute_group_permutation(const GMatrix& g, const FourteenPoints& pts) {
  PointPermutation p;
  std::array<bool, 14> taken{};
  for (int idx = 0; idx < 14; ++idx) {
    MPoly img = substitute_linear(pts.phi[idx], g);
    bool found = false;
    for (int jdx = 0; jdx < 14 && !found; ++jdx) {
      if (taken[jdx]) continue;
      if (img == pts.phi[jdx]) {
        p.sigma[idx] = jdx;
        p.phi_sign[idx] = 1;
        found = true;
      } else if (img == -pts.phi[jdx]) {
        p.sigma[idx] = jdx;
        p.phi_sign[idx] = -1;
        found = true;
      }
    }
    if (!found) {
      p.ok = false;
      p.witness = "phi image at index " + std::to_string(idx) +
                  " matches no member of the system (invariance would fail)";
      return p;
    }
    taken[p.sigma[idx]] = true;
    // w follows from the phi match; certify delta independently.
    MPoly dimg = substitute_linear(pts.delta[idx], g);
    if (!(dimg == pts.delta[p.sigma[idx]])) {
      p.ok = false;
      p.witness = "delta image at index " + std::to_string(idx) +
                  " does not follow the phi permutation";
      return p;
    }
    MPoly wimg = img * img;
    if (!(wimg == pts.w[p.sigma[idx]])) {
      p.ok = false;
      p.witness = "w image inconsistent at index " + std::to_string(idx);
      return p;
    }
  }
  p.ok = true;
  p.witness = p.cycle_notation();
  return p;
}

namespace {

struct NormEntry {
  int m, n;
  long stated;   // constant c in 1/(13*c), with its sign
  long derived;  // the value this engine re-derives
};

// Families without a tabulated constant are used unnormalized.
constexpr NormEntry kNorms[] = {
    {3, 0, -30, -30},      {0, 2, -52, -52},       {5, 0, 25, 25},
    {2, 2, 26, 26},        {0, 5, -1315, -1315},   {3, 3, -27, -96},
    {6, 1, -285, -285},    {3, 1, 2, 2},           {0, 3, 6, 6},
    {8, 0, -1840, -1840},  {5, 2, -2064, -1954},   {2, 4, -680, -692},
    {0, 7, 226842, 226842},{3, 5, 634, 5752},      {6, 3, 10656, 9348},
    {9, 1, 39134, 23816},  {11, 0, 146905, 146905}};

Rational norm_from_constant(long c) {
  return c < 0 ? rat(-1, -13 * c) : rat(1, 13 * c);
}

}  // namespace

Rational stated_normalization(int m, int n) {
  for (const auto& e : kNorms)
    if (e.m == m && e.n == n) return norm_from_constant(e.stated);
  return rat(1);
}

Rational derived_normalization(int m, int n) {
  for (const auto& e : kNorms)
    if (e.m == m && e.n == n) return norm_from_constant(e.derived);
  return rat(1);
}

SymbolicInvariantBuilder::SymbolicInvariantBuilder(const FormFamily& forms,
                                                   int degree_budget)
    : ring_(build_point_ring(forms)), budget_(degree_budget) {
  CyclicRing13<MPoly> unit(MPoly::zero());
  unit[0] = MPoly::constant(rat(1));
  wpow_.push_back(unit);
  dpow_.push_back(unit);
  winf_pow_.push_back(MPoly::constant(rat(1)));
  dinf_pow_.push_back(MPoly::constant(rat(1)));
}

const CyclicRing13<MPoly>& SymbolicInvariantBuilder::wpower(int m) {
  while (static_cast<int>(wpow_.size()) <= m)
    wpow_.push_back(cyclic_mul(wpow_.back(), ring_.W, MPoly::zero()));
  return wpow_[m];
}

const CyclicRing13<MPoly>& SymbolicInvariantBuilder::dpower(int n) {
  while (static_cast<int>(dpow_.size()) <= n)
    dpow_.push_back(cyclic_mul(dpow_.back(), ring_.Del, MPoly::zero()));
  return dpow_[n];
}

MPoly SymbolicInvariantBuilder::phi_unnormalized(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative power-sum exponent");
  if (4 * m + 6 * n > budget_)
    throw BudgetError("degree " + std::to_string(4 * m + 6 * n) +
                      " exceeds the symbolic degree budget " + std::to_string(budget_));
  MPoly core;
  if (n == 0) {
    core = wpower(m)[0];
  } else if (m == 0) {
    core = dpower(n)[0];
  } else {
    core = cyclic_component0(wpower(m), dpower(n), MPoly::zero());
  }
  while (static_cast<int>(winf_pow_.size()) <= m)
    winf_pow_.push_back(winf_pow_.back() * ring_.w_inf);
  while (static_cast<int>(dinf_pow_.size()) <= n)
    dinf_pow_.push_back(dinf_pow_.back() * ring_.delta_inf);
  return core.scaled(rat(13)) + winf_pow_[m] * dinf_pow_[n];
}

MPoly SymbolicInvariantBuilder::phi(int m, int n, const Rational& norm) {
  return phi_unnormalized(m, n).scaled(norm);
}

CycloElem invariant_value_at(int m, int n, const std::array<CycloElem, 6>& x,
                             const FormFamily& forms) {
  std::array<CycloElem, 7> av;
  for (int j = 0; j < 7; ++j) av[j] = evaluate(forms.A[j], x);
  std::array<CycloElem, 13> gv;
  for (int k = 0; k < 13; ++k) gv[k] = evaluate(forms.G[k], x);
  CycloElem d0 = evaluate(forms.D[0], x);
  CycloElem dinf = evaluate(forms.D[kInfIndex], x);

  auto powc = [](CycloElem base, int e) {
    CycloElem r = CycloElem::one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };

  CycloElem total;
  for (int nu = 0; nu < 13; ++nu) {
    CycloElem phi = av[0];
    for (int j = 1; j <= 6; ++j)
      phi += av[j] * CycloElem::zeta_power(kPhiWeights[j] * nu);
    CycloElem w = phi * phi;
    CycloElem del = gv[0].scaled(rat(-13));
    for (int k = 1; k < 13; ++k) del += gv[k] * CycloElem::zeta_power(k * nu);
    total += powc(w, m) * powc(del, n);
  }
  CycloElem w_inf = (av[0] * av[0]).scaled(rat(13));
  CycloElem d_inf = (d0 * d0 + dinf * dinf).scaled(rat(169));
  total += powc(w_inf, m) * powc(d_inf, n);
  return total;
}

TransformCheck verify_invariance_symbolic(const MPoly& p, const Generators& g) {
  MPoly under_t = substitute_linear(p, g.T);
  if (!(under_t == p))
    return {false, "not T-invariant: " + first_term_witness(under_t - p)};
  MPoly under_s = substitute_linear(p, g.S);
  if (!(under_s == p))
    return {false, "not S-invariant: " + first_term_witness(under_s - p)};
  return {true, "exact under S and T"};
}

TransformCheck verify_invariance_points(int m, int n, const FormFamily& forms,
                                        const Generators& g, std::mt19937_64& rng,
                                        int points) {
  for (int t = 0; t < points; ++t) {
    std::array<CycloElem, 6> x = draw_point(rng);
    CycloElem base = invariant_value_at(m, n, x, forms);
    for (const GMatrix* gen : {&g.S, &g.T}) {
      CycloElem moved = invariant_value_at(m, n, gen->apply(x), forms);
      if (!(moved == base)) {
        std::ostringstream os;
        os << "value changed along " << (gen == &g.S ? "S" : "T") << " at sample " << t;
        return {false, os.str()};
      }
    }
  }
  return {true, std::to_string(points) + " exact orbit samples under S and T"};
}

E8Params e8_params(const std::vector<Rational>& v) {
  if (v.size() != 4)
    throw std::invalid_argument("the degree-12/20/30 family takes 4 parameters");
  return {v[0], v[1], v[2], v[3]};
}

QE20Params qe20_params(const std::vector<Rational>& v) {
  if (v.size() != 6)
    throw std::invalid_argument("the degree-12/32/42/44 family takes 6 parameters");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

long draw_int(std::mt19937_64& rng) { return static_cast<long>(rng() % 19) - 9; }

Rational draw_rational(std::mt19937_64& rng) {
  long num = draw_int(rng);
  long den = static_cast<long>(rng() % 9) + 1;
  return rat(num, den);
}

std::array<CycloElem, 6> draw_point(std::mt19937_64& rng) {
  std::array<CycloElem, 6> x;
  for (auto& c : x) c = CycloElem(draw_int(rng));
  return x;
}

}  // namespace sl213
