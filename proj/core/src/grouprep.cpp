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

#include "sl213/grouprep.hpp"

#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace sl213 {

Generators build_generators() {
  // Entries of sqrt(13)*S are zeta^a - zeta^b; the table lists (a, b) per cell.
  static constexpr int kPairs[6][6][2] = {
      {{12, 1}, {10, 3}, {4, 9}, {5, 8}, {2, 11}, {6, 7}},
      {{10, 3}, {4, 9}, {12, 1}, {2, 11}, {6, 7}, {5, 8}},
      {{4, 9}, {12, 1}, {10, 3}, {6, 7}, {5, 8}, {2, 11}},
      {{5, 8}, {2, 11}, {6, 7}, {1, 12}, {3, 10}, {9, 4}},
      {{2, 11}, {6, 7}, {5, 8}, {3, 10}, {9, 4}, {1, 12}},
      {{6, 7}, {5, 8}, {2, 11}, {9, 4}, {1, 12}, {3, 10}}};
  Generators g;
  // -1/sqrt(13) = -sqrt(13)/13, exactly.
  CycloElem scalar = gauss_sqrt13().scaled(rat(-1, 13));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CycloElem d = CycloElem::zeta_power(kPairs[i][j][0]) -
                    CycloElem::zeta_power(kPairs[i][j][1]);
      g.S.at(i, j) = d * scalar;
    }
  for (int i = 0; i < 6; ++i) g.T.at(i, i) = CycloElem::zeta_power(kTExponents[i]);
  return g;
}

RelationFacts verify_relations(const Generators& g) {
  RelationFacts f{};
  GMatrix I = GMatrix::identity();
  f.S2_is_minus_I = (g.S * g.S == -I);
  f.T13_is_I = (g.T.pow(13) == I);
  GMatrix st3 = (g.S * g.T).pow(3);
  f.ST3_is_I = (st3 == I);
  f.ST3_is_minus_I = (st3 == -I);
  return f;
}

GroupTable generate_group(const std::vector<GMatrix>& generators, std::size_t cap) {
  GroupTable table;
  std::unordered_set<std::string> seen;
  GMatrix I = GMatrix::identity();
  table.elements.push_back(I);
  seen.insert(I.canonical_string());
  std::size_t next = 0;
  while (next < table.elements.size()) {
    GMatrix cur = table.elements[next++];
    for (const GMatrix& gen : generators) {
      GMatrix prod = cur * gen;
      std::string key = prod.canonical_string();
      if (seen.insert(std::move(key)).second) {
        if (table.elements.size() >= cap) {
          table.capped = true;
          throw std::length_error("group closure exceeded the element cap");
        }
        table.elements.push_back(std::move(prod));
      }
    }
  }
  return table;
}

void dump_group_table(const GroupTable& t, std::ostream& os) {
  os << "GTBL v1 " << t.order() << "\n";
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    os << i;
    const GMatrix& m = t.elements[i];
    for (int r = 0; r < GMatrix::kDim; ++r)
      for (int c = 0; c < GMatrix::kDim; ++c) os << ' ' << m.at(r, c).to_string();
    os << "\n";
  }
}

WordElements build_word_elements(const Generators& g) {
  WordElements w;
  GMatrix Tinv = g.T.pow(12);
  w.P = g.S * Tinv * g.S;
  w.Q = g.S * g.T.pow(3);
  w.H = w.Q.pow(5) * w.P.pow(2) * w.P.pow(2) * w.Q.pow(6) * w.P.pow(8) *
        w.Q.pow(5) * w.P.pow(2) * w.P.pow(3) * w.Q;
  return w;
}

GMatrix classical_H_matrix() {
  GMatrix h;
  auto set = [&](int i, int j, long v) { h.at(i - 1, j - 1) = CycloElem(v); };
  set(1, 6, 1);
  set(2, 4, 1);
  set(3, 5, 1);
  set(4, 3, -1);
  set(5, 1, -1);
  set(6, 2, -1);
  return h;
}

IntMatrix2 lift_word_2x2() {
  IntMatrix2 s{0, -1, 1, 0};
  IntMatrix2 tinv{1, -1, 0, 1};
  IntMatrix2 t{1, 1, 0, 1};
  IntMatrix2 p = s * tinv * s;
  IntMatrix2 q = s * t.pow(3);
  return q.pow(5) * p.pow(2) * p.pow(2) * q.pow(6) * p.pow(8) * q.pow(5) *
         p.pow(2) * p.pow(3) * q;
}

IntMatrix2 expected_lift_matrix() {
  return IntMatrix2{Int(4428249), Int(-10547030), Int(-11594791), Int(27616019)};
}

}  // namespace sl213
