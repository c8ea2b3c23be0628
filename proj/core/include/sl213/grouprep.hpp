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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sl213/gmatrix.hpp"

namespace sl213 {

/// The generators of the six-dimensional representation: S symmetric with
/// scalar -1/sqrt(13) (realized exactly as -sqrt(13)/13) and T diagonal with
/// zeta exponents (7, 11, 8, 6, 2, 5).
struct Generators {
  GMatrix S, T;
};

Generators build_generators();

/// The T-eigenvalue exponents, in diagonal order.
constexpr int kTExponents[6] = {7, 11, 8, 6, 2, 5};

/// Exact truth values for the generator relations, with the computed
/// alternatives when a claimed relation fails only by a central sign.
struct RelationFacts {
  bool S2_is_minus_I;
  bool T13_is_I;
  bool ST3_is_I;
  bool ST3_is_minus_I;
};
RelationFacts verify_relations(const Generators& g);

/// Breadth-first closure of a generating set under right multiplication.
struct GroupTable {
  std::vector<GMatrix> elements;  // BFS discovery order, identity first
  bool capped = false;            // true if the cap was hit before closing
  std::size_t order() const { return elements.size(); }
};

/// Closes the generated group; aborts with a resource error (std::length_error)
/// when the closure exceeds `cap` elements.
GroupTable generate_group(const std::vector<GMatrix>& generators, std::size_t cap = 10000);

/// "GTBL v1" dump: one line per element, index then the 36 canonical
/// coefficient strings.
void dump_group_table(const GroupTable& t, std::ostream& os);

/// The word elements P = S T^-1 S, Q = S T^3 and
/// H = Q^5 P^2 * P^2 Q^6 P^8 * Q^5 P^2 * P^3 Q (left-to-right products).
struct WordElements {
  GMatrix P, Q, H;
};
WordElements build_word_elements(const Generators& g);

/// The signed permutation matrix the word is classically identified with:
/// rows e6, e4, e5, -e3, -e1, -e2.
GMatrix classical_H_matrix();

/// Same word evaluated on the 2x2 integer matrices s, t (p = s t^-1 s,
/// q = s t^3).
IntMatrix2 lift_word_2x2();

/// The expected value of the 2x2 word.
IntMatrix2 expected_lift_matrix();

}  // namespace sl213
