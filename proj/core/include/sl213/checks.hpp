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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl213/pipeline.hpp"

namespace sl213 {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One verification outcome. A fail always carries a concrete witness (the
/// first failing exponent or coefficient, or the computed value).
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;
  std::vector<std::string> citations;

  bool passed() const { return status == CheckStatus::pass; }
};

struct RunConfig {
  long long order = 12;            // comparison window in integer q-orders
  int degree_budget = 30;          // symbolic construction cap
  std::uint64_t seed = 20130013u;  // all random draws derive from this
  int draws = 5;                   // parameter tuples per singular family
  std::string cache_dir;           // empty disables the polynomial cache
  std::string format = "json";
};

struct Report {
  std::string version;
  RunConfig config;
  std::vector<std::string> suites;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, long long>> timings_ms;

  bool all_passed() const;
};

/// Declared suite order; reports aggregate in this order regardless of how
/// the checks were produced.
const std::vector<std::string>& suite_names();

/// Runs the selected suites over lazily shared artifacts. Each suite reseeds
/// its generator from the config, so reports are reproducible bit for bit
/// under any suite selection.
class Verifier {
 public:
  explicit Verifier(const RunConfig& cfg);
  ~Verifier();

  /// `selection` entries must be suite names or "all".
  Report run(const std::vector<std::string>& selection);

  std::vector<CheckResult> suite_group();
  std::vector<CheckResult> suite_forms();
  std::vector<CheckResult> suite_invariance();
  std::vector<CheckResult> suite_modular();
  std::vector<CheckResult> suite_singularities();
  std::vector<CheckResult> suite_icosahedral();
  std::vector<CheckResult> suite_prop32();

  /// Fine-grained wall times recorded by the suites (e.g. the word-element
  /// block), merged into the report.
  const std::vector<std::pair<std::string, long long>>& extra_timings() const {
    return extra_timings_;
  }

  const Generators& gens();
  const FormFamily& forms();
  ModularSeries& modular();

 private:
  struct State;
  RunConfig cfg_;
  std::unique_ptr<State> st_;
  std::vector<std::pair<std::string, long long>> extra_timings_;

  const FieldConstants& field();
  const FourteenPoints& fourteen();
  const Radicals& radicals();
  IcosaSeries& icosa();
  SymbolicInvariantBuilder& symbolic();
};

std::string report_to_json(const Report& r, bool include_timings = true);
std::string report_to_markdown(const Report& r);

}  // namespace sl213
