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

#include <nlohmann/json.hpp>
#include <sstream>

#include "sl213/checks.hpp"

namespace sl213 {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const Report& r, bool include_timings) {
  ordered_json j;
  j["version"] = r.version;
  j["parameters"] = {{"order", r.config.order},
                     {"degree_budget", r.config.degree_budget},
                     {"seed", r.config.seed},
                     {"draws", r.config.draws},
                     {"suites", r.suites}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"witness", c.witness},
                      {"citations", c.citations}});
  }
  j["checks"] = checks;
  if (include_timings) {
    ordered_json t;
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# Verification report (v" << r.version << ")\n\n";
  os << "order " << r.config.order << ", degree budget " << r.config.degree_budget
     << ", seed " << r.config.seed << ", draws " << r.config.draws << "\n";
  for (const auto& suite : r.suites) {
    os << "\n## " << suite << "\n\n";
    os << "| check | status | witness |\n|---|---|---|\n";
    for (const auto& c : r.checks) {
      if (c.name.rfind(suite == "singularities" ? "sing" : suite, 0) != 0) continue;
      std::string w = c.witness;
      for (auto& ch : w)
        if (ch == '|') ch = '/';
      os << "| " << c.name << " | " << to_string(c.status) << " | " << w << " |\n";
    }
  }
  os << "\n## timings (ms)\n\n";
  for (const auto& [k, v] : r.timings_ms) os << "- " << k << ": " << v << "\n";
  bool ok = r.all_passed();
  os << "\n**overall: " << (ok ? "all checks passed" : "some checks failed") << "**\n";
  return os.str();
}

}  // namespace sl213
