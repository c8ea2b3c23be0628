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

// Command line front end: verify the identity suites, print q-expansions,
// and manage the polynomial/series cache.
//
// Exit codes: 0 all selected checks pass, 1 a check failed, 2 usage error,
// 3 resource or cache error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sl213/cache.hpp"
#include "sl213/checks.hpp"
#include "sl213/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  sl213::RunConfig cfg;
  std::string out_path;
  bool no_timings = false;
};

int write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return kExitResource;
  }
  out << text;
  return kExitOk;
}

int run_verify(const Options& opt, const std::vector<std::string>& selection,
               const std::string& dump_group_path) {
  sl213::Verifier verifier(opt.cfg);
  sl213::Report rep = verifier.run(selection);

  if (!dump_group_path.empty()) {
    const auto& g = verifier.gens();
    sl213::GroupTable table = sl213::generate_group({g.S, g.T});
    std::ofstream out(dump_group_path, std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << dump_group_path << "\n";
      return kExitResource;
    }
    sl213::dump_group_table(table, out);
  }

  std::string text = opt.cfg.format == "markdown"
                         ? sl213::report_to_markdown(rep)
                         : sl213::report_to_json(rep, !opt.no_timings);
  int rc = write_or_print(text, opt.out_path);
  if (rc != kExitOk) return rc;
  if (!opt.out_path.empty()) {
    int fails = 0;
    for (const auto& c : rep.checks)
      if (c.status == sl213::CheckStatus::fail) ++fails;
    std::cerr << rep.checks.size() << " checks, " << fails << " failed; report written to "
              << opt.out_path << "\n";
  }
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_expand(const Options& opt, const std::string& target) {
  sl213::FormFamily forms = sl213::build_forms();
  sl213::ModularSeries ms(opt.cfg.order, forms);

  auto print = [&](const sl213::QExp& s) {
    std::cout << s.to_lines();
    return kExitOk;
  };

  if (target == "eta") return print(ms.eta());
  if (target == "delta" || target == "Delta") return print(ms.delta());
  if (target == "E4") return print(ms.E4());
  if (target == "E6") return print(ms.E6());
  if (target == "j") return print(ms.j());
  if (target.size() >= 2 && target[0] == 'a' && target.size() == 2 && target[1] >= '1' &&
      target[1] <= '6')
    return print(ms.a()[target[1] - '1']);
  if (target[0] == 'A' && target.size() == 2 && target[1] >= '0' && target[1] <= '6')
    return print(ms.A()[target[1] - '0']);
  if (target == "Dinf") return print(ms.D()[sl213::kInfIndex]);
  if (target[0] == 'D') {
    try {
      int idx = std::stoi(target.substr(1));
      if (idx >= 0 && idx <= 12) return print(ms.D()[idx]);
    } catch (...) {
    }
  }
  if (target[0] == 'G') {
    try {
      int idx = std::stoi(target.substr(1));
      if (idx >= 0 && idx <= 12) return print(ms.G()[idx]);
    } catch (...) {
    }
  }
  if (target.rfind("Phi:", 0) == 0) {
    auto comma = target.find(',');
    if (comma != std::string::npos) {
      try {
        int m = std::stoi(target.substr(4, comma - 4));
        int n = std::stoi(target.substr(comma + 1));
        if (m >= 0 && n >= 0)
          return print(ms.phi_x(m, n, sl213::stated_normalization(m, n)));
      } catch (...) {
      }
    }
  }
  std::cerr << "unknown expand target: " << target << "\n"
            << "known: eta delta E4 E6 j a1..a6 A0..A6 D0..D12 Dinf G0..G12 Phi:m,n\n";
  return kExitUsage;
}

int run_cache(const Options& opt, const std::string& action) {
  if (opt.cfg.cache_dir.empty()) {
    std::cerr << "cache: no cache directory configured (use --cache-dir or "
                 "SL213_CACHE_DIR)\n";
    return kExitUsage;
  }
  sl213::CacheStore store(opt.cfg.cache_dir);
  if (action == "status") {
    auto entries = store.status();
    std::cout << entries.size() << " entries in " << store.dir() << "\n";
    for (const auto& e : entries) std::cout << e.key << " " << e.bytes << " bytes\n";
    return kExitOk;
  }
  if (action == "clear") {
    std::size_t n = store.clear();
    std::cout << "removed " << n << " entries\n";
    return kExitOk;
  }
  if (action == "warm") {
    sl213::FormFamily forms = sl213::build_forms();
    sl213::SymbolicInvariantBuilder builder(forms, opt.cfg.degree_budget);
    std::vector<std::string> warnings;
    std::size_t stored = 0;
    for (int m = 0; 4 * m <= opt.cfg.degree_budget; ++m) {
      for (int n = 0; 4 * m + 6 * n <= opt.cfg.degree_budget; ++n) {
        if (m == 0 && n == 0) continue;
        store.get_mpoly(
            sl213::CacheStore::phi_key(m, n, "norm-v1"),
            [&] { return builder.phi(m, n, sl213::stated_normalization(m, n)); },
            &warnings);
        ++stored;
      }
    }
    for (const auto& w : warnings) std::cerr << w << "\n";
    std::cout << "warmed " << stored << " invariants up to degree "
              << opt.cfg.degree_budget << "\n";
    return kExitOk;
  }
  std::cerr << "unknown cache action: " << action << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for the six-dimensional SL(2,13) "
               "invariants and their modular realizations"};
  app.set_version_flag("--version", sl213::kVersion);
  app.require_subcommand(1);

  Options opt;
  app.add_option("--order", opt.cfg.order, "comparison window in integer q-orders")
      ->envname("SL213_ORDER")
      ->check(CLI::Range(1LL, 64LL));
  app.add_option("--degree-budget", opt.cfg.degree_budget,
                 "symbolic construction degree cap");
  app.add_option("--seed", opt.cfg.seed, "seed for all random draws");
  app.add_option("--draws", opt.cfg.draws, "parameter tuples per singular family")
      ->check(CLI::Range(1, 100));
  app.add_option("--cache-dir", opt.cfg.cache_dir, "cache directory")
      ->envname("SL213_CACHE_DIR");
  app.add_option("--format", opt.cfg.format, "report format")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", opt.out_path, "report output path (default stdout)");
  app.add_flag("--no-timings", opt.no_timings, "omit timings from JSON reports");

  auto* verify = app.add_subcommand("verify", "run check suites");
  std::vector<std::string> selection;
  verify->add_option("suites", selection,
                     "suites: group forms invariance modular singularities "
                     "icosahedral prop32 all");
  std::string dump_group_path;
  verify->add_option("--dump-group", dump_group_path,
                     "also write the full element table (GTBL v1)");

  auto* expand = app.add_subcommand("expand", "print a q-expansion");
  std::string target;
  expand->add_option("target", target, "e.g. A0, D11, G1, Phi:3,0, eta, E4, j")
      ->required();

  auto* cache = app.add_subcommand("cache", "manage the polynomial cache");
  std::string action;
  cache->add_option("action", action, "status | clear | warm")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (selection.empty()) selection = {"all"};
      return run_verify(opt, selection, dump_group_path);
    }
    if (expand->parsed()) return run_expand(opt, target);
    return run_cache(opt, action);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sl213::CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::length_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
