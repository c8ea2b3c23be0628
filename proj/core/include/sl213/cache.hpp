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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sl213/mpoly.hpp"
#include "sl213/qexp.hpp"

namespace sl213 {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheEntryInfo {
  std::string key;
  std::uintmax_t bytes = 0;
};

/// File-backed store for "MPOLY v1" and "QEXP v1" artifacts. Keys map to
/// file names; corrupt entries are reported through the `warnings` sink and
/// rebuilt, never silently used.
class CacheStore {
 public:
  explicit CacheStore(std::string dir);

  const std::string& dir() const { return dir_; }
  bool enabled() const { return !dir_.empty(); }

  /// Polynomials are keyed by (family, m, n, normalization-version).
  static std::string phi_key(int m, int n, const std::string& norm_version);

  /// Loads the entry or builds and stores it. On a corrupt file the entry is
  /// rebuilt and overwritten, and a note is appended to `warnings`.
  MPoly get_mpoly(const std::string& key, const std::function<MPoly()>& build,
                  std::vector<std::string>* warnings = nullptr);
  QExp get_qexp(const std::string& key, const std::function<QExp()>& build,
                std::vector<std::string>* warnings = nullptr);

  std::vector<CacheEntryInfo> status() const;
  /// Removes every cache entry; returns how many were deleted.
  std::size_t clear();

 private:
  std::string dir_;
  std::string path_for(const std::string& key) const;
  void ensure_dir() const;
};

}  // namespace sl213
