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

#include "sl213/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sl213 {

namespace fs = std::filesystem;

CacheStore::CacheStore(std::string dir) : dir_(std::move(dir)) {}

std::string CacheStore::phi_key(int m, int n, const std::string& norm_version) {
  return "phi_m" + std::to_string(m) + "_n" + std::to_string(n) + "_" + norm_version;
}

std::string CacheStore::path_for(const std::string& key) const {
  return (fs::path(dir_) / (key + ".txt")).string();
}

void CacheStore::ensure_dir() const {
  if (!enabled()) throw CacheError("cache directory not configured");
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir_ + ": " + ec.message());
}

namespace {

template <class T, class Reader, class Writer>
T get_entry(const std::string& path, const std::function<T()>& build, Reader read,
            Writer write, std::vector<std::string>* warnings) {
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      return read(in);
    } catch (const std::exception& e) {
      if (warnings)
        warnings->push_back("corrupt cache entry " + path + " (" + e.what() +
                            "); rebuilding");
    }
  }
  T value = build();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CacheError("cannot write cache entry " + path);
  write(value, out);
  return value;
}

}  // namespace

MPoly CacheStore::get_mpoly(const std::string& key, const std::function<MPoly()>& build,
                            std::vector<std::string>* warnings) {
  ensure_dir();
  return get_entry<MPoly>(
      path_for(key), build, [](std::istream& is) { return deserialize_mpoly(is); },
      [](const MPoly& p, std::ostream& os) { serialize(p, os); }, warnings);
}

QExp CacheStore::get_qexp(const std::string& key, const std::function<QExp()>& build,
                          std::vector<std::string>* warnings) {
  ensure_dir();
  return get_entry<QExp>(
      path_for(key), build, [](std::istream& is) { return deserialize_qexp(is); },
      [](const QExp& f, std::ostream& os) { serialize(f, os); }, warnings);
}

std::vector<CacheEntryInfo> CacheStore::status() const {
  std::vector<CacheEntryInfo> out;
  if (!enabled() || !fs::exists(dir_)) return out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    out.push_back({entry.path().stem().string(), entry.file_size()});
  }
  std::sort(out.begin(), out.end(),
            [](const CacheEntryInfo& a, const CacheEntryInfo& b) { return a.key < b.key; });
  return out;
}

std::size_t CacheStore::clear() {
  std::size_t n = 0;
  if (!enabled() || !fs::exists(dir_)) return n;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    fs::remove(entry.path());
    ++n;
  }
  return n;
}

}  // namespace sl213
