// Plain-text persistence for the integral memo table.
//
//   # hodge-integral-cache v1
//   # created 2026-01-01T00:00:00Z
//   lg 2 2,1 7/1920
//   psi 1 1 1/24
//
// One entry per line: tag, genus, exponents (descending, "-" when empty),
// value. Files with another version line are ignored.
#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "hodge/memo.hpp"

namespace hodge {

inline constexpr std::string_view kCacheVersionLine = "# hodge-integral-cache v1";
inline constexpr const char* kCacheEnvVar = "HODGE_CACHE";

struct CacheLoadReport {
  std::size_t loaded = 0;
  std::size_t malformed = 0;
  bool found = false;
  bool version_ok = false;
  std::string warning;
};

inline std::optional<std::filesystem::path> default_cache_path() {
  const char* env = std::getenv(kCacheEnvVar);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

inline std::string format_cache_entry(const IntegralKey& key, const Rational& value) {
  return to_string(key) + " " + to_string(value);
}

inline std::optional<std::pair<IntegralKey, Rational>> parse_cache_entry(const std::string& line) {
  std::istringstream in(line);
  std::string tag_text, exps_text, value_text;
  int genus = 0;
  if (!(in >> tag_text >> genus >> exps_text >> value_text)) return std::nullopt;
  std::string extra;
  if (in >> extra) return std::nullopt;
  const auto tag = tag_from_name(tag_text);
  if (!tag || genus < 0) return std::nullopt;
  std::vector<int> ks;
  if (exps_text != "-") {
    std::istringstream parts(exps_text);
    std::string item;
    while (std::getline(parts, item, ',')) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(item, &used);
        if (used != item.size() || k < 0) return std::nullopt;
        ks.push_back(k);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  try {
    return std::make_pair(IntegralKey(*tag, genus, std::move(ks)), parse_rational(value_text));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Imports every entry of the file into the table, flagged as imported.
inline CacheLoadReport load_cache(const std::filesystem::path& path, IntegralTable& table) {
  CacheLoadReport report;
  std::ifstream in(path);
  if (!in) return report;
  report.found = true;
  std::string line;
  if (!std::getline(in, line) || line != kCacheVersionLine) {
    report.warning = "cache " + path.string() + " has an unknown version header; ignoring it";
    return report;
  }
  report.version_ok = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (auto entry = parse_cache_entry(line)) {
      table.insert(entry->first, entry->second, true);
      ++report.loaded;
    } else {
      ++report.malformed;
    }
  }
  if (report.malformed > 0)
    report.warning = std::to_string(report.malformed) + " malformed cache line(s) skipped in " + path.string();
  return report;
}

namespace detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline void write_header(std::ostream& out) {
  out << kCacheVersionLine << '\n' << "# created " << utc_timestamp() << '\n';
}

/// True when the file exists and starts with the current version line.
inline bool has_current_header(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  return in && std::getline(in, line) && line == kCacheVersionLine;
}

}  // namespace detail

/// Appends the entries computed in this process (not those imported). A
/// missing or foreign-version file is replaced by a fresh one.
inline std::size_t append_cache(const std::filesystem::path& path, const IntegralTable& table) {
  const auto fresh = table.entries(true);
  const bool reuse = detail::has_current_header(path);
  std::ofstream out(path, reuse ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  if (!reuse) detail::write_header(out);
  for (const auto& [key, value] : fresh) out << format_cache_entry(key, value) << '\n';
  return fresh.size();
}

/// Rewrites the file with the merged contents of file and table, one line
/// per key in key order.
inline std::size_t compact_cache(const std::filesystem::path& path, IntegralTable& table) {
  load_cache(path, table);
  const auto all = table.entries(false);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    detail::write_header(out);
    for (const auto& [key, value] : all) out << format_cache_entry(key, value) << '\n';
  }
  std::filesystem::rename(tmp, path);
  return all.size();
}

}  // namespace hodge
