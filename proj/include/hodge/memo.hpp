// Integral keys and the insert-once memo tables shared by every recursion.
#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// The class multiplying the psi monomial.
enum class ClassTag {
  None,        // pure psi integral
  LambdaG,     // lambda_g
  LambdaGGm1,  // lambda_g lambda_{g-1}
  LambdaGm1,   // lambda_{g-1}
  LambdaGGm2,  // lambda_g lambda_{g-2}
};

inline constexpr ClassTag kAllTags[] = {ClassTag::None, ClassTag::LambdaG, ClassTag::LambdaGGm1,
                                        ClassTag::LambdaGm1, ClassTag::LambdaGGm2};

inline std::string_view tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::None: return "psi";
    case ClassTag::LambdaG: return "lg";
    case ClassTag::LambdaGGm1: return "lggm1";
    case ClassTag::LambdaGm1: return "lgm1";
    case ClassTag::LambdaGGm2: return "lggm2";
  }
  return "?";
}

inline std::optional<ClassTag> tag_from_name(std::string_view name) {
  for (ClassTag t : kAllTags)
    if (tag_name(t) == name) return t;
  return std::nullopt;
}

/// Complex degree of the class on M_g-bar.
inline int class_degree(ClassTag tag, int g) {
  switch (tag) {
    case ClassTag::None: return 0;
    case ClassTag::LambdaG: return g;
    case ClassTag::LambdaGGm1: return 2 * g - 1;
    case ClassTag::LambdaGm1: return g - 1;
    case ClassTag::LambdaGGm2: return 2 * g - 2;
  }
  return 0;
}

inline bool is_stable(int g, std::size_t n) { return g >= 0 && 2 * g - 2 + static_cast<long>(n) > 0; }

/// One intersection number <tau_{k_1} ... tau_{k_n} | class>_g.
struct IntegralKey {
  ClassTag tag = ClassTag::None;
  int genus = 0;
  std::vector<int> exponents;  // sorted descending

  IntegralKey() = default;
  IntegralKey(ClassTag t, int g, std::vector<int> ks) : tag(t), genus(g), exponents(std::move(ks)) {
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
  }

  std::size_t points() const { return exponents.size(); }

  long exponent_sum() const {
    long s = 0;
    for (int k : exponents) s += k;
    return s;
  }

  /// Sum of psi exponents forced by dim M_{g,n}-bar = 3g-3+n.
  long required_sum() const {
    return 3L * genus - 3 + static_cast<long>(points()) - class_degree(tag, genus);
  }

  bool dimension_matches() const { return exponent_sum() == required_sum(); }

  auto operator<=>(const IntegralKey&) const = default;
  bool operator==(const IntegralKey&) const = default;
};

inline std::string exponents_string(const std::vector<int>& ks) {
  if (ks.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ks[i]);
  }
  return out;
}

inline std::string to_string(const IntegralKey& key) {
  return std::string(tag_name(key.tag)) + " " + std::to_string(key.genus) + " " + exponents_string(key.exponents);
}

/// Idempotent insert-once map. Concurrent readers are safe; when two threads
/// race on the first computation of a key the first insert wins, and both
/// values are equal by determinism of the callers.
template <class Key, class Value>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second.value;
  }

  /// Returns the stored value (the existing one if the key was present).
  Value insert(const Key& key, const Value& value, bool imported = false) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, Entry{value, imported});
    return it->second.value;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    misses_.fetch_add(1, std::memory_order_relaxed);
    Value value = compute();
    return insert(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  /// Number of computations performed (cache misses) since the last reset.
  std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }
  void reset_misses() { misses_.store(0, std::memory_order_relaxed); }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
    misses_.store(0, std::memory_order_relaxed);
  }

  /// Snapshot in key order. When only_computed is set, entries loaded from a
  /// cache file are skipped.
  std::vector<std::pair<Key, Value>> entries(bool only_computed = false) const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Key, Value>> out;
    out.reserve(table_.size());
    for (const auto& [k, e] : table_)
      if (!only_computed || !e.imported) out.emplace_back(k, e.value);
    return out;
  }

 private:
  struct Entry {
    Value value;
    bool imported = false;
  };

  mutable std::shared_mutex mutex_;
  std::map<Key, Entry> table_;
  std::atomic<std::size_t> misses_{0};
};

using IntegralTable = MemoTable<IntegralKey, Rational>;

/// The persisted table: every integral computed through the public entry
/// points of psi.hpp and hodge.hpp lands here.
inline IntegralTable& integral_cache() {
  static IntegralTable table;
  return table;
}

}  // namespace hodge
