#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

/// Coordinates of t_k(n). Ordered n-major, then k.
struct CellIndex {
  long k = 0;
  long n = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
  friend std::strong_ordering operator<=>(const CellIndex& a, const CellIndex& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.k <=> b.k;
  }
};

inline std::string to_string(const CellIndex& c) {
  return "(k=" + std::to_string(c.k) + ", n=" + std::to_string(c.n) + ")";
}

enum class Method : unsigned {
  BruteForce = 1u << 0,
  Recursive = 1u << 1,
  Update = 1u << 2,
  FivePart = 1u << 3,
  Closed = 1u << 4,
  Digamma = 1u << 5,
};

inline constexpr unsigned kAllMethods = 0x3fu;

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::BruteForce: return "bruteforce";
    case Method::Recursive: return "recursive";
    case Method::Update: return "update";
    case Method::FivePart: return "fivepart";
    case Method::Closed: return "closed";
    case Method::Digamma: return "digamma";
  }
  return "unknown";
}

inline std::string method_list(unsigned mask) {
  std::string out;
  for (unsigned bit = 1; bit <= kAllMethods; bit <<= 1) {
    if ((mask & bit) == 0) continue;
    if (!out.empty()) out += "|";
    out += method_name(static_cast<Method>(bit));
  }
  return out;
}

/// Memoized triangle of t_k(n).
///
/// Each cell carries the set of algorithms that have produced it. An algorithm
/// only reuses cells it produced itself, so the routes stay independent, while
/// every write is compared against whatever is already stored. A mismatch is a
/// bug in one of the routes and throws CoeffClash.
///
/// Safe for concurrent use: writes of the same cell are idempotent and readers
/// only ever see complete cells.
class CoeffTable {
 public:
  struct Entry {
    CellIndex index;
    Rational value;
    unsigned methods = 0;
  };

  std::optional<Rational> lookup(CellIndex idx, Method method) const {
    std::shared_lock lock(mutex_);
    auto it = cells_.find(idx);
    if (it == cells_.end() || (it->second.methods & static_cast<unsigned>(method)) == 0)
      return std::nullopt;
    return it->second.value;
  }

  std::optional<Rational> lookup(CellIndex idx) const {
    std::shared_lock lock(mutex_);
    auto it = cells_.find(idx);
    if (it == cells_.end()) return std::nullopt;
    return it->second.value;
  }

  // Stores value for idx under method; returns the stored value.
  Rational record(CellIndex idx, Method method, const Rational& value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cells_.try_emplace(idx, Stored{value, 0});
    if (!inserted && it->second.value != value) {
      throw CoeffClash("t" + to_string(idx) + ": " + std::string(method_name(method)) +
                       " produced " + arctanpow::to_string(value) + " but " +
                       method_list(it->second.methods) + " stored " +
                       arctanpow::to_string(it->second.value));
    }
    it->second.methods |= static_cast<unsigned>(method);
    return it->second.value;
  }

  // Replaces a cell for every method without cross-checking. Exists so tests
  // can corrupt the table and watch the verifiers catch it.
  void overwrite(CellIndex idx, const Rational& value) {
    std::unique_lock lock(mutex_);
    cells_[idx] = Stored{value, kAllMethods};
  }

  unsigned methods_at(CellIndex idx) const {
    std::shared_lock lock(mutex_);
    auto it = cells_.find(idx);
    return it == cells_.end() ? 0u : it->second.methods;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cells_.size();
  }

  // Stored cells with k <= k_max and n <= n_max, n-major then k.
  std::vector<Entry> entries(long k_max, long n_max) const {
    std::shared_lock lock(mutex_);
    std::vector<Entry> out;
    for (const auto& [idx, cell] : cells_)
      if (idx.k <= k_max && idx.n <= n_max) out.push_back(Entry{idx, cell.value, cell.methods});
    return out;
  }

 private:
  struct Stored {
    Rational value;
    unsigned methods;
  };

  mutable std::shared_mutex mutex_;
  std::map<CellIndex, Stored> cells_;
};

}  // namespace arctanpow
