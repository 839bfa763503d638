#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "arctanpow/coeffs/coeff_table.hpp"

namespace arctanpow {

/// Header `k,n,t`, rows n-major then k, t as "p/q".
inline void write_coeffs_csv(std::ostream& out, const std::vector<CoeffTable::Entry>& entries) {
  out << "k,n,t\n";
  for (const auto& e : entries) out << e.index.k << ',' << e.index.n << ',' << to_string(e.value) << '\n';
}

/// [{"k":..,"n":..,"t":"p/q"}, ...]
inline nlohmann::ordered_json coeffs_json(const std::vector<CoeffTable::Entry>& entries) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : entries) j.push_back({{"k", e.index.k}, {"n", e.index.n}, {"t", to_string(e.value)}});
  return j;
}

}  // namespace arctanpow
