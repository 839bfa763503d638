#pragma once

#include <ostream>

#include <json.hpp>

#include "arctanpow/combinatorics/combinatorics.hpp"

namespace arctanpow {

// Stirling rows 0..n_max as `n,m,s`.
inline void write_stirling_csv(std::ostream& out, long n_max) {
  out << "n,m,s\n";
  for (long n = 0; n <= n_max; ++n)
    for (long m = 0; m <= n; ++m) out << n << ',' << m << ',' << stirling1(n, m).get_str() << '\n';
}

inline nlohmann::ordered_json stirling_json(long n_max) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (long n = 0; n <= n_max; ++n)
    for (long m = 0; m <= n; ++m) j.push_back({{"n", n}, {"m", m}, {"s", stirling1(n, m).get_str()}});
  return j;
}

// p coefficients for m = 1..m_max as `m,l,n,p` with n = m - 2l, from the
// closed Stirling/L form.
inline void write_p_csv(std::ostream& out, long m_max) {
  out << "m,l,n,p\n";
  for (long m = 1; m <= m_max; ++m)
    for (long l = 0; 2 * l <= m - 1; ++l) out << m << ',' << l << ',' << m - 2 * l << ',' << to_string(p_closed(m - 2 * l, m)) << '\n';
}

inline nlohmann::ordered_json p_json(long m_max) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (long m = 1; m <= m_max; ++m)
    for (long l = 0; 2 * l <= m - 1; ++l)
      j.push_back({{"m", m}, {"l", l}, {"n", m - 2 * l}, {"p", to_string(p_closed(m - 2 * l, m))}});
  return j;
}

}  // namespace arctanpow
