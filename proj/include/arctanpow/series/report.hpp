#pragma once

#include <string>

#include <json.hpp>

#include "arctanpow/algebra/bigfloat.hpp"
#include "arctanpow/series/series.hpp"

namespace arctanpow {

/// {n, x, precision_bits, terms_used, value, tail_bound, oracle, abs_error, heuristic_bound}.
/// Big floats are written as decimal strings so no digits are lost.
inline nlohmann::ordered_json eval_report_json(long n, const std::string& x, const EvalResult& r,
                                               const BigFloat& oracle) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["x"] = x;
  j["precision_bits"] = r.value.precision();
  j["terms_used"] = r.terms_used;
  j["value"] = r.value.to_string();
  j["tail_bound"] = r.tail_bound.to_string(20);
  j["oracle"] = oracle.to_string();
  j["abs_error"] = abs(r.value - oracle).to_string(20);
  j["heuristic_bound"] = r.heuristic_bound;
  return j;
}

}  // namespace arctanpow
