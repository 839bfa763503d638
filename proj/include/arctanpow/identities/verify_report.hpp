#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arctanpow/algebra/digamma.hpp"
#include "arctanpow/algebra/poly.hpp"
#include "arctanpow/algebra/rational.hpp"
#include "arctanpow/coeffs/coeff_table.hpp"

namespace arctanpow {

using ParamList = std::vector<std::pair<std::string, long>>;

struct VerifyFailure {
  ParamList params;
  std::string lhs;
  std::string rhs;
  std::vector<CellIndex> cells;  // coefficient cells the failing case consumed
};

struct VerifyReport {
  std::string identity;
  ParamList grid;
  long cases = 0;
  std::optional<VerifyFailure> first_failure;
  double elapsed_ms = 0;
  std::vector<std::string> notes;

  bool pass() const { return !first_failure.has_value(); }
};

namespace detail {

inline std::string render(const Rational& v) { return to_string(v); }
inline std::string render(const DigammaExpr& v) { return v.to_string(); }
inline std::string render(const Poly& v) { return v.to_string("y"); }

inline nlohmann::ordered_json params_json(const ParamList& params) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) j[key] = value;
  return j;
}

}  // namespace detail

/// Accumulates one verifier run. Cases must be checked in lexicographic order
/// of their parameters so the recorded failure is the smallest one.
class ReportBuilder {
 public:
  ReportBuilder(std::string identity, ParamList grid) : start_(std::chrono::steady_clock::now()) {
    report_.identity = std::move(identity);
    report_.grid = std::move(grid);
  }

  template <class T>
  bool check(ParamList params, const T& lhs, const T& rhs, std::vector<CellIndex> cells = {}) {
    ++report_.cases;
    if (lhs == rhs) return true;
    if (!report_.first_failure) {
      report_.first_failure =
          VerifyFailure{std::move(params), detail::render(lhs), detail::render(rhs), std::move(cells)};
    }
    return false;
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  VerifyReport finish() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerifyReport report_;
  std::chrono::steady_clock::time_point start_;
};

/// {identity, grid, cases, pass, first_failure: {params, lhs, rhs, cells} | null, elapsed_ms, notes}
inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["grid"] = detail::params_json(r.grid);
  j["cases"] = r.cases;
  j["pass"] = r.pass();
  if (r.first_failure) {
    nlohmann::ordered_json f;
    f["params"] = detail::params_json(r.first_failure->params);
    f["lhs"] = r.first_failure->lhs;
    f["rhs"] = r.first_failure->rhs;
    f["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : r.first_failure->cells) f["cells"].push_back({{"k", c.k}, {"n", c.n}});
    j["first_failure"] = f;
  } else {
    j["first_failure"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  j["notes"] = r.notes;
  return j;
}

}  // namespace arctanpow
