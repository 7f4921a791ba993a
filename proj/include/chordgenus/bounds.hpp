#pragma once

// Pass/fail tables for the proven bounds on d_n, L_k, P_k and plug counts.
//
// Statistical rows compare estimate +- 3 standard errors with the bound. A row
// whose 3 SE band is at least as wide as the bound itself cannot resolve the
// comparison and is reported as Insufficient rather than passed.

#include "chordgenus/stats.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chordgenus {

inline constexpr double kStatisticalTolerance = 3.0;  // standard errors

enum class CheckStatus { Pass, Fail, Insufficient };

std::string_view to_string(CheckStatus status) noexcept;

struct BoundCheck {
  std::string name;
  std::optional<std::uint32_t> k;
  double measured = 0;
  double bound = 0;
  std::optional<double> se;  // absent for exact rows
  double slack = 0;          // distance to the bound, positive when satisfied
  CheckStatus status = CheckStatus::Pass;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  bool has_failure() const;
  std::size_t count(CheckStatus status) const;
};

BoundReport bound_report(const ExactStats& stats);
BoundReport bound_report(const McStats& stats);
BoundReport bound_report(const PlugStats& stats);

/// Fixed-width text table, one row per check.
std::string format_report(const BoundReport& report);

}  // namespace chordgenus
