#include "chordgenus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace chordgenus {

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Insufficient: return "INSUFFICIENT";
  }
  return "?";
}

bool BoundReport::has_failure() const { return count(CheckStatus::Fail) > 0; }

std::size_t BoundReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const BoundCheck& c) { return c.status == status; }));
}

namespace {

constexpr double kExactTolerance = 1e-12;

class Builder {
 public:
  void upper(std::string name, std::optional<std::uint32_t> k, double measured, double bound,
             std::optional<double> se = std::nullopt) {
    add(std::move(name), k, measured, bound, se, bound - measured);
  }

  void lower(std::string name, std::optional<std::uint32_t> k, double measured, double bound,
             std::optional<double> se = std::nullopt) {
    add(std::move(name), k, measured, bound, se, measured - bound);
  }

  void exact(std::string name, bool holds, double measured, double expected) {
    report.checks.push_back({std::move(name), std::nullopt, measured, expected, std::nullopt,
                             measured - expected, holds ? CheckStatus::Pass : CheckStatus::Fail});
  }

  BoundReport report;

 private:
  void add(std::string name, std::optional<std::uint32_t> k, double measured, double bound,
           std::optional<double> se, double slack) {
    BoundCheck c{std::move(name), k, measured, bound, se, slack, CheckStatus::Pass};
    if (se) {
      const double band = kStatisticalTolerance * *se;
      if (slack < -band) {
        c.status = CheckStatus::Fail;
      } else if (band >= std::abs(bound)) {
        c.status = CheckStatus::Insufficient;
      }
    } else if (slack < -kExactTolerance * std::max(1.0, std::abs(bound))) {
      c.status = CheckStatus::Fail;
    }
    report.checks.push_back(std::move(c));
  }
};

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

BoundReport bound_report(const ExactStats& stats) {
  Builder b;
  const std::uint32_t n = stats.n;
  const double ln_n = std::log(static_cast<double>(n));

  const auto expected_count = diagram_count(n);
  b.exact("count = (2n)!/n!", stats.count == expected_count, stats.count.convert_to<double>(),
          expected_count.convert_to<double>());

  std::uint64_t histogram_total = 0;
  Rational genus_sum = 0;
  for (const auto& [g, c] : stats.genus_histogram) {
    histogram_total += c;
    genus_sum += Rational(static_cast<std::int64_t>(g) * static_cast<std::int64_t>(c));
  }
  b.exact("genus histogram total = count", stats.count == histogram_total,
          static_cast<double>(histogram_total), stats.count.convert_to<double>());

  Rational loop_sum = 0;
  for (const auto& [k, l] : stats.loops_by_size) loop_sum += l;
  b.exact("sum_k L_k = d_n", loop_sum == stats.d_mean, to_double(loop_sum), to_double(stats.d_mean));

  if (histogram_total > 0) {
    const Rational g_mean = genus_sum / static_cast<std::int64_t>(histogram_total);
    const Rational lhs = g_mean + stats.d_mean / 2;
    const Rational rhs = Rational(static_cast<std::int64_t>(n) + 2, 2);
    b.exact("g_n + d_n/2 = (n+2)/2", lhs == rhs, to_double(lhs), to_double(rhs));
  }
  if (!stats.genus_histogram.empty()) {
    b.lower("min genus >= 0", std::nullopt, stats.genus_histogram.begin()->first, 0.0);
    b.upper("max genus <= (n+1)/2", std::nullopt, stats.genus_histogram.rbegin()->first,
            (n + 1) / 2.0);
  }

  const double d = to_double(stats.d_mean);
  b.upper("d_n <= 3 ln n + 400", std::nullopt, d, 3 * ln_n + 400);
  if (n >= 50) b.lower("d_n >= ln(n)/18", std::nullopt, d, ln_n / 18);
  for (const auto& [k, l] : stats.loops_by_size) {
    if (k <= n / 100) b.upper("L_k <= 3/k", k, to_double(l), 3.0 / k);
  }
  return b.report;
}

BoundReport bound_report(const McStats& stats) {
  Builder b;
  const std::uint32_t n = stats.n;
  const double ln_n = std::log(static_cast<double>(n));
  const auto& totals = stats.totals;

  b.upper("d_n <= 3 ln n + 400", std::nullopt, stats.d_mean, 3 * ln_n + 400, stats.d_se());
  if (n >= 50) b.lower("d_n >= ln(n)/18", std::nullopt, stats.d_mean, ln_n / 18, stats.d_se());

  std::uint64_t loop_total = 0;
  std::uint64_t edge_total = 0;
  for (std::size_t k = 1; k < totals.loops().size(); ++k) {
    loop_total += totals.loops()[k];
    edge_total += totals.edges()[k];
  }
  b.exact("sum_k L_k = d_n", loop_total == totals.sum_d(), static_cast<double>(loop_total),
          static_cast<double>(totals.sum_d()));
  const std::uint64_t all_edges = 4ULL * n * totals.samples();
  b.exact("sum_k P_k = 1", edge_total == all_edges, static_cast<double>(edge_total),
          static_cast<double>(all_edges));

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
  for (const auto& row : stats.rows) {
    const std::uint32_t k = row.k;
    const std::uint64_t loops = totals.loops()[k];
    const std::uint64_t edges = totals.edges()[k];
    if (k <= checked_size_limit(n)) {
      b.exact("k L_k/4n <= P_k <= 4k L_k/4n", k * loops <= edges && edges <= 4ULL * k * loops,
              row.edge_share.value, row.loops.value * k / (4.0 * n));
    }
    if (k <= n / 100) {
      b.upper("L_k <= 3/k", k, row.loops.value, 3.0 / k, row.loops.se);
      b.upper("P_k <= 3/(4n)", k, row.edge_share.value, 3.0 / (4.0 * n), row.edge_share.se);
    }
    if (n >= 50 && k <= root) {
      b.lower("L_k >= 1/(9k)", k, row.loops.value, 1.0 / (9.0 * k), row.loops.se);
      b.lower("P_k >= 1/(9n)", k, row.edge_share.value, 1.0 / (9.0 * n), row.edge_share.se);
    }
  }
  return b.report;
}

BoundReport bound_report(const PlugStats& stats) {
  Builder b;
  const double n = stats.n;
  for (const auto& row : stats.rows) {
    if (row.k > stats.n / 100) continue;
    b.upper("plugs after k <= 1/4", row.k, row.plugs.value, 0.25, row.plugs.se);
    b.upper("G+_k <= 5/n", row.k, row.positive_completed.value, 5.0 / n, row.positive_completed.se);
    b.upper("G-_k <= 20/n", row.k, row.negative_completed.value, 20.0 / n, row.negative_completed.se);
    b.upper("H+_k <= 6/n", row.k, row.positive_entrance.value, 6.0 / n, row.positive_entrance.se);
    b.upper("H-_k <= 21/n", row.k, row.negative_entrance.value, 21.0 / n, row.negative_entrance.se);
  }
  return b.report;
}

std::string format_report(const BoundReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-30s %6s %14s %14s %12s %14s\n", "status", "check", "k",
                "measured", "bound", "se", "slack");
  out += line;
  for (const auto& c : report.checks) {
    const std::string k = c.k ? std::to_string(*c.k) : "-";
    char se[32];
    if (c.se) {
      std::snprintf(se, sizeof se, "%12.4g", *c.se);
    } else {
      std::snprintf(se, sizeof se, "%12s", "exact");
    }
    std::snprintf(line, sizeof line, "%-12s %-30s %6s %14.6g %14.6g %s %14.6g\n",
                  std::string(to_string(c.status)).c_str(), c.name.c_str(), k.c_str(), c.measured,
                  c.bound, se, c.slack);
    out += line;
  }
  std::snprintf(line, sizeof line, "summary: %zu pass, %zu fail, %zu insufficient\n",
                report.count(CheckStatus::Pass), report.count(CheckStatus::Fail),
                report.count(CheckStatus::Insufficient));
  out += line;
  return out;
}

}  // namespace chordgenus
