#pragma once

// CSV and JSON serialization of the stats types.
//
// CSV tables are separated by one blank line and start with a fixed header:
//   exact:  n,count,d_mean_num,d_mean_den,genus,genus_count
//   sample: n,samples,seed,d_mean,d_stddev,ci99_lo,ci99_hi
//           n,k,Lk_hat,Lk_se,bound_3_over_k,lower_1_over_9k,Pk_hat,Pk_se
//   plugs:  n,runs,k,mean_plugs,Gp,Gp_se,Gm,Gm_se,Hp,Hp_se,Hm,Hm_se
// Reals are printed with 17 significant digits. JSON carries the same fields
// under "metadata", "rows" (and "sizes" for samples), plus the bound table
// under "bounds".

#include "chordgenus/bounds.hpp"
#include "chordgenus/stats.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace chordgenus {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunMetadata {
  std::string command;
  std::uint32_t n = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> runs;
  std::optional<std::uint32_t> k_max;
  std::optional<std::uint64_t> seed;
  std::string generator;
  /// Left out unless requested, so reruns stay byte-identical.
  std::optional<std::string> timestamp;
};

std::string format_real(double value);

std::string write_csv(const ExactStats& stats);
std::string write_csv(const McStats& stats);
std::string write_csv(const PlugStats& stats);

std::string write_json(const ExactStats& stats, const RunMetadata& meta, const BoundReport& report);
std::string write_json(const McStats& stats, const RunMetadata& meta, const BoundReport& report);
std::string write_json(const PlugStats& stats, const RunMetadata& meta, const BoundReport& report);

/// Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace chordgenus
