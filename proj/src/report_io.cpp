#include "chordgenus/report_io.hpp"

#include "chordgenus/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace chordgenus {

using nlohmann::ordered_json;

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string join(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    first = false;
    out += f;
  }
  out += '\n';
  return out;
}

template <typename T>
std::string num(T v) {
  return std::to_string(v);
}

ordered_json metadata_json(const RunMetadata& meta) {
  ordered_json m;
  m["tool"] = "chordgenus";
  m["tool_version"] = kToolVersion;
  m["command"] = meta.command;
  m["n"] = meta.n;
  if (meta.samples) m["samples"] = *meta.samples;
  if (meta.runs) m["runs"] = *meta.runs;
  if (meta.k_max) m["k_max"] = *meta.k_max;
  if (meta.seed) m["seed"] = *meta.seed;
  if (!meta.generator.empty()) m["generator"] = meta.generator;
  if (meta.timestamp) m["timestamp"] = *meta.timestamp;
  return m;
}

ordered_json bounds_json(const BoundReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json r;
    r["check"] = c.name;
    r["k"] = c.k ? ordered_json(*c.k) : ordered_json(nullptr);
    r["measured"] = c.measured;
    r["bound"] = c.bound;
    r["se"] = c.se ? ordered_json(*c.se) : ordered_json(nullptr);
    r["slack"] = c.slack;
    r["status"] = std::string(to_string(c.status));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string write_csv(const ExactStats& stats) {
  std::string out = "n,count,d_mean_num,d_mean_den,genus,genus_count\n";
  for (const auto& [g, c] : stats.genus_histogram) {
    out += join({num(stats.n), stats.count.str(), num(stats.d_mean.numerator()),
                 num(stats.d_mean.denominator()), num(g), num(c)});
  }
  return out;
}

std::string write_csv(const McStats& stats) {
  std::string out = "n,samples,seed,d_mean,d_stddev,ci99_lo,ci99_hi\n";
  out += join({num(stats.n), num(stats.samples), num(stats.seed), format_real(stats.d_mean),
               format_real(stats.d_stddev), format_real(stats.ci99_lo), format_real(stats.ci99_hi)});
  out += "\nn,k,Lk_hat,Lk_se,bound_3_over_k,lower_1_over_9k,Pk_hat,Pk_se\n";
  for (const auto& row : stats.rows) {
    out += join({num(stats.n), num(row.k), format_real(row.loops.value), format_real(row.loops.se),
                 format_real(3.0 / row.k), format_real(1.0 / (9.0 * row.k)),
                 format_real(row.edge_share.value), format_real(row.edge_share.se)});
  }
  return out;
}

std::string write_csv(const PlugStats& stats) {
  std::string out = "n,runs,k,mean_plugs,Gp,Gp_se,Gm,Gm_se,Hp,Hp_se,Hm,Hm_se\n";
  for (const auto& row : stats.rows) {
    out += join({num(stats.n), num(stats.runs), num(row.k), format_real(row.plugs.value),
                 format_real(row.positive_completed.value), format_real(row.positive_completed.se),
                 format_real(row.negative_completed.value), format_real(row.negative_completed.se),
                 format_real(row.positive_entrance.value), format_real(row.positive_entrance.se),
                 format_real(row.negative_entrance.value), format_real(row.negative_entrance.se)});
  }
  return out;
}

std::string write_json(const ExactStats& stats, const RunMetadata& meta, const BoundReport& report) {
  ordered_json doc;
  doc["metadata"] = metadata_json(meta);
  ordered_json rows = ordered_json::array();
  for (const auto& [g, c] : stats.genus_histogram) {
    rows.push_back({{"n", stats.n},
                    {"count", stats.count.str()},
                    {"d_mean_num", stats.d_mean.numerator()},
                    {"d_mean_den", stats.d_mean.denominator()},
                    {"genus", g},
                    {"genus_count", c}});
  }
  doc["rows"] = std::move(rows);
  ordered_json sizes = ordered_json::array();
  for (const auto& [k, l] : stats.loops_by_size) {
    sizes.push_back({{"n", stats.n}, {"k", k}, {"Lk_num", l.numerator()}, {"Lk_den", l.denominator()}});
  }
  doc["sizes"] = std::move(sizes);
  doc["bounds"] = bounds_json(report);
  return dump(doc);
}

std::string write_json(const McStats& stats, const RunMetadata& meta, const BoundReport& report) {
  ordered_json doc;
  doc["metadata"] = metadata_json(meta);
  doc["rows"] = ordered_json::array({{{"n", stats.n},
                                      {"samples", stats.samples},
                                      {"seed", stats.seed},
                                      {"d_mean", stats.d_mean},
                                      {"d_stddev", stats.d_stddev},
                                      {"ci99_lo", stats.ci99_lo},
                                      {"ci99_hi", stats.ci99_hi}}});
  ordered_json sizes = ordered_json::array();
  for (const auto& row : stats.rows) {
    sizes.push_back({{"n", stats.n},
                     {"k", row.k},
                     {"Lk_hat", row.loops.value},
                     {"Lk_se", row.loops.se},
                     {"bound_3_over_k", 3.0 / row.k},
                     {"lower_1_over_9k", 1.0 / (9.0 * row.k)},
                     {"Pk_hat", row.edge_share.value},
                     {"Pk_se", row.edge_share.se}});
  }
  doc["sizes"] = std::move(sizes);
  doc["bounds"] = bounds_json(report);
  return dump(doc);
}

std::string write_json(const PlugStats& stats, const RunMetadata& meta, const BoundReport& report) {
  ordered_json doc;
  doc["metadata"] = metadata_json(meta);
  ordered_json rows = ordered_json::array();
  for (const auto& row : stats.rows) {
    rows.push_back({{"n", stats.n},
                    {"runs", stats.runs},
                    {"k", row.k},
                    {"mean_plugs", row.plugs.value},
                    {"mean_plugs_se", row.plugs.se},
                    {"Gp", row.positive_completed.value},
                    {"Gp_se", row.positive_completed.se},
                    {"Gm", row.negative_completed.value},
                    {"Gm_se", row.negative_completed.se},
                    {"Hp", row.positive_entrance.value},
                    {"Hp_se", row.positive_entrance.se},
                    {"Hm", row.negative_entrance.value},
                    {"Hm_se", row.negative_entrance.se}});
  }
  doc["rows"] = std::move(rows);
  doc["bounds"] = bounds_json(report);
  return dump(doc);
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ChordError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ChordError(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace chordgenus
