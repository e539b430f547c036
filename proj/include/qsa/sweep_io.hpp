#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsa/common.hpp"
#include "qsa/joint.hpp"
#include "qsa/verify.hpp"

namespace qsa {

inline const char* sweep_csv_header() {
  return "omega,raw_capacity,gated_capacity,remote_min_pt_eig,local_min_pt_eig";
}

/// Fixed nine-decimal formatting; keeps sweep output byte-deterministic.
/// Values that round to zero at this precision print as an unsigned zero.
inline std::string format_fixed9(double x) {
  if (std::abs(x) < 0.5e-9) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

inline std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = sweep_csv_header();
  out += '\n';
  for (const SweepRecord& r : records) {
    out += format_fixed9(r.omega);
    out += ',';
    out += format_fixed9(r.raw_capacity);
    out += ',';
    out += format_fixed9(r.gated_capacity);
    out += ',';
    out += format_fixed9(r.remote_min_pt_eig);
    out += ',';
    out += format_fixed9(r.local_min_pt_eig);
    out += '\n';
  }
  return out;
}

inline nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    rows.push_back({{"omega", r.omega},
                    {"raw_capacity", r.raw_capacity},
                    {"gated_capacity", r.gated_capacity},
                    {"remote_min_pt_eig", r.remote_min_pt_eig},
                    {"local_min_pt_eig", r.local_min_pt_eig}});
  }
  return rows;
}

inline nlohmann::json claims_to_json(const std::vector<ClaimResult>& results) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ClaimResult& r : results) {
    rows.push_back({{"id", r.id},
                    {"verdict", to_string(r.verdict)},
                    {"detail", r.detail}});
  }
  return nlohmann::json{{"claims", rows}, {"passed", suite_passed(results)}};
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw io_error("write failed: " + path);
}

}  // namespace qsa
