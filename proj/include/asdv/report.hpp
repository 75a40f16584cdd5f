#pragma once

#include <string>
#include <vector>

#include "asdv/config.hpp"

namespace asdv {

// Deterministic text report: the same config always renders the same bytes.
struct ReportDocument {
  std::vector<std::string> lines;
  bool failed = false;  // a verification check did not pass

  void add(std::string line) { lines.push_back(std::move(line)); }
  std::string render() const;
};

ReportDocument cmd_series(const RunConfig& config);
ReportDocument cmd_traces(const RunConfig& config);
ReportDocument cmd_charpoly(const RunConfig& config);
ReportDocument cmd_asd(const RunConfig& config);
ReportDocument cmd_serre(const RunConfig& config);
ReportDocument cmd_group(const RunConfig& config);
ReportDocument cmd_geometry(const RunConfig& config);

}  // namespace asdv
