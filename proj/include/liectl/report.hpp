#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace liectl {

struct ReportEntry {
  std::string condition;
  double residual = 0.0;
  bool pass = false;
};

/// Ordered list of checked conditions; passes iff every entry passes.
struct Report {
  std::vector<ReportEntry> entries;

  void add(std::string condition, double residual, double tol) {
    entries.push_back({std::move(condition), residual, residual <= tol});
  }

  bool pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
  }

  const ReportEntry* find(const std::string& condition) const {
    for (const auto& e : entries)
      if (e.condition == condition) return &e;
    return nullptr;
  }
};

}  // namespace liectl
