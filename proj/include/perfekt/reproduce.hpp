#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfekt/matrix.hpp"

namespace perfekt {

struct ReproOptions {
  /// Run only rows whose key starts with this prefix (empty: all).
  std::string only;
  /// Replaces Q2 in the Q2 vertex row (fault injection).
  std::optional<SymMatrix> q2_override;
  int workers = 1;
};

struct ReproRow {
  std::string key;
  std::string title;
  bool pass = false;
  double seconds = 0;
  /// Wall-clock limit; exceeding it fails the row.
  double limit_seconds = 0;
  std::string detail;
};

std::vector<std::string> reproduce_keys();
std::vector<ReproRow> reproduce(const ReproOptions& opts = {});

}  // namespace perfekt
