// One line per acceptance criterion. All comparisons are exact (no numeric
// tolerance); the time limits live with each criterion in reproduce.cpp.
#include <cstdio>

#include "perfekt/reproduce.hpp"

int main() {
  auto rows = perfekt::reproduce();
  int failed = 0, i = 0;
  for (const auto& r : rows) {
    ++i;
    std::printf("%s %2d %-30s %7.3fs / %4.0fs  exact  %s\n", r.pass ? "PASS" : "FAIL", i, r.key.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failed, rows.size());
  return failed == 0 && rows.size() == 12 ? 0 : 1;
}
