// Runs the full verification suite and prints one pass/fail line per
// criterion. Exit status is nonzero if any gating criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "gring/catalog.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 12345;
  for (int i = 1; i < argc; ++i)
    if (std::strncmp(argv[i], "--seed=", 7) == 0) seed = std::strtoull(argv[i] + 7, nullptr, 10);

  auto results = gring::run_acceptance(seed);
  bool gating_fail = false;
  double total = 0.0;
  for (const auto& r : results) {
    std::printf("criterion %2d: %s%s — %s\n    %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.gating ? "" : " (non-gating)", r.name.c_str(), r.detail.c_str());
    if (r.gating && !r.pass) gating_fail = true;
    total += r.seconds;
  }
  std::printf("%s (%.1f s total)\n", gating_fail ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", total);
  return gating_fail ? 1 : 0;
}
