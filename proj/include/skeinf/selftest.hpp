#pragma once

#include <string>
#include <vector>

namespace skeinf {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // short summary, or the failure reason
};

struct SelftestReport {
  std::vector<CriterionResult> results;
  bool all_pass = false;

  std::string text() const;  // one line per criterion plus a verdict
  std::string json() const;
};

// Full verification suite. The final criterion reruns everything with a
// different worker count and insists the two reports agree byte for byte,
// so a call costs two passes.
SelftestReport run_selftest(int threads = 1);

}  // namespace skeinf
