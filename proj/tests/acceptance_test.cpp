#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "skeinf/selftest.hpp"

// The whole verification suite, one line per criterion. Runs the suite at
// four workers, which internally reruns it single-threaded for the
// determinism comparison.
TEST_CASE("acceptance") {
  skeinf::SelftestReport rep = skeinf::run_selftest(4);
  std::fputs(rep.text().c_str(), stdout);
  std::fflush(stdout);
  for (const auto& r : rep.results) {
    CAPTURE(r.number);
    CAPTURE(r.name);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  CHECK(rep.all_pass);
}
