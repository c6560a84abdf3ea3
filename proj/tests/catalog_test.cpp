#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinf/catalog.hpp"
#include "skeinf/diagram.hpp"

using namespace skeinf;

namespace {

std::string what_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("bundled catalog basics") {
  const Catalog& c = bundled();
  const std::map<std::string, int> expect = {
      {"unknot", 1}, {"O2", 2},      {"O3", 3},       {"hopf+", 2},
      {"hopf-", 2},  {"trefoil", 1}, {"trefoil-", 1}, {"fig8", 1},
      {"A", 4},      {"B", 4},
  };
  for (const auto& [id, n] : expect) {
    CAPTURE(id);
    REQUIRE(c.has(id));
    CHECK(c.at(id).components == n);
  }
  for (const auto& e : c.entries()) {
    CAPTURE(e.id);
    Diagram d = e.diagram();
    CHECK(e.components == d.n_components());
    CHECK(parse_pd(e.pd) == d);
    CHECK(parse_pd(d.to_string()) == d);  // serialization round-trip
    CHECK_FALSE(e.note.empty());
  }
  CHECK_THROWS_AS(c.at("no-such-link"), std::out_of_range);
}

TEST_CASE("bundled named three-component links") {
  const Catalog& c = bundled();
  for (const char* id :
       {"L10n76{1,1}", "L10n79{1,1}", "L10n95{1,0}", "L11a404{1,1}",
        "L11a428{0,1}", "L11a467{0,1}", "L11a527{0,0}", "L11n325{1,1}",
        "L11n356{1,0}", "L11n358{0,1}", "L11n358{1,1}", "L11n418{0,0}",
        "L11n418{1,0}", "L11n424{0,0}", "L11n425{1,0}", "L11n434{0,0}"}) {
    CAPTURE(id);
    REQUIRE(c.has(id));
    CHECK(c.at(id).components == 3);
  }
}

TEST_CASE("chain and star have the advertised clasp patterns") {
  const Catalog& c = bundled();
  auto degrees = [](const Diagram& d) {
    int n = d.n_components();
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (linking_number(d, i, j) != 0) {
          ++deg[i];
          ++deg[j];
        }
      }
    }
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  CHECK(degrees(c.at("A").diagram()) == std::vector<int>{1, 1, 2, 2});
  CHECK(degrees(c.at("B").diagram()) == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("linking numbers") {
  const Catalog& c = bundled();
  CHECK(linking_number(c.at("hopf+").diagram(), 0, 1) == 1);
  CHECK(linking_number(c.at("hopf-").diagram(), 0, 1) == -1);
  CHECK(linking_number(Diagram(std::vector<Crossing>{}, 2), 0, 1) == 0);
  CHECK_THROWS_AS(linking_number(c.at("hopf+").diagram(), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("csv ingestion") {
  std::string csv =
      "id,components,pd,note\n"
      "h2,2,\"PD[X[1,3,2,4], X[4,2,3,1]]\",hopf variant\n"
      "ring,1,PD[] O^1,\n";
  Catalog c = ingest_text(csv);
  REQUIRE(c.size() == 2);
  CHECK(c.at("h2").components == 2);
  CHECK(c.at("h2").note == "hopf variant");
  CHECK(c.at("ring").diagram().free_loops() == 1);

  // any column order, quoted quotes
  std::string shuffled =
      "note,pd,id,components\n"
      "\"says \"\"hi\"\"\",\"PD[X[1,3,2,4], X[4,2,3,1]]\",a,2\n";
  Catalog c2 = ingest_text(shuffled);
  CHECK(c2.at("a").note == "says \"hi\"");
}

TEST_CASE("csv errors name their lines") {
  std::string csv =
      "id,components,pd\n"
      "good,2,\"PD[X[1,3,2,4], X[4,2,3,1]]\"\n"
      "bad,2,\"PD[X[1,3]]\"\n"
      "worse,nine,\"PD[]\"\n";
  std::string msg = what_of([&] { ingest_text(csv); });
  CHECK(msg.find("catalog errors:") != std::string::npos);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(msg.find("line 2") == std::string::npos);

  std::string dup =
      "id,components,pd\n"
      "twice,1,PD[] O^1\n"
      "twice,1,PD[] O^1\n";
  CHECK(what_of([&] { ingest_text(dup); }).find("duplicate id \"twice\"") !=
        std::string::npos);

  std::string mismatch =
      "id,components,pd\n"
      "off,3,PD[] O^1\n";
  CHECK(what_of([&] { ingest_text(mismatch); }).find("declares 3") !=
        std::string::npos);

  CHECK(what_of([&] { ingest_text("id,pd\nx,PD[]\n"); }).find("components") !=
        std::string::npos);
}

TEST_CASE("json ingestion") {
  std::string arr =
      R"([{"id": "x", "components": 2, "pd": "PD[X[1,3,2,4], X[4,2,3,1]]"}])";
  CHECK(ingest_text(arr).at("x").components == 2);

  std::string obj =
      R"({"entries": [{"id": "y", "components": 1, "pd": "PD[] O^1",
          "note": "loop"}]})";
  CHECK(ingest_text(obj).at("y").note == "loop");

  std::string bad = R"([{"id": "z", "components": 1, "pd": "PD[X[1]]"}])";
  CHECK(what_of([&] { ingest_text(bad); }).find("entry 1") !=
        std::string::npos);
}

TEST_CASE("raw PD list ingestion") {
  std::string raw =
      "# two entries\n"
      "PD[X[1,3,2,4], X[4,2,3,1]]\n"
      "\n"
      "PD[] O^2\n";
  Catalog c = ingest_text(raw);
  REQUIRE(c.size() == 2);
  CHECK(c.at("pd1").components == 2);
  CHECK(c.at("pd2").components == 2);
}

TEST_CASE("empty input gives an empty catalog") {
  CHECK(ingest_text("").size() == 0);
  CHECK(ingest_text("   \n").size() == 0);
}

TEST_CASE("file round-trip and missing files") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "skeinf_catalog_test.csv";
  {
    std::ofstream out(p);
    out << "id,components,pd\nh,2,\"PD[X[1,3,2,4], X[4,2,3,1]]\"\n";
  }
  Catalog c = ingest(p.string());
  CHECK(c.size() == 1);
  fs::remove(p);

  CHECK(what_of([&] { ingest("/no/such/dir/table.csv"); })
            .find("cannot open") != std::string::npos);
}

TEST_CASE("catalog rejects duplicates and bad entries directly") {
  Catalog c;
  CatalogEntry e;
  e.id = "k";
  e.components = 1;
  e.pd = "PD[] O^1";
  c.add(e);
  CHECK_THROWS_AS(c.add(e), std::invalid_argument);

  CatalogEntry bad;
  bad.id = "m";
  bad.components = 2;
  bad.pd = "PD[] O^1";
  CHECK_THROWS_AS(c.add(bad), std::runtime_error);
}
