#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "skeinf/coloring.hpp"

using namespace skeinf;

TEST_CASE("bell counts") {
  const long long bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    auto parts = all_set_partitions(n);
    CHECK(static_cast<long long>(parts.size()) == bells[n]);
    CHECK(bell_number(n) == bells[n]);
    std::set<std::vector<int>> uniq;
    for (const auto& col : parts) {
      CHECK(col.c >= 1);
      CHECK(Coloration::of(col.block_of) == col);  // canonical already
      uniq.insert(col.block_of);
    }
    CHECK(uniq.size() == parts.size());
  }
  CHECK_THROWS(all_set_partitions(0));
  CHECK_THROWS(all_set_partitions(13));
}

TEST_CASE("two-block partitions of four components") {
  int n22 = 0, n31 = 0;
  for (const auto& col : all_set_partitions(4)) {
    if (col.c != 2) continue;
    auto t = type_of(col);
    if (t == PartitionType{2, 2}) ++n22;
    if (t == PartitionType{3, 1}) ++n31;
  }
  CHECK(n22 == 3);
  CHECK(n31 == 4);
  CHECK(n22 + n31 == 7);
  CHECK(partitions_of_type(4, {2, 2}).size() == 3);
  CHECK(partitions_of_type(4, {3, 1}).size() == 4);
}

TEST_CASE("types sum to bell") {
  // over n=4: (4):1 (3,1):4 (2,2):3 (2,1,1):6 (1^4):1
  std::map<PartitionType, int> counts;
  for (const auto& col : all_set_partitions(4)) ++counts[type_of(col)];
  CHECK(counts[{4}] == 1);
  CHECK(counts[{3, 1}] == 4);
  CHECK(counts[{2, 2}] == 3);
  CHECK(counts[{2, 1, 1}] == 6);
  CHECK(counts[{1, 1, 1, 1}] == 1);
  int total = 0;
  for (auto& [t, k] : counts) total += k;
  CHECK(total == 15);
}

TEST_CASE("type examples") {
  CHECK(type_of(Coloration::of({0, 0, 0})) == PartitionType{3});
  CHECK(type_of(Coloration::of({0, 0, 1, 1})) == PartitionType{2, 2});
  CHECK(type_of(Coloration::of({0, 1, 1, 1})) == PartitionType{3, 1});
  CHECK(type_of(Coloration::of({0, 1, 2, 3})) == PartitionType{1, 1, 1, 1});
  CHECK(type_text({2, 1}) == "(2,1)");
}

TEST_CASE("canonical relabeling") {
  CHECK(Coloration::of({5, 5, 7}).block_of == std::vector<int>{0, 0, 1});
  CHECK(Coloration::of({2, 1, 0}) == Coloration::of({0, 1, 2}));
  CHECK(Coloration::of({1, 0, 1}) == Coloration::of({0, 1, 0}));
  Coloration mono = Coloration::of({3, 3, 3});
  CHECK(mono.mono());
  CHECK(!mono.discrete());
  CHECK(Coloration::of({0}).discrete());
}

TEST_CASE("merge colors") {
  Coloration two = Coloration::of({0, 1});
  Coloration merged = merge_colors(two, 0, 1);
  CHECK(merged.mono());
  CHECK(merged.c == 1);
  CHECK_THROWS(merge_colors(two, 1, 1));
  CHECK_THROWS(merge_colors(two, 0, 2));

  Coloration three = Coloration::of({0, 1, 2});
  Coloration m = merge_colors(three, 0, 2);
  CHECK(m.block_of == std::vector<int>{0, 1, 0});
  CHECK(type_of(m) == PartitionType{2, 1});
  for (const auto& col : all_set_partitions(5)) {
    if (col.c < 2) continue;
    CHECK(merge_colors(col, 0, col.c - 1).c == col.c - 1);
  }
}

TEST_CASE("restriction after smoothing") {
  CHECK(restrict_after_merge(Coloration::of({0, 0, 1}), 0, 1) ==
        Coloration::of({0, 1}));
  CHECK(restrict_after_split(Coloration::of({0}), 0) == Coloration::of({0, 0}));
  CHECK(restrict_after_split(Coloration::of({0, 1}), 1) ==
        Coloration::of({0, 1, 1}));
  for (const auto& col : all_set_partitions(5)) {
    CHECK(restrict_after_split(col, 2).c == col.c);
    if (col.block_of[1] == col.block_of[3]) {
      CHECK(restrict_after_merge(col, 1, 3).c <= col.c);
    }
  }
}

TEST_CASE("cli literals") {
  CHECK(parse_colors("0,0,1", 3) == Coloration::of({0, 0, 1}));
  CHECK(parse_colors(" 1, 0, 0 ", 3) == Coloration::of({0, 1, 1}));
  CHECK_THROWS(parse_colors("0,1", 3));
  CHECK_THROWS(parse_colors("0,x,1", 3));
  CHECK(parse_type("2,1") == PartitionType{2, 1});
  CHECK(parse_type("(3,1,1)") == PartitionType{3, 1, 1});
  CHECK_THROWS(parse_type("1,2"));
  CHECK_THROWS(parse_type(""));
  CHECK_THROWS(parse_type("0,1"));
}
