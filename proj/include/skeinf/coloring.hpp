#pragma once

#include <string>
#include <vector>

namespace skeinf {

// A coloration is a set partition of the components 0..n-1. Canonical form
// is the restricted growth string: blocks numbered 0,1,... in order of
// their smallest member, so equivalent colorations compare equal.
struct Coloration {
  std::vector<int> block_of;  // block index per component
  int c = 0;                  // number of blocks

  // Canonicalize arbitrary labels ("5,5,7" becomes 0,0,1).
  static Coloration of(const std::vector<int>& labels);

  int n() const { return static_cast<int>(block_of.size()); }
  bool mono() const { return c <= 1; }
  bool discrete() const { return c == n(); }
  std::string text() const;  // "0,0,1"

  friend bool operator==(const Coloration&, const Coloration&) = default;
  friend auto operator<=>(const Coloration&, const Coloration&) = default;
};

// Block sizes, weakly decreasing.
using PartitionType = std::vector<int>;

// All set partitions of n components in lexicographic growth-string order.
// Exactly Bell(n) of them; n is capped at 12 to keep enumeration sane.
std::vector<Coloration> all_set_partitions(int n);
std::vector<Coloration> partitions_of_type(int n, const PartitionType& p);
long long bell_number(int n);

PartitionType type_of(const Coloration& col);
std::string type_text(const PartitionType& p);  // "(2,1)"

// Union blocks a and b (relation III merges the colors through a crossing).
Coloration merge_colors(const Coloration& col, int a, int b);

// Color bookkeeping when a smoothing changes the component set. On a merge
// the two components must already share a color and the survivor keeps it;
// indices past the removed component shift down. On a split the offspring
// sit at i and i+1, both in the parent's block.
Coloration restrict_after_merge(const Coloration& col, int i, int j);
Coloration restrict_after_split(const Coloration& col, int i);

// CLI literals: "--colors 0,0,1" and "--type 2,1" (parens optional).
Coloration parse_colors(const std::string& text, int n);
PartitionType parse_type(const std::string& text);

}  // namespace skeinf
