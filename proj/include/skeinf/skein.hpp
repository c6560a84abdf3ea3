#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skeinf/coloring.hpp"
#include "skeinf/diagram.hpp"
#include "skeinf/ratfun.hpp"

namespace skeinf {

// A diagram mid-computation: arc colors plus the colors of any crossingless
// circles split off along the way. Loop colors are kept sorted so equal
// states compare equal.
struct State {
  Diagram d;
  std::map<int, int> col;  // arc -> color block
  std::vector<int> loops;  // colors of crossingless circles

  State(Diagram d_, std::map<int, int> col_, std::vector<int> loops_);
};

// Colors per component: arc-cycle components in smallest-arc order, then
// free loops.
State colored(const Diagram& d, const std::vector<int>& comp_colors);

State switch_state(const State& st, int ci);
// Oriented smoothing at a crossing whose strands share a color.
State smooth_state(const State& st, int ci);
// Merge color blocks a and b into min(a, b).
State recolor(const State& st, int a, int b);
// Greedy R1 + R2 reduction, colors carried along.
State simplify_state(const State& st);

// Remove crossingless circles while something else survives. Factor per
// circle: 1/(wx) if its color is unique to it, y/(wx) if shared.
std::pair<State, RatFun> absorb_loops(const State& st);

// Arcs in descending-traversal order: components by smallest arc, each
// walked from its smallest arc.
std::vector<int> traversal(const Diagram& d);
// First crossing met on its under-strand before its over-strand, plus the
// total count of such crossings. {nullopt, 0} on a descending diagram.
std::pair<std::optional<int>, int> first_bad(const State& st);

// Traversal encoding of (d, col): arc labels renumbered by first-visit
// order, colors by first appearance. Injective up to arc relabeling.
std::string memo_key(const State& st);

using Memo = std::unordered_map<std::string, RatFun>;

// The recursion: simplify, then bottom out at a descending diagram (an
// unlink) or resolve the first bad crossing. Same-color crossings split
// two ways (switch, smooth), mixed-color three ways (switch, switch with
// merged colors, smooth with merged colors). Every child strictly shrinks
// (colors, crossings, bad count) lexicographically, so this terminates.
// The memo is scoped to one top-level call; pass trace to record the tree.
RatFun eval_state(const State& st, Memo& memo, std::string* trace = nullptr);

RatFun eval_colored(const Diagram& d, const std::vector<int>& comp_colors,
                    std::string* trace = nullptr);
RatFun eval_colored(const Diagram& d, const Coloration& col,
                    std::string* trace = nullptr);
RatFun eval_mono(const Diagram& d);

// Check the three-term relation at crossing ci by evaluating all four
// diagrams from scratch:
//   (1/w)F(L+) - wF(L-) = (1-1/t)F(L~) + (1/w)(1-1/t)F(L+,~)
// with the strand colors merged in L~ and L+,~.
bool verify_skein_identity(const Diagram& d,
                           const std::vector<int>& comp_colors, int ci);

}  // namespace skeinf
