#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skeinf/diagram.hpp"

namespace skeinf {

// Reidemeister insertions. Arc labels stay stable except where a strand is
// split; new arcs get fresh labels above the current maximum.

// R1: curl arc `a`. over_first picks which lobe is crossed first along the
// strand; both signs are always realizable.
Diagram kink(const Diagram& d, int a, bool over_first, int sign);
// R1 on a crossingless circle.
Diagram loop_kink(const Diagram& d, int sign);

// R2: push arc p across arc q (p_over: p on top at both crossings). order
// flips which new crossing comes first along q. The two crossings get signs
// (sign, -sign). Returns nullopt when that placement is not planar.
std::optional<Diagram> poke(const Diagram& d, int p, int q, bool p_over,
                            int order, int sign);
// R2 between a crossingless circle and arc q, or between two circles.
Diagram loop_poke(const Diagram& d, int q, bool loop_over, int sign);
Diagram loop_loop_poke(const Diagram& d, int sign);

// R3: all slides of a strand across the far corner of a triangle face. The
// moving strand must run over (or under) both of its triangle crossings;
// pairwise crossing signs are preserved. Results are planarity-checked and
// cross-checked against the Kauffman bracket.
std::vector<Diagram> r3_slides(const Diagram& d);

struct Perturbation {
  Diagram d;
  std::string kind;  // "r1" | "r2" | "r3"
};

// One random valid move; deterministic for a given rng state.
Perturbation random_perturbation(const Diagram& d, std::mt19937& rng);

}  // namespace skeinf
