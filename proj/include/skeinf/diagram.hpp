#pragma once

// Oriented link diagrams as PD codes. Internal crossing form is
// (ui, uo, oi, oo, sign): under-strand in/out, over-strand in/out. The PD
// 4-tuple X[a,b,c,d] lists arcs counterclockwise from the incoming
// under-strand a (under goes a->c); at a positive crossing the over-strand
// enters at d, at a negative one at b.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace skeinf {

struct Crossing {
  int ui, uo, oi, oo;
  int sign;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  // Throws if some arc has two outgoing or two incoming roles (the
  // successor structure must be a permutation). Planarity is checked
  // separately by validate(), so move generators can build candidates
  // freely and discard the non-planar ones.
  Diagram(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }

  // Arc cycles in order of smallest arc label, each walked from its
  // smallest arc. Crossingless circles are counted separately.
  const std::vector<std::vector<int>>& components() const { return comps_; }
  int n_components() const {
    return static_cast<int>(comps_.size()) + free_loops_;
  }
  std::map<int, int> arc_component() const;
  const std::map<int, int>& succ() const { return succ_; }

  int writhe() const;

  // Full invariant check: every arc appears once as head and once as tail,
  // signs are +-1, and the rotation system is planar. Throws with the
  // offending arc or crossing named.
  const Diagram& validate() const;

  std::vector<std::array<int, 4>> pd_tuples() const;
  std::string to_string() const;  // PD[X[a,b,c,d], ...] with O^k suffix
  std::string to_json() const;    // {"crossings": [[a,b,c,d],...], "free_loops": k}

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::map<int, int> succ_;
  std::vector<std::vector<int>> comps_;
};

// Accepts the PD text form (with optional O^k suffix), or the JSON mirror
// {"crossings": [...], "free_loops": k}, or a bare JSON array of 4-tuples.
Diagram parse_pd(const std::string& text);
Diagram diagram_from_tuples(const std::vector<std::array<int, 4>>& tuples,
                            int free_loops);

// CCW slot order at each crossing: (ui, oo, uo, oi) when positive,
// (ui, oi, uo, oo) when negative.
std::vector<std::array<int, 4>> rotations(const Diagram& d);

Diagram switch_at(const Diagram& d, int ci);
Diagram mirror(const Diagram& d);
Diagram reverse_component(const Diagram& d, int comp_index);
Diagram relabel(const Diagram& d, int offset);

// Remove the crossings in `removed`; glue[x] = y means the strand continues
// from arc x into arc y where a crossing disappeared. Chains of glued arcs
// merge into their final arc; closed chains come back as free loops (the
// second return value lists their member arcs, for color bookkeeping).
std::pair<Diagram, std::vector<std::vector<int>>> remove_crossings(
    const Diagram& d, const std::set<int>& removed,
    const std::map<int, int>& glue);

// The oriented smoothing: under-in joins over-out, over-in joins under-out.
std::pair<Diagram, std::vector<std::vector<int>>> smooth(const Diagram& d,
                                                         int ci);
// Reidemeister-1/2 removals.
std::pair<Diagram, std::vector<std::vector<int>>> undo_crossing(
    const Diagram& d, int ci);
std::pair<Diagram, std::vector<std::vector<int>>> undo_two(const Diagram& d,
                                                           int ci, int cj);

using Dart = std::pair<int, int>;  // (crossing index, rotation slot)

// Face tracing on the 4-valent planar map: follow an arc to its other
// endpoint, then step one slot clockwise.
std::vector<std::vector<Dart>> faces(const Diagram& d);
std::vector<int> face_arcs(const Diagram& d, const std::vector<Dart>& f);
std::vector<std::set<int>> crossing_pieces(const Diagram& d);
bool euler_ok(const Diagram& d);

// Kinks: crossings whose under-out and over-in (or over-out and under-in)
// coincide.
std::vector<int> r1_spots(const Diagram& d);
// Crossing pairs removable by a Reidemeister-2 move: one arc runs over at
// both, another under at both, and the two arcs bound a bigon face.
std::vector<std::pair<int, int>> r2_spots(const Diagram& d);

// Greedy R1 + R2 reduction. Never changes the isotopy class.
Diagram simplify(const Diagram& d);

// First crossing met on its under-strand in the descending traversal
// (components by smallest arc, from each component's smallest arc), with
// its sign; nullopt when the diagram is descending.
std::optional<std::pair<int, int>> pick_crossing(const Diagram& d);
// Number of crossings first met on their under-strand; 0 iff descending.
int bad_crossing_count(const Diagram& d);

// Splice component comp2 of d2 into component comp1 of d1.
Diagram connected_sum(const Diagram& d1, int comp1, const Diagram& d2,
                      int comp2);

}  // namespace skeinf
