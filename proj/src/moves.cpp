#include "skeinf/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "skeinf/bracket.hpp"

namespace skeinf {

namespace {

int max_arc(const Diagram& d) {
  int m = 0;
  for (const auto& c : d.crossings()) {
    m = std::max({m, c.ui, c.uo, c.oi, c.oo});
  }
  return m;
}

// Redirect the strand entering its head crossing through arc `a` to enter
// through `repl` instead.
void rewrite_head(std::vector<Crossing>& cs, int a, int repl) {
  for (auto& c : cs) {
    if (c.ui == a) {
      c.ui = repl;
      return;
    }
    if (c.oi == a) {
      c.oi = repl;
      return;
    }
  }
  throw std::logic_error("arc " + std::to_string(a) + " has no head");
}

}  // namespace

Diagram kink(const Diagram& d, int a, bool over_first, int sign) {
  int base = max_arc(d);
  int am = base + 1, a2 = base + 2;
  std::vector<Crossing> cs = d.crossings();
  rewrite_head(cs, a, a2);
  if (over_first) {
    cs.push_back({am, a2, a, am, sign});
  } else {
    cs.push_back({a, am, am, a2, sign});
  }
  Diagram out(std::move(cs), d.free_loops());
  out.validate();
  return out;
}

Diagram loop_kink(const Diagram& d, int sign) {
  if (d.free_loops() < 1) throw std::invalid_argument("no circle to curl");
  int base = max_arc(d);
  int a1 = base + 1, a2 = base + 2;
  std::vector<Crossing> cs = d.crossings();
  cs.push_back({a1, a2, a2, a1, sign});
  Diagram out(std::move(cs), d.free_loops() - 1);
  out.validate();
  return out;
}

std::optional<Diagram> poke(const Diagram& d, int p, int q, bool p_over,
                            int order, int sign) {
  if (p == q) return std::nullopt;
  int base = max_arc(d);
  int pm = base + 1, p2 = base + 2, qm = base + 3, q2 = base + 4;
  std::vector<Crossing> cs = d.crossings();
  rewrite_head(cs, p, p2);
  rewrite_head(cs, q, q2);
  if (p_over) {
    if (order == 0) {
      cs.push_back({q, qm, p, pm, sign});
      cs.push_back({qm, q2, pm, p2, -sign});
    } else {
      cs.push_back({qm, q2, p, pm, sign});
      cs.push_back({q, qm, pm, p2, -sign});
    }
  } else {
    if (order == 0) {
      cs.push_back({p, pm, q, qm, sign});
      cs.push_back({pm, p2, qm, q2, -sign});
    } else {
      cs.push_back({pm, p2, q, qm, sign});
      cs.push_back({p, pm, qm, q2, -sign});
    }
  }
  try {
    Diagram out(std::move(cs), d.free_loops());
    out.validate();
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Diagram loop_poke(const Diagram& d, int q, bool loop_over, int sign) {
  if (d.free_loops() < 1) throw std::invalid_argument("no circle to poke");
  int base = max_arc(d);
  int qm = base + 1, q2 = base + 2, o1 = base + 3, o2 = base + 4;
  std::vector<Crossing> cs = d.crossings();
  rewrite_head(cs, q, q2);
  if (loop_over) {
    cs.push_back({q, qm, o1, o2, sign});
    cs.push_back({qm, q2, o2, o1, -sign});
  } else {
    cs.push_back({o1, o2, q, qm, sign});
    cs.push_back({o2, o1, qm, q2, -sign});
  }
  Diagram out(std::move(cs), d.free_loops() - 1);
  out.validate();
  return out;
}

Diagram loop_loop_poke(const Diagram& d, int sign) {
  if (d.free_loops() < 2) throw std::invalid_argument("need two circles");
  int base = max_arc(d);
  int o1 = base + 1, o2 = base + 2, p1 = base + 3, p2 = base + 4;
  std::vector<Crossing> cs = d.crossings();
  cs.push_back({o1, o2, p1, p2, sign});
  cs.push_back({o2, o1, p2, p1, -sign});
  Diagram out(std::move(cs), d.free_loops() - 2);
  out.validate();
  return out;
}

namespace {

struct TriSlide {
  int ca, cb;      // the moving strand's two crossings
  int m_in;        // its arc entering ca
  bool m_over;     // whether it runs over at both
  int x, y;        // far arcs of the other strands at the third crossing
  int sa, sb;      // preserved pairwise signs
};

std::optional<Diagram> build_slide(const Diagram& d, const TriSlide& t,
                                   bool a_first) {
  const auto& crs = d.crossings();
  std::map<int, int> glue;
  for (int ci : {t.ca, t.cb}) {
    glue[crs[ci].ui] = crs[ci].uo;
    glue[crs[ci].oi] = crs[ci].oo;
  }
  auto chase = [&glue](int a) {
    while (glue.count(a)) a = glue.at(a);
    return a;
  };
  auto [removed, cycles] = remove_crossings(d, {t.ca, t.cb}, glue);
  if (!cycles.empty()) return std::nullopt;
  int M = chase(t.m_in), x = chase(t.x), y = chase(t.y);
  if (M == x || M == y || x == y) return std::nullopt;

  int base = max_arc(removed);
  int g1 = base + 1, g2 = base + 2, x2 = base + 3, y2 = base + 4;
  std::vector<Crossing> cs = removed.crossings();
  rewrite_head(cs, M, g2);
  rewrite_head(cs, x, x2);
  rewrite_head(cs, y, y2);
  int first_in = M, first_out = g1, second_in = g1, second_out = g2;
  auto make = [&](int other, int other2, int min, int mout, int sg) {
    return t.m_over ? Crossing{other, other2, min, mout, sg}
                    : Crossing{min, mout, other, other2, sg};
  };
  if (a_first) {
    cs.push_back(make(x, x2, first_in, first_out, t.sa));
    cs.push_back(make(y, y2, second_in, second_out, t.sb));
  } else {
    cs.push_back(make(y, y2, first_in, first_out, t.sb));
    cs.push_back(make(x, x2, second_in, second_out, t.sa));
  }
  try {
    Diagram out(std::move(cs), removed.free_loops());
    out.validate();
    if (out.writhe() != d.writhe()) return std::nullopt;
    if (!(bracket_jones(out) == bracket_jones(d))) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Diagram> r3_slides(const Diagram& d) {
  std::vector<Diagram> out;
  const auto& crs = d.crossings();
  if (crs.size() < 3) return out;

  // tail/head crossing of every arc
  std::map<int, int> tail, head;
  for (size_t i = 0; i < crs.size(); ++i) {
    tail[crs[i].uo] = tail[crs[i].oo] = static_cast<int>(i);
    head[crs[i].ui] = head[crs[i].oi] = static_cast<int>(i);
  }

  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::set<int> fcs;
    for (const auto& dart : f) fcs.insert(dart.first);
    if (fcs.size() != 3) continue;
    auto arcs = face_arcs(d, f);
    if (std::set<int>(arcs.begin(), arcs.end()).size() != 3) continue;

    for (int m_edge : arcs) {
      int ca = tail.at(m_edge), cb = head.at(m_edge);
      bool over = crs[ca].oo == m_edge && crs[cb].oi == m_edge;
      bool under = crs[ca].uo == m_edge && crs[cb].ui == m_edge;
      if (!over && !under) continue;
      int cc = 0;
      for (int c : fcs) {
        if (c != ca && c != cb) cc = c;
      }
      // the other two face arcs join ca-cc and cb-cc
      int e1 = -1, e2 = -1;
      for (int e : arcs) {
        if (e == m_edge) continue;
        std::set<int> ends{tail.at(e), head.at(e)};
        if (ends == std::set<int>{ca, cc}) e1 = e;
        if (ends == std::set<int>{cb, cc}) e2 = e;
      }
      if (e1 < 0 || e2 < 0) continue;

      auto far_at_cc = [&](int e) {
        const Crossing& c = crs[cc];
        if (e == c.ui) return c.uo;
        if (e == c.uo) return c.ui;
        if (e == c.oi) return c.oo;
        if (e == c.oo) return c.oi;
        throw std::logic_error("face arc missing from its crossing");
      };
      TriSlide t;
      t.ca = ca;
      t.cb = cb;
      t.m_over = over;
      t.m_in = over ? crs[ca].oi : crs[ca].ui;
      t.x = far_at_cc(e1);
      t.y = far_at_cc(e2);
      t.sa = crs[ca].sign;
      t.sb = crs[cb].sign;
      for (bool a_first : {true, false}) {
        if (auto slid = build_slide(d, t, a_first)) {
          out.push_back(std::move(*slid));
        }
      }
    }
  }
  return out;
}

Perturbation random_perturbation(const Diagram& d, std::mt19937& rng) {
  std::vector<int> arcs;
  for (const auto& cyc : d.components()) {
    arcs.insert(arcs.end(), cyc.begin(), cyc.end());
  }
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };

  std::vector<Diagram> slides;  // computed lazily at most once
  bool slides_ready = false;

  for (int attempt = 0; attempt < 400; ++attempt) {
    int kind = pick(3);
    if (kind == 0) {  // R1
      if (!arcs.empty()) {
        int a = arcs[pick(static_cast<int>(arcs.size()))];
        return {kink(d, a, pick(2) == 0, pick(2) ? 1 : -1), "r1"};
      }
      if (d.free_loops() > 0) return {loop_kink(d, pick(2) ? 1 : -1), "r1"};
    } else if (kind == 1) {  // R2
      bool use_loop = d.free_loops() > 0 && (arcs.empty() || pick(4) == 0);
      if (use_loop && d.free_loops() > 1 && (arcs.empty() || pick(2) == 0)) {
        return {loop_loop_poke(d, pick(2) ? 1 : -1), "r2"};
      }
      if (use_loop && !arcs.empty()) {
        int q = arcs[pick(static_cast<int>(arcs.size()))];
        return {loop_poke(d, q, pick(2) == 0, pick(2) ? 1 : -1), "r2"};
      }
      if (arcs.size() >= 2) {
        int p = arcs[pick(static_cast<int>(arcs.size()))];
        int q = arcs[pick(static_cast<int>(arcs.size()))];
        auto r = poke(d, p, q, pick(2) == 0, pick(2), pick(2) ? 1 : -1);
        if (r) return {std::move(*r), "r2"};
      }
    } else {  // R3
      if (!slides_ready) {
        slides = r3_slides(d);
        slides_ready = true;
      }
      if (!slides.empty()) {
        return {slides[pick(static_cast<int>(slides.size()))], "r3"};
      }
    }
  }
  throw std::runtime_error("no valid perturbation found");
}

}  // namespace skeinf
