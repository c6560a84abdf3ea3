#include "skeinf/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <regex>
#include <stdexcept>

#include "json.hpp"

namespace skeinf {

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  for (const auto& c : crossings_) {
    if (c.ui == c.oi || succ_.count(c.ui) || succ_.count(c.oi)) {
      int bad = succ_.count(c.oi) || c.ui == c.oi ? c.oi : c.ui;
      throw std::runtime_error("arc " + std::to_string(bad) +
                               " has two outgoing roles");
    }
    succ_[c.ui] = c.uo;
    succ_[c.oi] = c.oo;
  }
  std::set<int> seen;
  for (const auto& [a, b] : succ_) {
    if (seen.count(a)) continue;
    std::vector<int> cyc{a};
    seen.insert(a);
    int cur = b;
    while (cur != a) {
      auto it = succ_.find(cur);
      if (it == succ_.end()) {
        throw std::runtime_error("arc " + std::to_string(cur) +
                                 " has no outgoing role");
      }
      cyc.push_back(cur);
      seen.insert(cur);
      cur = it->second;
    }
    comps_.push_back(std::move(cyc));
  }
}

std::map<int, int> Diagram::arc_component() const {
  std::map<int, int> m;
  for (size_t i = 0; i < comps_.size(); ++i) {
    for (int a : comps_[i]) m[a] = static_cast<int>(i);
  }
  return m;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

const Diagram& Diagram::validate() const {
  std::map<int, int> heads, tails;
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) {
      throw std::runtime_error("crossing sign must be +-1");
    }
    heads[c.ui]++;
    heads[c.oi]++;
    tails[c.uo]++;
    tails[c.oo]++;
  }
  for (const auto& [a, n] : heads) {
    auto it = tails.find(a);
    if (it == tails.end() || n != 1 || it->second != 1) {
      throw std::runtime_error(
          "arc " + std::to_string(a) + " appears " + std::to_string(n) +
          " times incoming, " +
          std::to_string(it == tails.end() ? 0 : it->second) +
          " times outgoing");
    }
  }
  for (const auto& [a, n] : tails) {
    if (!heads.count(a)) {
      throw std::runtime_error("arc " + std::to_string(a) +
                               " appears only outgoing");
    }
  }
  if (!euler_ok(*this)) {
    throw std::runtime_error("rotation system is not planar");
  }
  return *this;
}

std::vector<std::array<int, 4>> Diagram::pd_tuples() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) {
    if (c.sign > 0) {
      out.push_back({c.ui, c.oo, c.uo, c.oi});
    } else {
      out.push_back({c.ui, c.oi, c.uo, c.oo});
    }
  }
  return out;
}

std::string Diagram::to_string() const {
  std::string s = "PD[";
  bool first = true;
  for (const auto& t : pd_tuples()) {
    if (!first) s += ", ";
    first = false;
    s += "X[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "," + std::to_string(t[3]) + "]";
  }
  s += "]";
  if (free_loops_) s += " O^" + std::to_string(free_loops_);
  return s;
}

std::string Diagram::to_json() const {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& t : pd_tuples()) {
    j["crossings"].push_back({t[0], t[1], t[2], t[3]});
  }
  j["free_loops"] = free_loops_;
  return j.dump();
}

std::vector<std::array<int, 4>> rotations(const Diagram& d) {
  std::vector<std::array<int, 4>> out;
  out.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    if (c.sign > 0) {
      out.push_back({c.ui, c.oo, c.uo, c.oi});
    } else {
      out.push_back({c.ui, c.oi, c.uo, c.oo});
    }
  }
  return out;
}

namespace {

Diagram from_json(const nlohmann::json& j) {
  std::vector<std::array<int, 4>> tuples;
  int loops = 0;
  const nlohmann::json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object()) {
    arr = &j.at("crossings");
    if (j.contains("free_loops")) loops = j.at("free_loops").get<int>();
  } else {
    throw std::runtime_error("PD json must be an array or object");
  }
  for (const auto& row : *arr) {
    if (!row.is_array() || row.size() != 4) {
      throw std::runtime_error("PD json crossing must be a 4-element array");
    }
    tuples.push_back(
        {row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
         row[3].get<int>()});
  }
  return diagram_from_tuples(tuples, loops);
}

}  // namespace

Diagram parse_pd(const std::string& text) {
  size_t p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos) throw std::runtime_error("empty PD expression");
  if (text[p] == '{' ||
      (text[p] == '[' && text.find("X[") == std::string::npos)) {
    return from_json(nlohmann::json::parse(text));
  }

  static const std::regex shape(R"(\s*PD\[(.*)\]\s*(?:O\^(\d+))?\s*)",
                                std::regex::icase);
  std::smatch m;
  if (!std::regex_match(text, m, shape)) {
    throw std::runtime_error("malformed PD expression");
  }
  std::string body = m[1].str();
  int loops = m[2].matched ? std::stoi(m[2].str()) : 0;

  std::vector<std::array<int, 4>> tuples;
  static const std::regex xre(
      R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
  auto begin = std::sregex_iterator(body.begin(), body.end(), xre);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    tuples.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]),
                      std::stoi((*it)[3]), std::stoi((*it)[4])});
  }
  std::string leftover = std::regex_replace(body, xre, "");
  leftover.erase(std::remove_if(leftover.begin(), leftover.end(),
                                [](char ch) {
                                  return ch == ',' || std::isspace(
                                                          (unsigned char)ch);
                                }),
                 leftover.end());
  if (!leftover.empty()) {
    throw std::runtime_error("unparsed PD content: " + leftover);
  }
  return diagram_from_tuples(tuples, loops);
}

Diagram diagram_from_tuples(const std::vector<std::array<int, 4>>& tuples,
                            int free_loops) {
  // Orient the over-strands globally: pos[i] true iff the over-strand
  // enters crossing i at slot 3 (positive crossing). Under-strand roles are
  // fixed (slot 0 head, slot 2 tail); propagation through shared arcs pins
  // the rest.
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (size_t i = 0; i < tuples.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      occ[tuples[i][s]].push_back({static_cast<int>(i), s});
    }
  }
  for (const auto& [a, os] : occ) {
    if (os.size() != 2) {
      throw std::runtime_error("arc " + std::to_string(a) + " appears " +
                               std::to_string(os.size()) +
                               " times (expected 2)");
    }
  }

  std::map<std::pair<int, int>, bool> role;  // true = head (arc enters here)
  std::vector<std::optional<bool>> pos(tuples.size());

  auto other_end = [&](int i, int s) {
    const auto& ends = occ[tuples[i][s]];
    return ends[0] == std::make_pair(i, s) ? ends[1] : ends[0];
  };

  auto assign_over = [&](int i0, bool p0) {
    std::vector<std::pair<int, bool>> stack{{i0, p0}};
    while (!stack.empty()) {
      auto [i, p] = stack.back();
      stack.pop_back();
      if (pos[i].has_value()) {
        if (*pos[i] != p) {
          throw std::runtime_error(
              "inconsistent over-strand orientation at crossing " +
              std::to_string(i));
        }
        continue;
      }
      pos[i] = p;
      role[{i, 1}] = !p;
      role[{i, 3}] = p;
      for (int s : {1, 3}) {
        int a = tuples[i][s];
        auto [j, q] = other_end(i, s);
        bool want = !role[{i, s}];
        if (q == 0 || q == 2) {
          if (role[{j, q}] != want) {
            throw std::runtime_error("inconsistent orientation at arc " +
                                     std::to_string(a));
          }
        } else {
          stack.push_back({j, (q == 3) == want});
        }
      }
    }
  };

  for (size_t i = 0; i < tuples.size(); ++i) {
    role[{static_cast<int>(i), 0}] = true;
    role[{static_cast<int>(i), 2}] = false;
  }
  for (size_t i = 0; i < tuples.size(); ++i) {
    for (int s : {0, 2}) {
      int a = tuples[i][s];
      auto [j, q] = other_end(static_cast<int>(i), s);
      bool want = !role[{static_cast<int>(i), s}];
      if (q == 0 || q == 2) {
        if (role[{j, q}] != want) {
          throw std::runtime_error("inconsistent orientation at arc " +
                                   std::to_string(a));
        }
      } else {
        assign_over(j, (q == 3) == want);
      }
    }
  }

  // components that never pass under: fall back to the consecutive arc
  // numbering convention (over-strand runs d -> b when b = d+1, with
  // wrap-around at the component's largest label)
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (!pos[i].has_value()) {
      int a = tuples[i][3], b = tuples[i][1];
      assign_over(static_cast<int>(i), b == a + 1 || (b < a && b != a - 1));
    }
  }

  std::vector<Crossing> crossings;
  crossings.reserve(tuples.size());
  for (size_t i = 0; i < tuples.size(); ++i) {
    auto [a, b, c, dd] = tuples[i];
    if (*pos[i]) {
      crossings.push_back({a, c, dd, b, 1});
    } else {
      crossings.push_back({a, c, b, dd, -1});
    }
  }
  Diagram d(std::move(crossings), free_loops);
  d.validate();
  return d;
}

Diagram switch_at(const Diagram& d, int ci) {
  auto cs = d.crossings();
  Crossing& c = cs[ci];
  c = {c.oi, c.oo, c.ui, c.uo, -c.sign};
  return Diagram(std::move(cs), d.free_loops());
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    cs.push_back({c.oi, c.oo, c.ui, c.uo, -c.sign});
  }
  return Diagram(std::move(cs), d.free_loops());
}

Diagram reverse_component(const Diagram& d, int comp_index) {
  const auto& cyc = d.components().at(comp_index);
  std::set<int> arcs(cyc.begin(), cyc.end());
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    bool u_in = arcs.count(c.ui) > 0, o_in = arcs.count(c.oi) > 0;
    Crossing n = c;
    if (u_in) {
      n.ui = c.uo;
      n.uo = c.ui;
    }
    if (o_in) {
      n.oi = c.oo;
      n.oo = c.oi;
    }
    if (u_in != o_in) n.sign = -c.sign;
    cs.push_back(n);
  }
  return Diagram(std::move(cs), d.free_loops());
}

Diagram relabel(const Diagram& d, int offset) {
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    cs.push_back(
        {c.ui + offset, c.uo + offset, c.oi + offset, c.oo + offset, c.sign});
  }
  return Diagram(std::move(cs), d.free_loops());
}

std::pair<Diagram, std::vector<std::vector<int>>> remove_crossings(
    const Diagram& d, const std::set<int>& removed,
    const std::map<int, int>& glue) {
  std::vector<Crossing> keep;
  for (size_t i = 0; i < d.crossings().size(); ++i) {
    if (!removed.count(static_cast<int>(i))) keep.push_back(d.crossings()[i]);
  }
  std::set<int> targets;
  for (const auto& [a, b] : glue) targets.insert(b);

  std::map<int, int> rep;
  std::set<int> visited;
  std::vector<std::vector<int>> cycles;
  for (const auto& [a, _] : glue) {
    if (visited.count(a) || targets.count(a)) continue;
    std::vector<int> chain{a};
    int b = glue.at(a);
    while (glue.count(b)) {
      chain.push_back(b);
      b = glue.at(b);
    }
    chain.push_back(b);
    int final_arc = chain.back();
    for (int x : chain) {
      visited.insert(x);
      rep[x] = final_arc;
    }
  }
  for (const auto& [a, _] : glue) {
    if (visited.count(a)) continue;
    std::vector<int> cyc;
    int b = a;
    while (!visited.count(b)) {
      visited.insert(b);
      cyc.push_back(b);
      b = glue.at(b);
    }
    cycles.push_back(std::move(cyc));
  }
  auto f = [&](int x) {
    auto it = rep.find(x);
    return it == rep.end() ? x : it->second;
  };
  std::vector<Crossing> cs;
  cs.reserve(keep.size());
  for (const auto& c : keep) {
    cs.push_back({f(c.ui), f(c.uo), f(c.oi), f(c.oo), c.sign});
  }
  return {Diagram(std::move(cs),
                  d.free_loops() + static_cast<int>(cycles.size())),
          cycles};
}

std::pair<Diagram, std::vector<std::vector<int>>> smooth(const Diagram& d,
                                                         int ci) {
  const Crossing& c = d.crossings().at(ci);
  return remove_crossings(d, {ci}, {{c.ui, c.oo}, {c.oi, c.uo}});
}

std::pair<Diagram, std::vector<std::vector<int>>> undo_crossing(
    const Diagram& d, int ci) {
  const Crossing& c = d.crossings().at(ci);
  return remove_crossings(d, {ci}, {{c.ui, c.uo}, {c.oi, c.oo}});
}

std::pair<Diagram, std::vector<std::vector<int>>> undo_two(const Diagram& d,
                                                           int ci, int cj) {
  const Crossing& a = d.crossings().at(ci);
  const Crossing& b = d.crossings().at(cj);
  return remove_crossings(
      d, {ci, cj},
      {{a.ui, a.uo}, {a.oi, a.oo}, {b.ui, b.uo}, {b.oi, b.oo}});
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
  if (d.crossings().empty()) return {};
  auto rots = rotations(d);
  std::map<int, std::vector<Dart>> occ;
  for (size_t i = 0; i < rots.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      occ[rots[i][s]].push_back({static_cast<int>(i), s});
    }
  }
  std::map<Dart, Dart> opp;
  for (const auto& [a, ds] : occ) {
    opp[ds[0]] = ds[1];
    opp[ds[1]] = ds[0];
  }
  std::vector<std::vector<Dart>> out;
  std::set<Dart> seen;
  for (const auto& [start, _] : opp) {
    if (seen.count(start)) continue;
    std::vector<Dart> f;
    Dart cur = start;
    while (!seen.count(cur)) {
      seen.insert(cur);
      f.push_back(cur);
      Dart o = opp[cur];
      cur = {o.first, (o.second + 3) % 4};
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> face_arcs(const Diagram& d, const std::vector<Dart>& f) {
  auto rots = rotations(d);
  std::vector<int> out;
  out.reserve(f.size());
  for (const auto& [i, s] : f) out.push_back(rots[i][s]);
  return out;
}

std::vector<std::set<int>> crossing_pieces(const Diagram& d) {
  int n = static_cast<int>(d.crossings().size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::map<int, int> where;
  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossings()[i];
    for (int a : {c.ui, c.uo, c.oi, c.oo}) {
      auto it = where.find(a);
      if (it != where.end()) parent[find(i)] = find(it->second);
      where[a] = i;
    }
  }
  std::map<int, std::set<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].insert(i);
  std::vector<std::set<int>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

bool euler_ok(const Diagram& d) {
  if (d.crossings().empty()) return true;
  auto pieces = crossing_pieces(d);
  auto fcs = faces(d);
  std::map<int, int> owner;  // crossing -> piece index
  for (size_t p = 0; p < pieces.size(); ++p) {
    for (int i : pieces[p]) owner[i] = static_cast<int>(p);
  }
  std::vector<int> fcount(pieces.size(), 0);
  for (const auto& f : fcs) fcount[owner[f[0].first]]++;
  for (size_t p = 0; p < pieces.size(); ++p) {
    int v = static_cast<int>(pieces[p].size());
    if (v - 2 * v + fcount[p] != 2) return false;
  }
  return true;
}

std::vector<int> r1_spots(const Diagram& d) {
  std::vector<int> out;
  for (size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& c = d.crossings()[i];
    if (c.uo == c.oi || c.oo == c.ui) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::pair<int, int>> r2_spots(const Diagram& d) {
  struct Cand {
    int i, j, p, q;
  };
  std::vector<Cand> cands;
  int n = static_cast<int>(d.crossings().size());
  for (int i = 0; i < n; ++i) {
    const auto& a = d.crossings()[i];
    for (int j = i + 1; j < n; ++j) {
      const auto& b = d.crossings()[j];
      std::vector<int> ps, qs;
      if (a.oo == b.oi) ps.push_back(a.oo);
      if (b.oo == a.oi) ps.push_back(b.oo);
      if (a.uo == b.ui) qs.push_back(a.uo);
      if (b.uo == a.ui) qs.push_back(b.uo);
      for (int p : ps) {
        for (int q : qs) {
          if (p != q) cands.push_back({i, j, p, q});
        }
      }
    }
  }
  if (cands.empty()) return {};
  std::set<std::set<int>> bigons;
  for (const auto& f : faces(d)) {
    if (f.size() == 2) {
      auto as = face_arcs(d, f);
      bigons.insert({as[0], as[1]});
    }
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cands) {
    std::pair<int, int> ij{c.i, c.j};
    if (bigons.count({c.p, c.q}) &&
        std::find(out.begin(), out.end(), ij) == out.end()) {
      out.push_back(ij);
    }
  }
  return out;
}

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (true) {
    auto r1 = r1_spots(cur);
    if (!r1.empty()) {
      cur = undo_crossing(cur, r1[0]).first;
      continue;
    }
    auto r2 = r2_spots(cur);
    if (!r2.empty()) {
      cur = undo_two(cur, r2[0].first, r2[0].second).first;
      continue;
    }
    return cur;
  }
}

namespace {

// Shared walk for pick_crossing / bad_crossing_count: visit arcs in
// traversal order, note each crossing the first time either strand reaches
// it; "bad" means first reached on the under-strand.
std::pair<std::optional<int>, int> first_bad(const Diagram& d) {
  std::map<int, std::vector<std::pair<int, bool>>> where;
  for (size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& c = d.crossings()[i];
    where[c.ui].push_back({static_cast<int>(i), true});
    where[c.oi].push_back({static_cast<int>(i), false});
  }
  std::set<int> seen;
  std::optional<int> first;
  int bad = 0;
  for (const auto& cyc : d.components()) {
    for (int a : cyc) {
      auto it = where.find(a);
      if (it == where.end()) continue;
      for (const auto& [i, under] : it->second) {
        if (seen.count(i)) continue;
        seen.insert(i);
        if (under) {
          ++bad;
          if (!first.has_value()) first = i;
        }
      }
    }
  }
  return {first, bad};
}

}  // namespace

std::optional<std::pair<int, int>> pick_crossing(const Diagram& d) {
  auto [first, bad] = first_bad(d);
  if (!first.has_value()) return std::nullopt;
  return std::make_pair(*first, d.crossings()[*first].sign);
}

int bad_crossing_count(const Diagram& d) { return first_bad(d).second; }

Diagram connected_sum(const Diagram& d1, int comp1, const Diagram& d2,
                      int comp2) {
  int off = 0;
  for (const auto& c : d1.crossings()) {
    off = std::max({off, c.ui, c.uo, c.oi, c.oo});
  }
  off += 10;
  Diagram d2r = relabel(d2, off);
  int a1 = d1.components().at(comp1)[0];
  int a2 = d2r.components().at(comp2)[0];
  std::vector<Crossing> cs = d1.crossings();
  cs.insert(cs.end(), d2r.crossings().begin(), d2r.crossings().end());
  for (auto& c : cs) {
    c.ui = c.ui == a1 ? a2 : (c.ui == a2 ? a1 : c.ui);
    c.oi = c.oi == a1 ? a2 : (c.oi == a2 ? a1 : c.oi);
  }
  Diagram out(std::move(cs), d1.free_loops() + d2.free_loops());
  out.validate();
  return out;
}

}  // namespace skeinf
