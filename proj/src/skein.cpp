#include "skeinf/skein.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace skeinf {

using nlohmann::json;

State::State(Diagram d_, std::map<int, int> col_, std::vector<int> loops_)
    : d(std::move(d_)), col(std::move(col_)), loops(std::move(loops_)) {
  std::sort(loops.begin(), loops.end());
  if (d.free_loops() != static_cast<int>(loops.size())) {
    throw std::logic_error("loop colors out of step with diagram");
  }
  for (const auto& cr : d.crossings()) {
    for (int a : {cr.ui, cr.uo, cr.oi, cr.oo}) {
      if (!col.count(a)) {
        throw std::logic_error("arc " + std::to_string(a) + " has no color");
      }
    }
  }
}

State colored(const Diagram& d, const std::vector<int>& comp_colors) {
  const auto& comps = d.components();
  int ncomp = d.n_components();
  if (static_cast<int>(comp_colors.size()) != ncomp) {
    throw std::invalid_argument(
        "coloration lists " + std::to_string(comp_colors.size()) +
        " components, diagram has " + std::to_string(ncomp));
  }
  std::map<int, int> col;
  for (size_t i = 0; i < comps.size(); ++i) {
    for (int a : comps[i]) col[a] = comp_colors[i];
  }
  std::vector<int> loops(comp_colors.begin() + comps.size(),
                         comp_colors.end());
  return State(d, std::move(col), std::move(loops));
}

State switch_state(const State& st, int ci) {
  return State(switch_at(st.d, ci), st.col, st.loops);
}

namespace {

std::map<int, int> restrict_colors(const Diagram& d,
                                   const std::map<int, int>& col) {
  std::map<int, int> out;
  for (const auto& cr : d.crossings()) {
    for (int a : {cr.ui, cr.uo, cr.oi, cr.oo}) out[a] = col.at(a);
  }
  return out;
}

int circle_color(const std::vector<int>& cycle, const std::map<int, int>& col) {
  int c = col.at(cycle.front());
  for (int a : cycle) {
    if (col.at(a) != c) {
      throw std::logic_error("removed circle has mixed colors");
    }
  }
  return c;
}

}  // namespace

State smooth_state(const State& st, int ci) {
  const auto& cr = st.d.crossings().at(ci);
  if (st.col.at(cr.ui) != st.col.at(cr.oi)) {
    throw std::logic_error("smoothing strands of different colors");
  }
  int c = st.col.at(cr.ui);
  auto [d2, cycles] = smooth(st.d, ci);
  std::vector<int> loops = st.loops;
  loops.insert(loops.end(), cycles.size(), c);
  return State(d2, restrict_colors(d2, st.col), std::move(loops));
}

State recolor(const State& st, int a, int b) {
  int lo = std::min(a, b), hi = std::max(a, b);
  std::map<int, int> col = st.col;
  for (auto& [arc, c] : col) {
    if (c == hi) c = lo;
  }
  std::vector<int> loops = st.loops;
  for (int& c : loops) {
    if (c == hi) c = lo;
  }
  return State(st.d, std::move(col), std::move(loops));
}

State simplify_state(const State& st) {
  Diagram d = st.d;
  std::map<int, int> col = st.col;
  std::vector<int> loops = st.loops;
  while (true) {
    auto r1 = r1_spots(d);
    if (!r1.empty()) {
      int c = col.at(d.crossings()[r1[0]].ui);
      auto [d2, cycles] = undo_crossing(d, r1[0]);
      loops.insert(loops.end(), cycles.size(), c);
      col = restrict_colors(d2, col);
      d = std::move(d2);
      continue;
    }
    auto r2 = r2_spots(d);
    if (!r2.empty()) {
      auto [d2, cycles] = undo_two(d, r2[0].first, r2[0].second);
      for (const auto& cyc : cycles) loops.push_back(circle_color(cyc, col));
      col = restrict_colors(d2, col);
      d = std::move(d2);
      continue;
    }
    return State(std::move(d), std::move(col), std::move(loops));
  }
}

std::pair<State, RatFun> absorb_loops(const State& st0) {
  RatFun factor = coeffs::one();
  State st = st0;
  while (!st.loops.empty() &&
         (!st.d.crossings().empty() || st.loops.size() > 1)) {
    std::vector<int> rest(st.loops.begin(), st.loops.end() - 1);
    int c = st.loops.back();
    bool shared = std::find(rest.begin(), rest.end(), c) != rest.end();
    if (!shared) {
      for (const auto& [arc, v] : st.col) {
        if (v == c) {
          shared = true;
          break;
        }
      }
    }
    factor = factor * (shared ? coeffs::y_over_wx() : coeffs::inv_wx());
    Diagram trimmed(st.d.crossings(), static_cast<int>(rest.size()));
    st = State(std::move(trimmed), st.col, std::move(rest));
  }
  return {st, factor};
}

std::vector<int> traversal(const Diagram& d) {
  std::vector<int> order;
  for (const auto& cyc : d.components()) {
    order.insert(order.end(), cyc.begin(), cyc.end());
  }
  return order;
}

std::pair<std::optional<int>, int> first_bad(const State& st) {
  // head role of each arc: the crossing it runs into, and on which strand
  std::map<int, std::pair<int, bool>> where;
  const auto& crs = st.d.crossings();
  for (size_t i = 0; i < crs.size(); ++i) {
    where[crs[i].ui] = {static_cast<int>(i), true};
    where[crs[i].oi] = {static_cast<int>(i), false};
  }
  std::set<int> seen;
  std::optional<int> first;
  int bad = 0;
  for (int a : traversal(st.d)) {
    auto [i, under] = where.at(a);
    if (!seen.insert(i).second) continue;
    if (under) {
      ++bad;
      if (!first) first = i;
    }
  }
  return {first, bad};
}

namespace {

void put(std::string& s, int v) {
  auto u = static_cast<unsigned>(v);
  for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>(u >> (8 * k)));
}

int setdefault(std::map<int, int>& m, int key) {
  return m.insert({key, static_cast<int>(m.size())}).first->second;
}

}  // namespace

std::string memo_key(const State& st) {
  struct Head {
    int i;
    bool under;
    int sg;
  };
  std::map<int, Head> head;
  const auto& crs = st.d.crossings();
  for (size_t i = 0; i < crs.size(); ++i) {
    head[crs[i].ui] = {static_cast<int>(i), true, crs[i].sign};
    head[crs[i].oi] = {static_cast<int>(i), false, crs[i].sign};
  }
  std::map<int, int> fvi, colmap;
  std::string s;
  for (const auto& cyc : st.d.components()) {
    put(s, -1);
    put(s, setdefault(colmap, st.col.at(cyc.front())));
    for (int a : cyc) {
      const Head& h = head.at(a);
      put(s, setdefault(fvi, h.i) * 4 + (h.under ? 2 : 0) + (h.sg > 0 ? 1 : 0));
    }
  }
  std::vector<int> ls;
  ls.reserve(st.loops.size());
  for (int c : st.loops) ls.push_back(setdefault(colmap, c));
  std::sort(ls.begin(), ls.end());
  for (int k : ls) {
    put(s, -2);
    put(s, k);
  }
  return s;
}

namespace {

RatFun eval_node(const State& st_in, Memo& memo, json* node) {
  State st = simplify_state(st_in);
  std::string key = memo_key(st);
  if (node) {
    (*node)["diagram"] = st.d.to_string();
    json comp_cols = json::array();
    for (const auto& cyc : st.d.components()) {
      comp_cols.push_back(st.col.at(cyc.front()));
    }
    (*node)["colors"] = {{"components", comp_cols}, {"loops", st.loops}};
  }
  if (auto it = memo.find(key); it != memo.end()) {
    if (node) {
      (*node)["rule"] = "memo";
      (*node)["value"] = it->second.text();
    }
    return it->second;
  }

  auto [ci, bad] = first_bad(st);
  (void)bad;
  RatFun val;
  if (!ci.has_value()) {
    // descending diagram: an unlink
    int n = static_cast<int>(st.d.components().size() + st.loops.size());
    if (n == 0) {
      val = coeffs::one();
    } else {
      std::set<int> cols(st.loops.begin(), st.loops.end());
      for (const auto& cyc : st.d.components()) cols.insert(st.col.at(cyc.front()));
      val = unlink_value(n, static_cast<int>(cols.size()));
    }
    if (node) (*node)["rule"] = "unlink";
  } else {
    const auto& cr = st.d.crossings()[*ci];
    int cu = st.col.at(cr.ui), co = st.col.at(cr.oi);
    const char* rule;
    std::vector<RatFun> ws;
    std::vector<State> children;
    if (cu == co) {
      rule = "IV";
      if (cr.sign > 0) {
        ws = {coeffs::tw2(), coeffs::t_minus_1() * coeffs::w()};
      } else {
        ws = {coeffs::tw2_inv(), coeffs::tinv_minus_1() * coeffs::w_inv()};
      }
      children = {switch_state(st, *ci), smooth_state(st, *ci)};
    } else {
      State merged = recolor(st, cu, co);
      auto a = cr.sign > 0 ? coeffs::va() : coeffs::vb();
      rule = cr.sign > 0 ? "Va" : "Vb";
      ws = {a[0], a[1], a[2]};
      children = {switch_state(st, *ci), switch_state(merged, *ci),
                  smooth_state(merged, *ci)};
    }
    json kids = json::array();
    for (size_t k = 0; k < children.size(); ++k) {
      json kid;
      RatFun sub = eval_node(children[k], memo, node ? &kid : nullptr);
      val = val + ws[k] * sub;
      if (node) kids.push_back(std::move(kid));
    }
    if (node) {
      (*node)["rule"] = rule;
      json cfs = json::array();
      for (const auto& w : ws) cfs.push_back(w.text());
      (*node)["coefficients"] = std::move(cfs);
      (*node)["children"] = std::move(kids);
    }
  }
  memo.emplace(std::move(key), val);
  if (node) (*node)["value"] = val.text();
  return val;
}

}  // namespace

RatFun eval_state(const State& st, Memo& memo, std::string* trace) {
  if (!trace) return eval_node(st, memo, nullptr);
  json root;
  RatFun v = eval_node(st, memo, &root);
  *trace = root.dump(1);
  return v;
}

RatFun eval_colored(const Diagram& d, const std::vector<int>& comp_colors,
                    std::string* trace) {
  Memo memo;
  return eval_state(colored(d, comp_colors), memo, trace);
}

RatFun eval_colored(const Diagram& d, const Coloration& col,
                    std::string* trace) {
  return eval_colored(d, col.block_of, trace);
}

RatFun eval_mono(const Diagram& d) {
  return eval_colored(d, std::vector<int>(d.n_components(), 0));
}

bool verify_skein_identity(const Diagram& d,
                           const std::vector<int>& comp_colors, int ci) {
  State st = colored(d, comp_colors);
  const auto& cr = st.d.crossings().at(ci);
  State plus = cr.sign > 0 ? st : switch_state(st, ci);
  State minus = cr.sign > 0 ? switch_state(st, ci) : st;
  int cu = st.col.at(cr.ui), co = st.col.at(cr.oi);
  State merged = cu != co ? recolor(st, cu, co) : st;
  State plus_m = cr.sign > 0 ? merged : switch_state(merged, ci);
  State tilde = smooth_state(merged, ci);

  RatFun omt = coeffs::one() - RatFun::mono(0, 0, -1);  // 1 - 1/t
  Memo m1, m2, m3, m4;
  RatFun lhs = coeffs::w_inv() * eval_state(plus, m1) -
               coeffs::w() * eval_state(minus, m2);
  RatFun rhs = omt * eval_state(tilde, m3) +
               coeffs::w_inv() * omt * eval_state(plus_m, m4);
  return lhs == rhs;
}

}  // namespace skeinf
