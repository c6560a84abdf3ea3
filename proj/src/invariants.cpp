#include "skeinf/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "skeinf/skein.hpp"

namespace skeinf {

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

using nlohmann::json;

void sort_by_text(std::vector<RatFun>& values) {
  std::vector<std::pair<std::string, RatFun>> keyed;
  keyed.reserve(values.size());
  for (auto& v : values) keyed.emplace_back(v.text(), std::move(v));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < keyed.size(); ++i) values[i] = std::move(keyed[i].second);
}

json texts(const std::vector<RatFun>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.text());
  return a;
}

json type_json(const PartitionType& p) {
  json a = json::array();
  for (int b : p) a.push_back(b);
  return a;
}

PartitionType ladder_type(int c) {
  switch (c) {
    case 1:
      return {3};
    case 2:
      return {2, 1};
    case 3:
      return {1, 1, 1};
    default:
      throw std::invalid_argument("sigma: c must be 1, 2 or 3, got " +
                                  std::to_string(c));
  }
}

}  // namespace

std::string FMultiset::text() const {
  std::ostringstream out;
  for (const auto& v : values) out << v.text() << "\n";
  return out.str();
}

std::string FMultiset::json() const {
  nlohmann::json j;
  j["p"] = type_json(p);
  j["c"] = c;
  j["values"] = texts(values);
  return j.dump();
}

FMultiset f_multiset(const Diagram& d, const PartitionType& p, int threads) {
  int n = d.n_components();
  if (std::accumulate(p.begin(), p.end(), 0) != n) {
    throw std::invalid_argument("type " + type_text(p) + " does not sum to " +
                                std::to_string(n) + " components");
  }
  auto cols = partitions_of_type(n, p);
  FMultiset out;
  out.p = p;
  out.c = static_cast<int>(p.size());
  out.values.resize(cols.size());
  parallel_for(static_cast<int>(cols.size()), threads,
               [&](int i) { out.values[i] = eval_colored(d, cols[i]); });
  sort_by_text(out.values);
  return out;
}

namespace {

void descending_parts(int rest, int maxp, PartitionType& cur,
                      std::vector<PartitionType>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, maxp); p >= 1; --p) {
    cur.push_back(p);
    descending_parts(rest - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PartitionType> all_types(int n) {
  std::vector<PartitionType> out;
  PartitionType cur;
  if (n > 0) descending_parts(n, n, cur, out);
  return out;
}

RatFun sigma(const Diagram& d, int c, int threads) {
  if (d.n_components() != 3) {
    throw std::invalid_argument("sigma is defined for three-component links");
  }
  auto ms = f_multiset(d, ladder_type(c), threads);
  RatFun sum;
  for (const auto& v : ms.values) sum = sum + v;
  return sum;
}

PairReport compare_pair(const std::string& id1, const Diagram& d1,
                        const std::string& id2, const Diagram& d2,
                        const std::vector<PartitionType>& types, int threads) {
  if (d1.n_components() != d2.n_components()) {
    throw std::invalid_argument("component counts differ: " +
                                std::to_string(d1.n_components()) + " vs " +
                                std::to_string(d2.n_components()));
  }
  PairReport rep;
  rep.id1 = id1;
  rep.id2 = id2;
  for (const auto& p : types) {
    TypeVerdict v;
    v.p = p;
    v.values_l1 = f_multiset(d1, p, threads).values;
    v.values_l2 = f_multiset(d2, p, threads).values;
    v.equal = v.values_l1 == v.values_l2;
    if (!v.equal) rep.distinguished = true;
    rep.per_type.push_back(std::move(v));
  }
  if (d1.n_components() == 3) {
    std::vector<RatFun> sums(6);
    parallel_for(6, threads, [&](int i) {
      sums[i] = sigma(i < 3 ? d1 : d2, i % 3 + 1, 1);
    });
    for (int c = 1; c <= 3; ++c) {
      rep.sigma.push_back({c, sums[c - 1], sums[3 + c - 1]});
    }
    ConjectureReport cj;
    cj.precondition_met = sums[0] == sums[3];
    cj.residual = (sums[2] - sums[1]) - (sums[5] - sums[4]);
    rep.conjecture = cj;
  }
  return rep;
}

std::pair<bool, RatFun> conjecture_residual(const Diagram& d1,
                                            const Diagram& d2, int threads) {
  if (d1.n_components() != 3 || d2.n_components() != 3) {
    throw std::invalid_argument(
        "the conjecture concerns three-component links");
  }
  std::vector<RatFun> sums(6);
  parallel_for(6, threads,
               [&](int i) { sums[i] = sigma(i < 3 ? d1 : d2, i % 3 + 1, 1); });
  bool pre = sums[0] == sums[3];
  RatFun residual = (sums[2] - sums[1]) - (sums[5] - sums[4]);
  return {pre, residual};
}

bool homflypt_check(const Diagram& d) {
  RatFun f1 = eval_mono(d);
  for (const auto& [m, c] : f1.num().terms()) {
    if (m.ex != 0) return false;
  }
  try {
    substitute_jones(f1);
  } catch (const std::domain_error&) {
    return false;
  }
  // Eq-(3) check: l*P+ + (1/l)*P- + m*P0 = 0 with l = i/(w sqrt(t)),
  // m = i(1/sqrt(t) - sqrt(t)) is, after multiplying through by the unit
  // -i*w*sqrt(t), exactly F+ = t w^2 F- + w(t-1) F0.  Verify that form at
  // every crossing, each side evaluated independently.
  std::vector<int> mono(d.n_components(), 0);
  for (size_t ci = 0; ci < d.crossings().size(); ++ci) {
    State st = colored(d, mono);
    const auto& cr = d.crossings()[ci];
    State plus = cr.sign > 0 ? st : switch_state(st, static_cast<int>(ci));
    State minus = cr.sign > 0 ? switch_state(st, static_cast<int>(ci)) : st;
    State zero = smooth_state(st, static_cast<int>(ci));
    Memo m1, m2, m3;
    RatFun lhs = eval_state(plus, m1);
    RatFun rhs = coeffs::tw2() * eval_state(minus, m2) +
                 coeffs::t_minus_1() * coeffs::w() * eval_state(zero, m3);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::string PairReport::text() const {
  std::ostringstream out;
  out << id1 << "  vs  " << id2 << "\n";
  for (const auto& v : per_type) {
    out << "F^" << v.p.size() << "_" << type_text(v.p) << ": "
        << (v.equal ? "equal" : "different") << "\n";
    out << "  " << id1 << ":\n";
    for (const auto& r : v.values_l1) out << "    " << r.text() << "\n";
    out << "  " << id2 << ":\n";
    for (const auto& r : v.values_l2) out << "    " << r.text() << "\n";
  }
  for (const auto& s : sigma) {
    out << "Sigma^" << s.c << ": " << s.l1.text() << "  |  " << s.l2.text()
        << "\n";
  }
  if (conjecture) {
    out << "conjecture: precondition "
        << (conjecture->precondition_met ? "met" : "not met")
        << ", residual = " << conjecture->residual.text() << "\n";
  }
  out << "verdict: " << (distinguished ? "distinguished" : "not distinguished")
      << "\n";
  return out.str();
}

std::string PairReport::json() const {
  nlohmann::json j;
  j["links"] = {id1, id2};
  j["per_type"] = nlohmann::json::array();
  for (const auto& v : per_type) {
    nlohmann::json tv;
    tv["p"] = type_json(v.p);
    tv["equal"] = v.equal;
    tv["values_L1"] = texts(v.values_l1);
    tv["values_L2"] = texts(v.values_l2);
    j["per_type"].push_back(tv);
  }
  j["distinguished"] = distinguished;
  j["sigma"] = nlohmann::json::object();
  for (const auto& s : sigma) {
    j["sigma"][std::to_string(s.c)] = {{"L1", s.l1.text()},
                                       {"L2", s.l2.text()}};
  }
  if (conjecture) {
    j["conjecture"] = {{"precondition_met", conjecture->precondition_met},
                       {"residual", conjecture->residual.text()}};
  } else {
    j["conjecture"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace skeinf
