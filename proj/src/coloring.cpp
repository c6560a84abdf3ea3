#include "skeinf/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skeinf {

Coloration Coloration::of(const std::vector<int>& labels) {
  Coloration col;
  std::map<int, int> seen;
  col.block_of.reserve(labels.size());
  for (int v : labels) {
    auto [it, fresh] = seen.insert({v, static_cast<int>(seen.size())});
    (void)fresh;
    col.block_of.push_back(it->second);
  }
  col.c = static_cast<int>(seen.size());
  return col;
}

std::string Coloration::text() const {
  std::ostringstream out;
  for (size_t i = 0; i < block_of.size(); ++i) {
    if (i) out << ',';
    out << block_of[i];
  }
  return out.str();
}

std::vector<Coloration> all_set_partitions(int n) {
  if (n < 1 || n > 12) {
    throw std::domain_error("component count " + std::to_string(n) +
                            " out of range 1..12");
  }
  std::vector<Coloration> out;
  std::vector<int> a(n, 0);
  // iterate restricted growth strings in lex order
  while (true) {
    out.push_back(Coloration::of(a));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) break;
      a[i] = 0;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

std::vector<Coloration> partitions_of_type(int n, const PartitionType& p) {
  std::vector<Coloration> out;
  for (const auto& col : all_set_partitions(n)) {
    if (type_of(col) == p) out.push_back(col);
  }
  return out;
}

long long bell_number(int n) {
  if (n < 0 || n > 20) throw std::domain_error("bell number out of range");
  // Bell triangle
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

PartitionType type_of(const Coloration& col) {
  std::vector<int> sizes(col.c, 0);
  for (int b : col.block_of) ++sizes[b];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::string type_text(const PartitionType& p) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  out << ')';
  return out.str();
}

Coloration merge_colors(const Coloration& col, int a, int b) {
  if (a == b) throw std::invalid_argument("merge_colors needs two blocks");
  if (a < 0 || b < 0 || a >= col.c || b >= col.c) {
    throw std::invalid_argument("merge_colors: no such block");
  }
  std::vector<int> labels = col.block_of;
  for (int& v : labels) {
    if (v == b) v = a;
  }
  return Coloration::of(labels);
}

Coloration restrict_after_merge(const Coloration& col, int i, int j) {
  int hi = std::max(i, j);
  std::vector<int> labels;
  for (int k = 0; k < col.n(); ++k) {
    if (k != hi) labels.push_back(col.block_of[k]);
  }
  return Coloration::of(labels);
}

Coloration restrict_after_split(const Coloration& col, int i) {
  std::vector<int> labels = col.block_of;
  labels.insert(labels.begin() + i + 1, labels[i]);
  return Coloration::of(labels);
}

Coloration parse_colors(const std::string& text, int n) {
  std::vector<int> labels;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
    if (pos != cur.size()) throw std::invalid_argument("bad color entry: " + cur);
    labels.push_back(v);
  }
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument(
        "coloration lists " + std::to_string(labels.size()) +
        " components, diagram has " + std::to_string(n));
  }
  return Coloration::of(labels);
}

PartitionType parse_type(const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char ch) {
    return ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch));
  });
  PartitionType p;
  std::string cur;
  std::istringstream in(body);
  while (std::getline(in, cur, ',')) {
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size() || v < 1) {
      throw std::invalid_argument("bad partition part: " + cur);
    }
    p.push_back(v);
  }
  if (p.empty()) throw std::invalid_argument("empty partition type");
  if (!std::is_sorted(p.rbegin(), p.rend())) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  return p;
}

}  // namespace skeinf
