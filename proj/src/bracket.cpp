#include "skeinf/bracket.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace skeinf {

namespace {

int find_root(std::map<int, int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SPoly bracket_jones(const Diagram& d) {
  auto tuples = d.pd_tuples();
  int n = static_cast<int>(tuples.size());
  if (n > 24) throw std::domain_error("bracket state sum too large");
  std::set<int> arcs;
  for (const auto& t : tuples) arcs.insert(t.begin(), t.end());

  // bracket polynomial in A: exponent -> coefficient
  std::map<int, mpz_class> poly;
  for (long state = 0; state < (1L << n); ++state) {
    std::map<int, int> parent;
    for (int a : arcs) parent[a] = a;
    auto join = [&](int x, int y) {
      parent[find_root(parent, x)] = find_root(parent, y);
    };
    int ab = 0;
    for (int i = 0; i < n; ++i) {
      const auto& t = tuples[i];
      if (state >> i & 1) {  // A-smoothing
        join(t[0], t[1]);
        join(t[2], t[3]);
        ++ab;
      } else {  // B-smoothing
        join(t[0], t[3]);
        join(t[1], t[2]);
        --ab;
      }
    }
    std::set<int> roots;
    for (int a : arcs) roots.insert(find_root(parent, a));
    int loops = static_cast<int>(roots.size()) + d.free_loops();

    // A^ab * (-A^2 - A^-2)^(loops-1)
    std::map<int, mpz_class> term{{ab, 1}};
    for (int k = 1; k < loops; ++k) {
      std::map<int, mpz_class> nt;
      for (const auto& [e, co] : term) {
        nt[e + 2] -= co;
        nt[e - 2] -= co;
      }
      term = std::move(nt);
    }
    for (const auto& [e, co] : term) poly[e] += co;
  }

  // V = (-A)^(-3w) * <D>, then s = A^-2
  int w = d.writhe();
  SPoly out;
  for (const auto& [e, co] : poly) {
    if (co == 0) continue;
    int shifted = e - 3 * w;
    if (shifted % 2 != 0) throw std::logic_error("odd A-exponent in Jones value");
    mpz_class c = (w % 2) ? mpz_class(-co) : co;
    out.add_term(-shifted / 2, c);
  }
  return out;
}

}  // namespace skeinf
