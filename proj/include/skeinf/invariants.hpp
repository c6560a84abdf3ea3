#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinf/coloring.hpp"
#include "skeinf/diagram.hpp"
#include "skeinf/ratfun.hpp"

namespace skeinf {

// F over every type-p coloration, canonicalized by sorting the serialized
// values, so multisets compare with ==.
struct FMultiset {
  PartitionType p;
  int c = 0;
  std::vector<RatFun> values;

  friend bool operator==(const FMultiset&, const FMultiset&) = default;
  std::string text() const;  // one value per line
  std::string json() const;
};

// Colorations of one multiset are independent evaluations; threads > 1
// spreads them over a small worker pool, the sort keeps output identical.
FMultiset f_multiset(const Diagram& d, const PartitionType& p,
                     int threads = 1);

// Integer partitions of n, coarsest first: (n), (n-1,1), ..., (1,...,1).
std::vector<PartitionType> all_types(int n);

// Runs fn(0..n-1) on a small pool; indices are handed out by an atomic
// counter, so completion order is arbitrary and results must be stored by
// index. The first exception wins and is rethrown after the join.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

// Sum of the F^c multiset. Only the three-component ladder
// c = 1, 2, 3 -> p = (3), (2,1), (1,1,1) is defined.
RatFun sigma(const Diagram& d, int c, int threads = 1);

struct TypeVerdict {
  PartitionType p;
  bool equal = false;
  std::vector<RatFun> values_l1;
  std::vector<RatFun> values_l2;
};

struct SigmaPair {
  int c = 0;
  RatFun l1;
  RatFun l2;
};

struct ConjectureReport {
  bool precondition_met = false;
  RatFun residual;
};

struct PairReport {
  std::string id1;
  std::string id2;
  std::vector<TypeVerdict> per_type;
  bool distinguished = false;
  std::vector<SigmaPair> sigma;  // three-component pairs only
  std::optional<ConjectureReport> conjecture;

  std::string text() const;
  std::string json() const;
};

// Multiset comparison over the requested types, plus the sigma ladder and
// conjecture residual when both links have three components.
PairReport compare_pair(const std::string& id1, const Diagram& d1,
                        const std::string& id2, const Diagram& d2,
                        const std::vector<PartitionType>& types,
                        int threads = 1);

// (precondition_met, residual): precondition is sigma^1 equality, residual
// is (sigma^3 - sigma^2)(L1) - (sigma^3 - sigma^2)(L2). The conjecture
// predicts a zero residual whenever the precondition holds.
std::pair<bool, RatFun> conjecture_residual(const Diagram& d1,
                                            const Diagram& d2,
                                            int threads = 1);

// The monochrome value is a homflypt specialization: it must be x-free,
// survive the w = t^(1/2) substitution, and satisfy the two-term relation
// at every crossing with all three diagrams evaluated from scratch.
bool homflypt_check(const Diagram& d);

}  // namespace skeinf
