#ifndef PARTYHECKE_DIAGRAM_HPP
#define PARTYHECKE_DIAGRAM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partyhecke/setpartition.hpp"

namespace partyhecke {

// Element of the partition monoid: a set partition of {0, .., 2n-1} where
// points 0..n-1 are the top row and n..2n-1 the bottom row. Concatenation
// stacks the left factor on top of the right one.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n);  // identity: blocks {i, n+i}
  static Diagram from_partition(int n, SetPartition p);
  static Diagram from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int n() const { return n_; }
  const SetPartition& partition() const { return part_; }

  SetPartition top_partition() const;
  SetPartition bottom_partition() const;
  // Every block has equally many top and bottom points.
  bool is_uniform() const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.n_ == y.n_ && x.part_ == y.part_;
  }
  friend bool operator!=(const Diagram& x, const Diagram& y) { return !(x == y); }
  friend bool operator<(const Diagram& x, const Diagram& y) {
    return x.part_ < y.part_;
  }

  std::string str() const;  // blocks over 1..2n: "1 2 4 5|3 6"
  static Diagram parse(int n, const std::string& text);
  std::uint64_t hash() const { return part_.hash(); }

 private:
  int n_ = 0;
  SetPartition part_;
};

struct ConcatResult {
  Diagram diagram;
  int alpha = 0;  // middle components removed by the concatenation
};

ConcatResult concat(const Diagram& x, const Diagram& y);

// Generator diagrams.
Diagram diagram_identity(int n);
Diagram diagram_s(int k, int n);              // elementary transposition
Diagram diagram_f(int k, int n);              // party generator f_{k,k+1}
Diagram diagram_t(int k, int n);              // tangle {k,k+1 | top}, {k,k+1 | bottom}
Diagram diagram_f_pair(int i, int j, int n);  // block {i, j, n+i, n+j}
Diagram diagram_s_pair(int i, int j, int n);  // transposition swapping i, j
Diagram diagram_of_permutation(const Permutation& s);
Diagram diagram_of_setpartition(const SetPartition& p);

// Breadth-first closure of the submonoid generated by `gens` (identity
// included), deterministic order. Splits each frontier generation across
// threads; insertion into the seen-set is serialized in frontier order so
// that the result and its ordering match closure_serial exactly.
std::vector<Diagram> closure(const std::vector<Diagram>& gens,
                             std::size_t cap = 1000000);
std::vector<Diagram> closure_serial(const std::vector<Diagram>& gens,
                                    std::size_t cap = 1000000);

// Standard generating sets.
std::vector<Diagram> party_generators(int n);       // s_i, f_i
std::vector<Diagram> brauer_generators(int n);      // s_i, t_i
std::vector<Diagram> jones_generators(int n);       // t_i
std::vector<Diagram> tonal2_generators(int n);      // s_i, t_i, f_i
std::vector<Diagram> partition_generators(int n);   // s_i, f_i, t_i, and e_1

// Full partition monoid (closure of partition_generators).
std::vector<Diagram> enumerate_partition_monoid(int n, std::size_t cap = 1000000);

}  // namespace partyhecke

#endif
