#ifndef PARTYHECKE_SETPARTITION_HPP
#define PARTYHECKE_SETPARTITION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partyhecke/permutation.hpp"

namespace partyhecke {

// Standard arc: a pair of consecutive points inside one block (0-based).
struct Arc {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Arc& x, const Arc& y) {
    return x.lo == y.lo && x.hi == y.hi;
  }
  friend bool operator<(const Arc& x, const Arc& y) {
    return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi);
  }
};

// Set partition of {0, .., n-1} in canonical form. Internally a restricted
// growth string: rgs[i] is the block index of point i, blocks numbered by
// first appearance, which is the same thing as sorting blocks by their
// minimum. Unique representation, cheap to hash.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(int n);  // all singletons
  static SetPartition from_rgs(std::vector<int> rgs);
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  // The partition whose only nontrivial block is {i, j}.
  static SetPartition pair_block(int i, int j, int n);

  int n() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int i) const { return rgs_[i]; }
  bool same_block(int i, int j) const { return rgs_[i] == rgs_[j]; }
  const std::vector<int>& rgs() const { return rgs_; }
  std::vector<std::vector<int>> blocks() const;
  bool is_identity() const { return blocks_ == n(); }

  // Finest partition coarser than both (lattice join).
  friend SetPartition join(const SetPartition& x, const SetPartition& y);
  // True iff every block of *this is contained in a block of coarser.
  bool refines(const SetPartition& coarser) const;

  std::vector<Arc> standard_arcs() const;
  bool has_arc(int lo, int hi) const;

  // Generator word: per-block chains of standard arcs; joining the
  // pair-block generators back together recovers the partition.
  std::vector<Arc> normal_word() const;

  // Elementwise image under s, re-canonicalized. Left monoid action.
  SetPartition act(const Permutation& s) const;

  // Block sizes in non-increasing order.
  std::vector<int> shape() const;

  friend bool operator==(const SetPartition& x, const SetPartition& y) {
    return x.rgs_ == y.rgs_;
  }
  friend bool operator!=(const SetPartition& x, const SetPartition& y) {
    return !(x == y);
  }
  friend bool operator<(const SetPartition& x, const SetPartition& y) {
    return x.rgs_ < y.rgs_;
  }

  std::string str() const;  // blocks 1-based: "1 3 5|2 4"
  static SetPartition parse(const std::string& text);

  std::uint64_t hash() const;

 private:
  std::vector<int> rgs_;
  int blocks_ = 0;
};

// Number of common standard arcs of x and y; the twisting exponent of the
// party algebra. Symmetric.
int beta(const SetPartition& x, const SetPartition& y);

// All Bell(n) set partitions in lexicographic rgs order.
std::vector<SetPartition> enumerate_partitions(int n, int bound = 7);

}  // namespace partyhecke

#endif
