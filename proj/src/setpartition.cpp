#include "partyhecke/setpartition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partyhecke {

namespace {

// Canonicalize an arbitrary block-index labeling into a restricted growth
// string (blocks renumbered by first appearance).
std::vector<int> canonicalize(const std::vector<int>& labels, int* count_out) {
  std::vector<int> remap(labels.size(), -1);
  std::vector<int> rgs(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int l = labels[i];
    if (remap[l] < 0) remap[l] = next++;
    rgs[i] = remap[l];
  }
  if (count_out) *count_out = next;
  return rgs;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

SetPartition::SetPartition(int n) : rgs_(n), blocks_(n) {
  std::iota(rgs_.begin(), rgs_.end(), 0);
}

SetPartition SetPartition::from_rgs(std::vector<int> rgs) {
  SetPartition p;
  p.rgs_ = canonicalize(rgs, &p.blocks_);
  return p;
}

SetPartition SetPartition::from_blocks(int n,
                                       const std::vector<std::vector<int>>& blocks) {
  std::vector<int> label(n, -1);
  int b = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
    for (int x : block) {
      if (x < 0 || x >= n || label[x] >= 0)
        throw std::invalid_argument("SetPartition: blocks must partition the set");
      label[x] = b;
    }
    ++b;
  }
  for (int x = 0; x < n; ++x)
    if (label[x] < 0)
      throw std::invalid_argument("SetPartition: blocks must cover the set");
  SetPartition p;
  p.rgs_ = canonicalize(label, &p.blocks_);
  return p;
}

SetPartition SetPartition::pair_block(int i, int j, int n) {
  if (i < 0 || j <= i || j >= n)
    throw std::invalid_argument("pair_block: bad indices");
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  label[j] = label[i];
  SetPartition p;
  p.rgs_ = canonicalize(label, &p.blocks_);
  return p;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < n(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

SetPartition join(const SetPartition& x, const SetPartition& y) {
  if (x.n() != y.n()) throw std::invalid_argument("join: mismatched n");
  UnionFind uf(x.n());
  for (int i = 1; i < x.n(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (x.same_block(i, j) || y.same_block(i, j)) uf.unite(i, j);
    }
  }
  std::vector<int> label(x.n());
  for (int i = 0; i < x.n(); ++i) label[i] = uf.find(i);
  SetPartition p;
  p.rgs_ = canonicalize(label, &p.blocks_);
  return p;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n() != coarser.n()) throw std::invalid_argument("refines: mismatched n");
  std::vector<int> image(blocks_, -1);
  for (int i = 0; i < n(); ++i) {
    int b = rgs_[i];
    if (image[b] < 0)
      image[b] = coarser.rgs_[i];
    else if (image[b] != coarser.rgs_[i])
      return false;
  }
  return true;
}

std::vector<Arc> SetPartition::standard_arcs() const {
  std::vector<int> last(blocks_, -1);
  std::vector<Arc> out;
  for (int i = 0; i < n(); ++i) {
    int b = rgs_[i];
    if (last[b] >= 0) out.push_back(Arc{last[b], i});
    last[b] = i;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SetPartition::has_arc(int lo, int hi) const {
  if (rgs_[lo] != rgs_[hi]) return false;
  for (int k = lo + 1; k < hi; ++k)
    if (rgs_[k] == rgs_[lo]) return false;
  return true;
}

std::vector<Arc> SetPartition::normal_word() const {
  std::vector<Arc> out;
  for (const auto& block : blocks()) {
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      out.push_back(Arc{block[k], block[k + 1]});
  }
  return out;
}

SetPartition SetPartition::act(const Permutation& s) const {
  if (s.n() != n()) throw std::invalid_argument("act: mismatched n");
  std::vector<int> label(n());
  for (int i = 0; i < n(); ++i) label[s(i)] = rgs_[i];
  SetPartition p;
  p.rgs_ = canonicalize(label, &p.blocks_);
  return p;
}

std::vector<int> SetPartition::shape() const {
  std::vector<int> sizes(blocks_, 0);
  for (int b : rgs_) ++sizes[b];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::string SetPartition::str() const {
  std::ostringstream os;
  auto bl = blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (b) os << '|';
    for (std::size_t k = 0; k < bl[b].size(); ++k) {
      if (k) os << ' ';
      os << bl[b][k] + 1;
    }
  }
  return os.str();
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::istringstream groups(text);
  std::string part;
  int maxpt = -1;
  while (std::getline(groups, part, '|')) {
    std::istringstream is(part);
    std::vector<int> block;
    int v;
    while (is >> v) {
      block.push_back(v - 1);
      maxpt = std::max(maxpt, v - 1);
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (maxpt < 0) throw std::invalid_argument("SetPartition: empty input");
  return from_blocks(maxpt + 1, blocks);
}

std::uint64_t SetPartition::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (int v : rgs_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

int beta(const SetPartition& x, const SetPartition& y) {
  if (x.n() != y.n()) throw std::invalid_argument("beta: mismatched n");
  auto ax = x.standard_arcs();
  auto ay = y.standard_arcs();
  int common = 0;
  std::size_t i = 0, j = 0;  // both arc lists are sorted
  while (i < ax.size() && j < ay.size()) {
    if (ax[i] == ay[j]) {
      ++common;
      ++i;
      ++j;
    } else if (ax[i] < ay[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return common;
}

std::vector<SetPartition> enumerate_partitions(int n, int bound) {
  if (n > bound) throw std::invalid_argument("enumerate_partitions: bound exceeded");
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> maxv(n, 0);
  // Iterate restricted growth strings in lexicographic order.
  for (;;) {
    out.push_back(SetPartition::from_rgs(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int k = i + 1; k < n; ++k) rgs[k] = 0;
    for (int k = i; k < n; ++k)
      maxv[k] = std::max(k > 0 ? maxv[k - 1] : 0, rgs[k]);
  }
  return out;
}

}  // namespace partyhecke
