#ifndef PARTYHECKE_PERMUTATION_HPP
#define PARTYHECKE_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace partyhecke {

// Element of the symmetric group on {0, .., n-1}, stored in one-line
// notation: image(i) is where i goes. Composition is function composition,
// (s * t)(x) = s(t(x)); with the diagram convention used throughout
// (top point i joined to bottom point s^{-1}(i), left factor stacked on
// top) this matches diagram concatenation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  Permutation inverse() const;
  friend bool operator==(const Permutation& s, const Permutation& t) {
    return s.img_ == t.img_;
  }
  friend bool operator!=(const Permutation& s, const Permutation& t) {
    return !(s == t);
  }
  friend bool operator<(const Permutation& s, const Permutation& t) {
    return s.img_ < t.img_;
  }

  // Coxeter length = number of one-line inversions.
  int length() const;

  // Inversion pairs (i, j), i < j, defined convention-free through the
  // length test: (i, j) is an inversion iff left-multiplying by the
  // transposition swapping the values i and j shortens the permutation.
  std::vector<std::pair<int, int>> inversions() const;

  // Fast equivalent of the length test above: (i, j) is an inversion iff
  // the value j occurs before the value i in one-line notation. The
  // equivalence is property-tested exhaustively for n <= 5.
  bool is_inversion(int i, int j) const;

  // Deterministic reduced word: repeatedly strip the smallest elementary
  // generator that shortens from the left. Letters compose left to right:
  // s = s_{w[0]} * s_{w[1]} * ... * s_{w[k-1]}.
  std::vector<int> reduced_word() const;

  std::string str() const;  // one-line, 1-based: "2 1 3"
  static Permutation parse(const std::string& text);

  std::uint64_t hash() const;

 private:
  std::vector<int> img_;
};

// Elementary transposition s_k swapping k and k+1 (0-based k < n-1).
Permutation elementary(int k, int n);

// Transposition swapping i and j (0-based, i < j); equals the conjugated
// word s_{j-1} .. s_{i+1} s_i s_{i+1} .. s_{j-1}.
Permutation transposition(int i, int j, int n);

// The unique permutation that is order-preserving on both A and B, maps A
// onto B (and so B onto A), and fixes everything else. A, B disjoint and
// of equal size.
Permutation order_swap(const std::vector<int>& a, const std::vector<int>& b,
                       int n);

// All n! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate_permutations(int n, int bound = 8);

}  // namespace partyhecke

#endif
