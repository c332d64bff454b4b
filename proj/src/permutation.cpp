#include "partyhecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partyhecke {

Permutation::Permutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw std::invalid_argument("Permutation: mismatched n");
  std::vector<int> out(s.n());
  for (int i = 0; i < s.n(); ++i) out[i] = s.img_[t.img_[i]];
  Permutation r;
  r.img_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(n());
  for (int i = 0; i < n(); ++i) out[img_[i]] = i;
  Permutation r;
  r.img_ = std::move(out);
  return r;
}

int Permutation::length() const {
  int len = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++len;
  return len;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
  std::vector<std::pair<int, int>> out;
  int len = length();
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) {
      if ((transposition(i, j, n()) * *this).length() < len)
        out.emplace_back(i, j);
    }
  }
  return out;
}

bool Permutation::is_inversion(int i, int j) const {
  // value j before value i <=> s^{-1}(j) < s^{-1}(i)
  int pi = -1, pj = -1;
  for (int k = 0; k < n(); ++k) {
    if (img_[k] == i) pi = k;
    if (img_[k] == j) pj = k;
  }
  return pj < pi;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation u = *this;
  int len = u.length();
  while (len > 0) {
    for (int k = 0; k + 1 < n(); ++k) {
      Permutation v = elementary(k, n()) * u;
      int lv = v.length();
      if (lv < len) {
        word.push_back(k);
        u = std::move(v);
        len = lv;
        break;
      }
    }
  }
  return word;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (i) os << ' ';
    os << img_[i] + 1;
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> img;
  int v;
  while (is >> v) img.push_back(v - 1);
  if (img.empty()) throw std::invalid_argument("Permutation: empty input");
  return Permutation(std::move(img));
}

std::uint64_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : img_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation elementary(int k, int n) {
  if (k < 0 || k + 1 >= n)
    throw std::invalid_argument("elementary: index out of range");
  Permutation s(n);
  std::vector<int> img = s.images();
  std::swap(img[k], img[k + 1]);
  return Permutation(std::move(img));
}

Permutation transposition(int i, int j, int n) {
  if (i < 0 || j <= i || j >= n)
    throw std::invalid_argument("transposition: bad indices");
  Permutation s(n);
  std::vector<int> img = s.images();
  std::swap(img[i], img[j]);
  return Permutation(std::move(img));
}

Permutation order_swap(const std::vector<int>& a, const std::vector<int>& b,
                       int n) {
  if (a.size() != b.size())
    throw std::invalid_argument("order_swap: |A| != |B|");
  std::vector<int> as = a, bs = b;
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t k = 0; k < as.size(); ++k) {
    if (as[k] < 0 || as[k] >= n || bs[k] < 0 || bs[k] >= n)
      throw std::invalid_argument("order_swap: point out of range");
    img[as[k]] = bs[k];
    img[bs[k]] = as[k];
  }
  // Overlap would have made img a non-bijection; the ctor validates.
  return Permutation(std::move(img));
}

std::vector<Permutation> enumerate_permutations(int n, int bound) {
  if (n > bound) throw std::invalid_argument("enumerate_permutations: bound exceeded");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace partyhecke
