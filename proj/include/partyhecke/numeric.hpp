#ifndef PARTYHECKE_NUMERIC_HPP
#define PARTYHECKE_NUMERIC_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace partyhecke {

// Prime-field element. The modulus travels with the value so that generic
// coefficient code (templated on the field) needs no external context.
// Operations between two nonzero-modulus values require equal moduli; a
// default-constructed zero combines with anything.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t m = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), m(modulus) {}

  static std::uint64_t merge_mod(const Fp& a, const Fp& b) {
    if (a.m != 0 && b.m != 0 && a.m != b.m)
      throw std::invalid_argument("Fp: mixed moduli");
    return a.m != 0 ? a.m : b.m;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = merge_mod(a, b);
    if (m == 0) return Fp{};
    std::uint64_t s = a.v + b.v;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = merge_mod(a, b);
    if (m == 0) return Fp{};
    return Fp(a.v >= b.v ? a.v - b.v : a.v + m - b.v, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = merge_mod(a, b);
    if (m == 0) return Fp{};
    return Fp(static_cast<std::uint64_t>(
                  static_cast<unsigned __int128>(a.v) * b.v % m),
              m);
  }
  Fp pow(std::uint64_t e) const {
    Fp r(1, m), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(m - 2);  // modulus is prime
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    std::uint64_t m = merge_mod(a, b);
    if (m == 0) throw std::domain_error("Fp: division in the zero field");
    Fp bb(b.v, m);
    return Fp(a.v, m) * bb.inv();
  }
  friend Fp operator-(const Fp& a) {
    if (a.m == 0) return a;
    return Fp(a.v == 0 ? 0 : a.m - a.v, a.m);
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }
  bool is_zero() const { return v == 0; }
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  if (n < 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

// All randomness in the library flows through a seeded engine so that a
// RunConfig seed fully determines every sampled specialization point.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() { return eng_(); }
  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // A prime above 2^31, varying with the stream.
  std::uint64_t sample_prime() {
    return next_prime_u64((1ull << 31) + (eng_() % (1ull << 24)));
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace partyhecke

#endif
