#ifndef PARTYHECKE_SCALAR_HPP
#define PARTYHECKE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partyhecke/numeric.hpp"

namespace partyhecke {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent pair of a monomial a^da * q^dq. The variable a stands for the
// square root of the deformation parameter p, so p = a^2 and every
// coefficient arising in the algebras stays polynomial.
struct Monomial {
  int da = 0;
  int dq = 0;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.da == y.da && x.dq == y.dq;
  }
  // Degree-lexicographic: total degree first, then exponent of a.
  friend bool operator<(const Monomial& x, const Monomial& y) {
    int tx = x.da + x.dq, ty = y.da + y.dq;
    if (tx != ty) return tx < ty;
    return x.da < y.da;
  }
};

// Integer-coefficient polynomial in (a, q). Terms are kept sorted in
// ascending deglex order with no zero coefficients, so equal polynomials
// have identical representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Int constant) {
    if (constant != 0) terms_.emplace_back(Monomial{0, 0}, std::move(constant));
  }
  Polynomial(Int coeff, int da, int dq) {
    if (coeff != 0) terms_.emplace_back(Monomial{da, dq}, std::move(coeff));
  }

  static Polynomial var_a() { return Polynomial(1, 1, 0); }
  static Polynomial var_q() { return Polynomial(1, 0, 1); }

  const std::vector<std::pair<Monomial, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == Monomial{0, 0} &&
           terms_[0].second == 1;
  }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].first == Monomial{0, 0});
  }
  bool is_monomial() const { return terms_.size() == 1; }
  int degree_a() const;
  int degree_q() const;
  const Int& leading_coefficient() const;  // deglex-maximal term

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x);
  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.terms_ == y.terms_;
  }

  // Exact division; throws std::domain_error if the divisor does not divide.
  Polynomial divexact(const Polynomial& d) const;

  Rational evaluate(const Rational& a, const Rational& q) const;
  Fp evaluate(const Fp& a, const Fp& q) const;

  std::string str() const;
  static Polynomial parse(const std::string& text);

  // Internal: steal a prepared, sorted, zero-free term list.
  static Polynomial from_sorted_terms(std::vector<std::pair<Monomial, Int>> t) {
    Polynomial p;
    p.terms_ = std::move(t);
    return p;
  }

 private:
  std::vector<std::pair<Monomial, Int>> terms_;
};

Polynomial gcd(const Polynomial& x, const Polynomial& y);

struct VanishingDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the fraction field Q(a, q), stored as a reduced fraction of
// integer polynomials with the denominator's leading coefficient positive.
class Scalar {
 public:
  Scalar() : num_(), den_(Int(1)) {}
  Scalar(Int n) : num_(std::move(n)), den_(Int(1)) {}   // NOLINT: implicit
  Scalar(long long n) : num_(Int(n)), den_(Int(1)) {}   // NOLINT: implicit
  Scalar(Polynomial n) : num_(std::move(n)), den_(Int(1)) {}
  Scalar(Polynomial n, Polynomial d);

  static Scalar a() { return Scalar(Polynomial::var_a()); }
  static Scalar q() { return Scalar(Polynomial::var_q()); }
  static Scalar p() { return Scalar(Polynomial(1, 2, 0)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) {
    return !(x == y);
  }

  Rational evaluate(const Rational& a, const Rational& q) const;
  Fp evaluate(const Fp& a, const Fp& q) const;

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

// Evaluation point for collapsing scalars to a concrete field. Sample
// points steer clear of the visible degeneration loci a, q in {0, +-1}.
struct Specialization {
  enum class Field { rational, prime };
  Field field = Field::rational;
  std::uint64_t modulus = 0;  // prime field only; a prime > 2^30
  Rational a = 1;
  Rational q = 1;

  static Specialization rational_point(Rational a, Rational q);
  static Specialization prime_point(std::uint64_t modulus, std::uint64_t a,
                                    std::uint64_t q);
  // Seeded generic points. Rational: small fractions; prime: modulus > 2^31.
  static Specialization random_rational(Rng& rng);
  static Specialization random_prime(Rng& rng);

  Fp a_mod() const;
  Fp q_mod() const;
  std::string str() const;
};

Rational specialize_rational(const Scalar& x, const Specialization& s);
Fp specialize_prime(const Scalar& x, const Specialization& s);

}  // namespace partyhecke

#endif
