#include "partyhecke/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace partyhecke {

namespace {

using Terms = std::vector<std::pair<Monomial, Int>>;

Terms merge_add(const Terms& x, const Terms& y, bool negate_y) {
  Terms out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Int c = negate_y ? Int(-y[j].second) : y[j].second;
      out.emplace_back(y[j].first, std::move(c));
      ++j;
    } else {
      Int c = negate_y ? Int(x[i].second - y[j].second)
                       : Int(x[i].second + y[j].second);
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int Polynomial::degree_a() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.da);
  return d;
}

int Polynomial::degree_q() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.dq);
  return d;
}

const Int& Polynomial::leading_coefficient() const {
  static const Int zero = 0;
  if (terms_.empty()) return zero;
  return terms_.back().second;  // ascending order: last term is deglex-max
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  return Polynomial::from_sorted_terms(merge_add(x.terms_, y.terms_, false));
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) {
  return Polynomial::from_sorted_terms(merge_add(x.terms_, y.terms_, true));
}

Polynomial operator-(const Polynomial& x) {
  Terms t = x.terms_;
  for (auto& [m, c] : t) c = -c;
  return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return Polynomial();
  std::map<std::pair<int, int>, Int> acc;  // keyed (total degree, da)
  for (auto& [mx, cx] : x.terms_) {
    for (auto& [my, cy] : y.terms_) {
      Monomial m{mx.da + my.da, mx.dq + my.dq};
      acc[{m.da + m.dq, m.da}] += cx * cy;
    }
  }
  Terms t;
  t.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c != 0) t.emplace_back(Monomial{k.second, k.first - k.second}, c);
  }
  return Polynomial::from_sorted_terms(std::move(t));
}

Rational Polynomial::evaluate(const Rational& a, const Rational& q) const {
  Rational out = 0;
  std::vector<Rational> pa{1}, pq{1};
  auto power = [](std::vector<Rational>& cache, const Rational& base, int e) {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  for (auto& [m, c] : terms_)
    out += Rational(c) * power(pa, a, m.da) * power(pq, q, m.dq);
  return out;
}

Fp Polynomial::evaluate(const Fp& a, const Fp& q) const {
  Fp out(0, a.m);
  for (auto& [m, c] : terms_) {
    Int r = c % Int(a.m);
    if (r < 0) r += Int(a.m);
    Fp term(static_cast<std::uint64_t>(r), a.m);
    out = out + term * a.pow(m.da) * q.pow(m.dq);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial gcd over Z[a, q], via the primitive Euclidean algorithm in the
// variable a with coefficients in Z[q]. Degrees stay small here (the engine
// only ever divides to reduce fractions), so no subresultant tricks.

namespace {

using UPoly = std::vector<Int>;  // Z[q], index = degree, no trailing zeros

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& x, const UPoly& y) {
  if (x.empty() || y.empty()) return {};
  UPoly out(x.size() + y.size() - 1, Int(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  utrim(out);
  return out;
}

UPoly uscale(const UPoly& x, const Int& c) {
  if (c == 0) return {};
  UPoly out = x;
  for (auto& v : out) v *= c;
  return out;
}

UPoly usub(const UPoly& x, const UPoly& y) {
  UPoly out = x;
  if (out.size() < y.size()) out.resize(y.size(), Int(0));
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  utrim(out);
  return out;
}

Int ucontent(const UPoly& x) {
  Int g = 0;
  for (auto& c : x) g = boost::multiprecision::gcd(g, c);
  return g;
}

UPoly uprimitive(const UPoly& x) {
  Int g = ucontent(x);
  if (g == 0) return {};
  if (x.back() < 0) g = -g;  // positive leading coefficient
  UPoly out = x;
  for (auto& c : out) c /= g;
  return out;
}

// Pseudo-remainder of x by y (y nonzero) in Z[q].
UPoly uprem(UPoly x, const UPoly& y) {
  utrim(x);
  if (y.empty()) throw std::domain_error("uprem: zero divisor");
  while (x.size() >= y.size()) {
    Int lead = x.back();
    std::size_t shift = x.size() - y.size();
    x = usub(uscale(x, y.back()), [&] {
      UPoly t(shift, Int(0));
      for (auto& c : y) t.push_back(c * lead);
      return t;
    }());
    utrim(x);
    if (x.empty()) break;
  }
  return x;
}

UPoly ugcd(UPoly x, UPoly y) {
  utrim(x);
  utrim(y);
  if (x.empty()) std::swap(x, y);
  if (y.empty()) {
    if (!x.empty() && x.back() < 0)
      for (auto& c : x) c = -c;
    return x;
  }
  Int cont = boost::multiprecision::gcd(ucontent(x), ucontent(y));
  x = uprimitive(x);
  y = uprimitive(y);
  while (!y.empty()) {
    UPoly r = uprem(x, y);
    x = std::move(y);
    y = uprimitive(r);
  }
  return uscale(x, cont);  // x is primitive with positive leading coefficient
}

// Exact division in Z[q]; throws if not exact.
UPoly udivexact(UPoly x, const UPoly& y) {
  utrim(x);
  if (y.empty()) throw std::domain_error("udivexact: zero divisor");
  if (x.empty()) return {};
  if (x.size() < y.size()) throw std::domain_error("udivexact: not divisible");
  UPoly quot(x.size() - y.size() + 1, Int(0));
  while (!x.empty() && x.size() >= y.size()) {
    if (x.back() % y.back() != 0)
      throw std::domain_error("udivexact: not divisible");
    Int c = x.back() / y.back();
    std::size_t shift = x.size() - y.size();
    quot[shift] = c;
    UPoly t(shift, Int(0));
    for (auto& yc : y) t.push_back(yc * c);
    x = usub(x, t);
    utrim(x);
  }
  if (!x.empty()) throw std::domain_error("udivexact: not divisible");
  utrim(quot);
  return quot;
}

using BPoly = std::vector<UPoly>;  // Z[q][a], index = degree in a

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_bpoly(const Polynomial& p) {
  BPoly out;
  for (auto& [m, c] : p.terms()) {
    if (static_cast<int>(out.size()) <= m.da) out.resize(m.da + 1);
    UPoly& u = out[m.da];
    if (static_cast<int>(u.size()) <= m.dq) u.resize(m.dq + 1, Int(0));
    u[m.dq] += c;
  }
  for (auto& u : out) utrim(u);
  btrim(out);
  return out;
}

Polynomial from_bpoly(const BPoly& p) {
  std::vector<std::pair<Monomial, Int>> terms;
  for (int da = 0; da < static_cast<int>(p.size()); ++da)
    for (int dq = 0; dq < static_cast<int>(p[da].size()); ++dq)
      if (p[da][dq] != 0) terms.emplace_back(Monomial{da, dq}, p[da][dq]);
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return Polynomial::from_sorted_terms(std::move(terms));
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (auto& u : p) g = ugcd(g, u);
  return g;
}

BPoly bdiv_upoly(const BPoly& p, const UPoly& d) {
  BPoly out;
  out.reserve(p.size());
  for (auto& u : p) out.push_back(u.empty() ? UPoly{} : udivexact(u, d));
  return out;
}

BPoly bmul_upoly(const BPoly& p, const UPoly& c) {
  BPoly out;
  out.reserve(p.size());
  for (auto& u : p) out.push_back(umul(u, c));
  return out;
}

BPoly bsub(const BPoly& x, const BPoly& y) {
  BPoly out = x;
  if (out.size() < y.size()) out.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = usub(out[i], y[i]);
  btrim(out);
  return out;
}

// Pseudo-remainder in the variable a over Z[q].
BPoly bprem(BPoly x, const BPoly& y) {
  btrim(x);
  if (y.empty()) throw std::domain_error("bprem: zero divisor");
  const UPoly& ylead = y.back();
  while (x.size() >= y.size()) {
    UPoly xlead = x.back();
    std::size_t shift = x.size() - y.size();
    BPoly t(shift);
    for (auto& u : y) t.push_back(umul(u, xlead));
    x = bsub(bmul_upoly(x, ylead), t);
    btrim(x);
    if (x.empty()) break;
  }
  return x;
}

BPoly bgcd(BPoly x, BPoly y) {
  btrim(x);
  btrim(y);
  if (x.empty()) return y;
  if (y.empty()) return x;
  UPoly cont = ugcd(bcontent(x), bcontent(y));
  x = bdiv_upoly(x, bcontent(x));
  y = bdiv_upoly(y, bcontent(y));
  while (!y.empty()) {
    BPoly r = bprem(x, y);
    btrim(r);
    if (!r.empty()) {
      UPoly c = bcontent(r);
      r = bdiv_upoly(r, c);
    }
    x = std::move(y);
    y = std::move(r);
  }
  return bmul_upoly(x, cont);
}

}  // namespace

Polynomial gcd(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() && y.is_zero()) return Polynomial();
  BPoly g = bgcd(to_bpoly(x), to_bpoly(y));
  Polynomial out = from_bpoly(g);
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
  if (is_zero()) return Polynomial();
  // Long division in a over Z[q]; each step must divide exactly.
  BPoly num = to_bpoly(*this), den = to_bpoly(d);
  BPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  while (!num.empty() && num.size() >= den.size()) {
    UPoly c = udivexact(num.back(), den.back());
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    BPoly t(shift);
    for (auto& u : den) t.push_back(umul(u, c));
    num = bsub(num, t);
    btrim(num);
  }
  if (!num.empty()) throw std::domain_error("Polynomial: not divisible");
  return from_bpoly(quot);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Int(1));
    return;
  }
  if (!den_.is_one()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.num_, x.den_ * y.den_);
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw std::domain_error("Scalar: division by zero");
  return Scalar(x.num_ * y.den_, x.den_ * y.num_);
}
Scalar operator-(const Scalar& x) {
  Scalar out = x;
  out.num_ = -out.num_;
  return out;
}

Rational Scalar::evaluate(const Rational& a, const Rational& q) const {
  Rational d = den_.evaluate(a, q);
  if (d == 0)
    throw VanishingDenominator("denominator vanishes at (" + a.str() + ", " +
                               q.str() + ")");
  return num_.evaluate(a, q) / d;
}

Fp Scalar::evaluate(const Fp& a, const Fp& q) const {
  Fp d = den_.evaluate(a, q);
  if (d.is_zero()) throw VanishingDenominator("denominator vanishes mod p");
  return num_.evaluate(a, q) / d;
}

// ---------------------------------------------------------------------------
// Text form. Polynomials print leading term first (descending deglex),
// monomials as a^i*q^j; fractions as num/den with den omitted when 1.

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Int abs = c < 0 ? Int(-c) : c;
    if (it == terms_.rbegin()) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = m.da > 0 || m.dq > 0;
    if (abs != 1 || !has_var) {
      os << abs;
      if (has_var) os << "*";
    }
    if (m.da > 0) {
      os << "a";
      if (m.da > 1) os << "^" << m.da;
      if (m.dq > 0) os << "*";
    }
    if (m.dq > 0) {
      os << "q";
      if (m.dq > 1) os << "^" << m.dq;
    }
  }
  return os.str();
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.terms().size() > 1 || !den_.is_monomial()) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  Int integer() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("scalar parse: expected integer");
    return Int(s.substr(start, i - start));
  }

  int exponent() {
    if (eat('^')) return static_cast<int>(integer());
    return 1;
  }

  Polynomial term() {
    Int coeff = 1;
    int da = 0, dq = 0;
    bool saw_factor = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= integer();
        saw_factor = true;
      } else if (c == 'a') {
        ++i;
        da += exponent();
        saw_factor = true;
      } else if (c == 'q') {
        ++i;
        dq += exponent();
        saw_factor = true;
      } else {
        break;
      }
      if (!eat('*')) break;
    }
    if (!saw_factor) throw std::invalid_argument("scalar parse: empty term");
    return Polynomial(coeff, da, dq);
  }

  Polynomial poly() {
    Polynomial out;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      Polynomial t = term();
      out = neg ? out - t : out + t;
      skip();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return out;
  }

  Polynomial poly_group() {
    if (eat('(')) {
      Polynomial p = poly();
      if (!eat(')')) throw std::invalid_argument("scalar parse: missing ')'");
      return p;
    }
    return poly();
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  Parser p{text};
  Polynomial out = p.poly_group();
  p.skip();
  if (p.i != text.size())
    throw std::invalid_argument("scalar parse: trailing input");
  return out;
}

Scalar Scalar::parse(const std::string& text) {
  Parser p{text};
  Polynomial num = p.poly_group();
  p.skip();
  if (p.eat('/')) {
    Polynomial den = p.poly_group();
    p.skip();
    if (p.i != text.size())
      throw std::invalid_argument("scalar parse: trailing input");
    return Scalar(num, den);
  }
  if (p.i != text.size())
    throw std::invalid_argument("scalar parse: trailing input");
  return Scalar(num);
}

// ---------------------------------------------------------------------------
// Specialization

Specialization Specialization::rational_point(Rational a, Rational q) {
  if (a == 0 || q == 0)
    throw std::invalid_argument("specialization: parameters must be invertible");
  Specialization s;
  s.field = Field::rational;
  s.a = std::move(a);
  s.q = std::move(q);
  return s;
}

Specialization Specialization::prime_point(std::uint64_t modulus, std::uint64_t a,
                                           std::uint64_t q) {
  if (!is_prime_u64(modulus))
    throw std::invalid_argument("specialization: modulus must be prime");
  if (a % modulus == 0 || q % modulus == 0)
    throw std::invalid_argument("specialization: parameters must be invertible");
  Specialization s;
  s.field = Field::prime;
  s.modulus = modulus;
  s.a = a % modulus;
  s.q = q % modulus;
  return s;
}

Specialization Specialization::random_rational(Rng& rng) {
  auto draw = [&rng]() {
    for (;;) {
      Int num = rng.range(2, 19);
      Int den = rng.range(1, 7);
      if (rng.range(0, 1)) num = -num;
      Rational v(num, den);
      if (v != 0 && v != 1 && v != -1) return v;
    }
  };
  return rational_point(draw(), draw());
}

Specialization Specialization::random_prime(Rng& rng) {
  std::uint64_t m = rng.sample_prime();
  auto draw = [&]() {
    for (;;) {
      std::uint64_t v = rng.next() % m;
      if (v > 1 && v != m - 1) return v;
    }
  };
  return prime_point(m, draw(), draw());
}

Fp Specialization::a_mod() const {
  Int v = boost::multiprecision::numerator(a) % Int(modulus);
  if (v < 0) v += Int(modulus);
  return Fp(static_cast<std::uint64_t>(v), modulus);
}

Fp Specialization::q_mod() const {
  Int v = boost::multiprecision::numerator(q) % Int(modulus);
  if (v < 0) v += Int(modulus);
  return Fp(static_cast<std::uint64_t>(v), modulus);
}

std::string Specialization::str() const {
  std::ostringstream os;
  if (field == Field::prime)
    os << "F_" << modulus << "(a=" << a << ", q=" << q << ")";
  else
    os << "Q(a=" << a << ", q=" << q << ")";
  return os.str();
}

Rational specialize_rational(const Scalar& x, const Specialization& s) {
  if (s.field != Specialization::Field::rational)
    throw std::invalid_argument("specialize_rational: wrong field");
  return x.evaluate(s.a, s.q);
}

Fp specialize_prime(const Scalar& x, const Specialization& s) {
  if (s.field != Specialization::Field::prime)
    throw std::invalid_argument("specialize_prime: wrong field");
  return x.evaluate(s.a_mod(), s.q_mod());
}

}  // namespace partyhecke
