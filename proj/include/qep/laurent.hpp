#pragma once

// Exact commutative-ring arithmetic: multivariate integer Laurent polynomials,
// prime fields Z/pZ, and ring homomorphisms between them.

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qep {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a monomial in N Laurent variables.  The array order is
// also the canonical term order (lexicographic).
template <int N>
using ExponentVector = std::array<int, N>;

template <int N>
class LaurentPoly {
 public:
  using Exp = ExponentVector<N>;
  using TermMap = std::map<Exp, Int>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_[Exp{}] = std::move(c);
    return p;
  }

  static LaurentPoly one() { return constant(1); }

  // c * x_{var}^e  (var is 0-based)
  static LaurentPoly monomial(Int c, int var, int e) {
    Exp ex{};
    ex[var] = e;
    return monomial(std::move(c), ex);
  }

  static LaurentPoly monomial(Int c, const Exp& ex) {
    LaurentPoly p;
    if (c != 0) p.terms_[ex] = std::move(c);
    return p;
  }

  static constexpr int num_vars() { return N; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{} &&
           terms_.begin()->second == 1;
  }

  // Single term with coefficient +1 or -1: the invertible elements of the ring.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly one_like() const { return one(); }
  LaurentPoly zero_like() const { return zero(); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  // Canonical total order, used for multiset storage of state-sum values.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  // Multiplicative inverse of a unit monomial.
  LaurentPoly inv_unit() const {
    if (!is_unit()) throw std::domain_error("inv_unit: not a unit monomial");
    const auto& [e, c] = *terms_.begin();
    Exp inv;
    for (int i = 0; i < N; ++i) inv[i] = -e[i];
    return monomial(c, inv);  // c is +1 or -1, its own inverse
  }

  void add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Exponent of variable `var` in a one-term polynomial.
  int degree_in(int var) const {
    if (terms_.size() != 1)
      throw std::domain_error("degree_in: not a monomial");
    return terms_.begin()->first[var];
  }

  // Sum of all variable exponents of a one-term polynomial.
  int total_degree() const {
    if (terms_.size() != 1)
      throw std::domain_error("total_degree: not a monomial");
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
  }

  // Canonical text: terms in lexicographic exponent order, each as
  // <coeff>*x1^<e1>*...*xN^<eN> with zero exponents omitted.
  std::string text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      for (int i = 0; i < N; ++i)
        if (e[i] != 0) os << "*x" << (i + 1) << "^" << e[i];
    }
    return os.str();
  }

 private:
  TermMap terms_;  // no zero coefficients stored
};

template <typename R>
R ring_pow(const R& base, long k) {
  if (k < 0) return ring_pow(base.inv_unit(), -k);
  R acc = base.one_like();
  R b = base;
  long n = k;
  while (n > 0) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

// Element of Z/pZ with a runtime prime modulus.
class Fp {
 public:
  Fp() : v_(0), p_(2) {}
  Fp(long v, long p) : p_(p) {
    if (p < 2) throw std::domain_error("Fp: modulus must be >= 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  long value() const { return v_; }
  long modulus() const { return p_; }

  Fp one_like() const { return Fp(1, p_); }
  Fp zero_like() const { return Fp(0, p_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const { return v_ != 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ + b.v_, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ - b.v_, a.p_);
  }
  Fp operator-() const { return Fp(-v_, p_); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ * b.v_, a.p_);
  }

  Fp inv_unit() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Fermat: v^(p-2) mod p
    long r = 1, b = v_, n = p_ - 2;
    while (n > 0) {
      if (n & 1) r = r * b % p_;
      b = b * b % p_;
      n >>= 1;
    }
    return Fp(r, p_);
  }

  std::string text() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw std::domain_error("Fp: mixed moduli");
  }
  long v_;
  long p_;
};

// Ring homomorphism determined by the image of each source variable.
// Images must be chosen so the map is multiplicative; for Laurent sources
// negative exponents require unit images.
template <int N, typename R>
class RingHom {
 public:
  explicit RingHom(std::array<R, N> images) : images_(std::move(images)) {}

  const R& image(int var) const { return images_[var]; }

  R apply(const LaurentPoly<N>& p, const R& one) const {
    R acc = one.zero_like();
    for (const auto& [e, c] : p.terms()) {
      R t = one;
      for (int i = 0; i < N; ++i)
        if (e[i] != 0) t = t * ring_pow(images_[i], e[i]);
      acc = acc + t * constant_in(c, one);
    }
    return acc;
  }

 private:
  static R constant_in(const Int& c, const R& one) {
    // c * 1_R via binary expansion of |c|
    R acc = one.zero_like();
    R b = one;
    Int n = c < 0 ? Int(-c) : c;
    while (n > 0) {
      if ((n & 1) != 0) acc = acc + b;
      b = b + b;
      n >>= 1;
    }
    return c < 0 ? -acc : acc;
  }

  std::array<R, N> images_;
};

template <int N>
RingHom<N, LaurentPoly<N>> identity_hom() {
  std::array<LaurentPoly<N>, N> im;
  for (int i = 0; i < N; ++i) im[i] = LaurentPoly<N>::monomial(1, i, 1);
  return RingHom<N, LaurentPoly<N>>(im);
}

template <int N>
RingHom<N, LaurentPoly<N>> augmentation_hom() {
  std::array<LaurentPoly<N>, N> im;
  for (int i = 0; i < N; ++i) im[i] = LaurentPoly<N>::one();
  return RingHom<N, LaurentPoly<N>>(im);
}

using Poly5 = LaurentPoly<5>;
using Poly1 = LaurentPoly<1>;

inline Poly5 x_(int i) { return Poly5::monomial(1, i - 1, 1); }
inline Poly5 xpow(int i, int e) { return Poly5::monomial(1, i - 1, e); }

}  // namespace qep
