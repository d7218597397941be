#pragma once

// Tribracket brackets over the two-element tribracket: axiom verification,
// the five universal brackets over Z[x1^±,...,x5^±], type classification,
// factorization through the universal brackets, the bar transform, and
// enumeration over prime fields.

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qep/laurent.hpp"

namespace qep {

inline int tri(int a, int b, int c) { return (a + b + c) & 1; }  // a+b-c mod 2

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
  // which of 3a..3e hold over all 16 quadruples (used for bar transforms)
  std::array<bool, 5> cond3 = {true, true, true, true, true};

  void fail(const std::string& what) {
    ok = false;
    violations.push_back(what);
  }
};

template <typename R>
class Bracket {
 public:
  static constexpr int idx(int a, int b, int c) { return 4 * a + 2 * b + c; }

  Bracket(std::array<R, 8> A, std::array<R, 8> B)
      : A_(std::move(A)), B_(std::move(B)) {
    AxiomReport rep = verify(A_, B_);
    if (!rep.ok) {
      std::ostringstream os;
      os << "not a tribracket bracket:";
      for (auto& v : rep.violations) os << "\n  " << v;
      throw BracketError(os.str());
    }
    delta_ = compute_delta(A_, B_);
    w_ = compute_w(A_, B_);
  }

  struct unverified_t {};
  // Carrier for (A,B) pairs that satisfy conditions 1 and 2 but whose 3d/3e
  // status is open (the bar transform).  delta and w are still checked.
  Bracket(unverified_t, std::array<R, 8> A, std::array<R, 8> B)
      : A_(std::move(A)), B_(std::move(B)) {
    AxiomReport rep;
    check_delta_w(A_, B_, rep);
    if (!rep.ok) {
      std::ostringstream os;
      os << "conditions 1-2 fail:";
      for (auto& v : rep.violations) os << "\n  " << v;
      throw BracketError(os.str());
    }
    delta_ = compute_delta(A_, B_);
    w_ = compute_w(A_, B_);
  }

  const R& A(int a, int b, int c) const { return A_[idx(a, b, c)]; }
  const R& B(int a, int b, int c) const { return B_[idx(a, b, c)]; }
  const std::array<R, 8>& A_entries() const { return A_; }
  const std::array<R, 8>& B_entries() const { return B_; }
  const R& delta() const { return delta_; }
  const R& w() const { return w_; }

  friend bool operator==(const Bracket& a, const Bracket& b) {
    return a.A_ == b.A_ && a.B_ == b.B_;
  }
  friend bool operator<(const Bracket& a, const Bracket& b) {
    if (a.A_ != b.A_)
      return std::lexicographical_compare(a.A_.begin(), a.A_.end(),
                                          b.A_.begin(), b.A_.end());
    return std::lexicographical_compare(a.B_.begin(), a.B_.end(), b.B_.begin(),
                                        b.B_.end());
  }

  static R compute_delta(const std::array<R, 8>& A, const std::array<R, 8>& B) {
    return -(A[0] * B[0].inv_unit()) - (A[0].inv_unit() * B[0]);
  }
  static R compute_w(const std::array<R, 8>& A, const std::array<R, 8>& B) {
    return -(A[0] * A[0] * B[0].inv_unit());
  }

  static void check_delta_w(const std::array<R, 8>& A,
                            const std::array<R, 8>& B, AxiomReport& rep) {
    for (const R& e : A)
      if (!e.is_unit()) rep.fail("non-unit A entry");
    for (const R& e : B)
      if (!e.is_unit()) rep.fail("non-unit B entry");
    if (!rep.ok) return;
    const R delta = compute_delta(A, B);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          R lhs = -(A[idx(a, b, c)] * B[idx(a, b, c)].inv_unit()) -
                  (A[idx(a, b, c)].inv_unit() * B[idx(a, b, c)]);
          if (!(lhs == delta)) {
            std::ostringstream os;
            os << "condition 1 fails at (" << a << "," << b << "," << c << ")";
            rep.fail(os.str());
          }
        }
    const R w = compute_w(A, B);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        R lhs = -(A[idx(a, b, b)] * A[idx(a, b, b)] *
                  B[idx(a, b, b)].inv_unit());
        if (!(lhs == w)) {
          std::ostringstream os;
          os << "condition 2 fails at (" << a << "," << b << ")";
          rep.fail(os.str());
        }
      }
  }

  // Full Def-1.6 verification: conditions 1, 2 and 3a-3e over every
  // (a,b,c,d) in X2^4.
  static AxiomReport verify(const std::array<R, 8>& A,
                            const std::array<R, 8>& B) {
    AxiomReport rep;
    check_delta_w(A, B, rep);
    if (!rep.violations.empty()) return rep;
    const R delta = compute_delta(A, B);

    auto At = [&](int a, int b, int c) -> const R& { return A[idx(a, b, c)]; };
    auto Bt = [&](int a, int b, int c) -> const R& { return B[idx(a, b, c)]; };

    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            const int abc = tri(a, b, c), abd = tri(a, b, d),
                      acd = tri(a, c, d);
            // shorthand for the three recurring index triples
            auto Ac = At(c, abc, acd), Bc = Bt(c, abc, acd);
            auto Ab = At(b, abc, abd), Bb = Bt(b, abc, abd);
            auto Ad = At(d, abd, acd), Bd = Bt(d, abd, acd);

            auto note = [&](int which, const char* name) {
              rep.cond3[which] = false;
              std::ostringstream os;
              os << "condition " << name << " fails at (" << a << "," << b
                 << "," << c << "," << d << ")";
              rep.fail(os.str());
            };

            if (!(At(a, b, c) * Ac * At(a, c, d) == Ab * At(a, b, d) * Ad))
              note(0, "3a");
            if (!(At(a, b, c) * Bc * Bt(a, c, d) == Bb * Bt(a, b, d) * Ad))
              note(1, "3b");
            if (!(Bt(a, b, c) * Bc * At(a, c, d) == Ab * Bt(a, b, d) * Bd))
              note(2, "3c");
            {
              R lhs = At(a, b, c) * Bc * At(a, c, d);
              R rhs = Ab * At(a, b, d) * Bd + Bb * At(a, b, d) * Ad +
                      delta * Bb * At(a, b, d) * Bd + Bb * Bt(a, b, d) * Bd;
              if (!(lhs == rhs)) note(3, "3d");
            }
            {
              R lhs = At(a, b, c) * Ac * Bt(a, c, d) +
                      Bt(a, b, c) * Ac * At(a, c, d) +
                      delta * Bt(a, b, c) * Ac * Bt(a, c, d) +
                      Bt(a, b, c) * Bc * Bt(a, c, d);
              R rhs = Ab * Bt(a, b, d) * Ad;
              if (!(lhs == rhs)) note(4, "3e");
            }
          }
    return rep;
  }

 private:
  std::array<R, 8> A_, B_;
  R delta_, w_;
};

// The five universal tribracket brackets over Z[x1^±,...,x5^±].
inline Bracket<Poly5> universal(int i) {
  auto m = [](int e1, int e2, int e3, int e4, int e5) {
    return Poly5::monomial(1, ExponentVector<5>{e1, e2, e3, e4, e5});
  };
  const Poly5 x1 = m(1, 0, 0, 0, 0), x2 = m(0, 1, 0, 0, 0), x3 = m(0, 0, 1, 0, 0),
              x4 = m(0, 0, 0, 1, 0), x5 = m(0, 0, 0, 0, 1);
  const Poly5 x1c = m(3, 0, 0, 0, -2);        // x1^3 x5^-2
  const Poly5 x5c = m(4, 0, 0, 0, -3);        // x1^4 x5^-3
  const Poly5 x234 = m(0, 1, 1, -1, 0);       // x2 x3 x4^-1

  std::array<Poly5, 8> A, B;
  auto idx = Bracket<Poly5>::idx;
  switch (i) {
    case 1:
    case 3:
    case 5:
      A[idx(0, 0, 0)] = x1, A[idx(0, 0, 1)] = x2;
      A[idx(0, 1, 0)] = x3, A[idx(0, 1, 1)] = x1;
      A[idx(1, 0, 0)] = x1, A[idx(1, 0, 1)] = x4;
      A[idx(1, 1, 0)] = x234, A[idx(1, 1, 1)] = x1;
      break;
    case 2:
    case 4:
      A[idx(0, 0, 0)] = x1, A[idx(0, 0, 1)] = x2;
      A[idx(0, 1, 0)] = x3, A[idx(0, 1, 1)] = x1c;
      A[idx(1, 0, 0)] = x1c, A[idx(1, 0, 1)] = x4;
      A[idx(1, 1, 0)] = x234, A[idx(1, 1, 1)] = x1;
      break;
    default:
      throw BracketError("universal: index must be 1..5");
  }
  const Poly5 x1i = m(-1, 0, 0, 0, 0), x5i = m(0, 0, 0, 0, -1);
  switch (i) {
    case 1:
      B[idx(0, 0, 0)] = x5, B[idx(0, 0, 1)] = x1i * x2 * x5;
      B[idx(0, 1, 0)] = x1 * x3 * x5i, B[idx(0, 1, 1)] = x5;
      B[idx(1, 0, 0)] = x5, B[idx(1, 0, 1)] = x1 * x4 * x5i;
      B[idx(1, 1, 0)] = x1i * x234 * x5, B[idx(1, 1, 1)] = x5;
      break;
    case 2:
      B[idx(0, 0, 0)] = x5, B[idx(0, 0, 1)] = x1i * x2 * x5;
      B[idx(0, 1, 0)] = x1 * x3 * x5i, B[idx(0, 1, 1)] = x5c;
      B[idx(1, 0, 0)] = x5c, B[idx(1, 0, 1)] = x1 * x4 * x5i;
      B[idx(1, 1, 0)] = x1i * x234 * x5, B[idx(1, 1, 1)] = x5;
      break;
    case 3:
      B[idx(0, 0, 0)] = x5, B[idx(0, 0, 1)] = x1 * x2 * x5i;
      B[idx(0, 1, 0)] = x1i * x3 * x5, B[idx(0, 1, 1)] = x5;
      B[idx(1, 0, 0)] = x5, B[idx(1, 0, 1)] = x1i * x4 * x5;
      B[idx(1, 1, 0)] = x1 * x234 * x5i, B[idx(1, 1, 1)] = x5;
      break;
    case 4:
      B[idx(0, 0, 0)] = x5, B[idx(0, 0, 1)] = x1 * x2 * x5i;
      B[idx(0, 1, 0)] = x1i * x3 * x5, B[idx(0, 1, 1)] = x5c;
      B[idx(1, 0, 0)] = x5c, B[idx(1, 0, 1)] = x1i * x4 * x5;
      B[idx(1, 1, 0)] = x1 * x234 * x5i, B[idx(1, 1, 1)] = x5;
      break;
    case 5:
      B[idx(0, 0, 0)] = x5, B[idx(0, 0, 1)] = x1i * x2 * x5;
      B[idx(0, 1, 0)] = x1i * x3 * x5, B[idx(0, 1, 1)] = x5;
      B[idx(1, 0, 0)] = x5, B[idx(1, 0, 1)] = x1i * x4 * x5;
      B[idx(1, 1, 0)] = x1i * x234 * x5, B[idx(1, 1, 1)] = x5;
      break;
  }
  return Bracket<Poly5>(std::move(A), std::move(B));
}

// Type classification: for a bracket over an integral domain, which of the
// five (B001, B010, A011) entry patterns of the universal brackets hold.
template <typename R>
std::set<int> classify_type(const Bracket<R>& k) {
  const R &A000 = k.A(0, 0, 0), &A001 = k.A(0, 0, 1), &A010 = k.A(0, 1, 0),
          &A011 = k.A(0, 1, 1), &B000 = k.B(0, 0, 0), &B001 = k.B(0, 0, 1),
          &B010 = k.B(0, 1, 0);
  const bool b001_f1 = B001 == A000 * B000.inv_unit() * A001;
  const bool b001_f2 = B001 == A000.inv_unit() * B000 * A001;
  const bool b010_f1 = B010 == A000 * B000.inv_unit() * A010;
  const bool b010_f2 = B010 == A000.inv_unit() * B000 * A010;
  const bool a_plain = A011 == A000;
  const bool a_cubed =
      A011 == A000 * A000 * A000 * B000.inv_unit() * B000.inv_unit();
  std::set<int> out;
  if (b001_f2 && b010_f1 && a_plain) out.insert(1);
  if (b001_f2 && b010_f1 && a_cubed) out.insert(2);
  if (b001_f1 && b010_f2 && a_plain) out.insert(3);
  if (b001_f1 && b010_f2 && a_cubed) out.insert(4);
  if (b001_f2 && b010_f2 && a_plain) out.insert(5);
  if (out.empty())
    throw BracketError("classify_type: no type matched (Lemma on types violated)");
  return out;
}

// The entry homomorphism of the factorization theorem:
// x1,x2,x3,x4,x5 -> A000, A001, A010, A101, B000.
template <typename R>
RingHom<5, R> factor_hom(const Bracket<R>& k) {
  return RingHom<5, R>({k.A(0, 0, 0), k.A(0, 0, 1), k.A(0, 1, 0),
                        k.A(1, 0, 1), k.B(0, 0, 0)});
}

template <typename R>
Bracket<R> apply_hom_to_bracket(const RingHom<5, R>& f,
                                const Bracket<Poly5>& u, const R& one) {
  std::array<R, 8> A, B;
  for (int t = 0; t < 8; ++t) {
    A[t] = f.apply(u.A_entries()[t], one);
    B[t] = f.apply(u.B_entries()[t], one);
  }
  return Bracket<R>(std::move(A), std::move(B));
}

// Returns (i, f) with f(universal(i)) reproducing the bracket entrywise.
template <typename R>
std::pair<int, RingHom<5, R>> factor_through_universal(const Bracket<R>& k,
                                                       const R& one) {
  RingHom<5, R> f = factor_hom(k);
  for (int i : classify_type(k)) {
    Bracket<Poly5> u = universal(i);
    bool match = true;
    for (int t = 0; t < 8 && match; ++t)
      match = f.apply(u.A_entries()[t], one) == k.A_entries()[t] &&
              f.apply(u.B_entries()[t], one) == k.B_entries()[t];
    if (match) return {i, f};
  }
  throw BracketError("factor_through_universal: no universal bracket matches");
}

// Entrywise-inverse transform; satisfies conditions 1-2 with the same delta
// and inverted w.  Whether 3d/3e hold in general is open; the report carries
// their observed status.
template <typename R>
Bracket<R> bar(const Bracket<R>& k) {
  std::array<R, 8> A, B;
  for (int t = 0; t < 8; ++t) {
    A[t] = k.A_entries()[t].inv_unit();
    B[t] = k.B_entries()[t].inv_unit();
  }
  Bracket<R> out(typename Bracket<R>::unverified_t{}, std::move(A),
                 std::move(B));
  if (!(out.delta() == k.delta()))
    throw BracketError("bar: delta changed");
  if (!(out.w() == k.w().inv_unit()))
    throw BracketError("bar: w is not w^-1");
  return out;
}

template <typename R>
AxiomReport bar_axiom_status(const Bracket<R>& k) {
  std::array<R, 8> A, B;
  for (int t = 0; t < 8; ++t) {
    A[t] = k.A_entries()[t].inv_unit();
    B[t] = k.B_entries()[t].inv_unit();
  }
  return Bracket<R>::verify(A, B);
}

// Hypothesis of the mirror relation: A001*B010 = B001*A010 and
// A110*B101 = B110*A101.
template <typename R>
bool satisfies_mirror_hypothesis(const Bracket<R>& k) {
  return k.A(0, 0, 1) * k.B(0, 1, 0) == k.B(0, 0, 1) * k.A(0, 1, 0) &&
         k.A(1, 1, 0) * k.B(1, 0, 1) == k.B(1, 1, 0) * k.A(1, 0, 1);
}

// The ten entry identities of complementary-coloring invariance plus the
// structural disjunctions used by the classification.
template <typename R>
std::vector<std::string> check_entry_identities(const Bracket<R>& k) {
  std::vector<std::string> failures;
  auto req = [&](bool ok, const char* what) {
    if (!ok) failures.push_back(what);
  };
  auto A = [&](int a, int b, int c) -> const R& { return k.A(a, b, c); };
  auto B = [&](int a, int b, int c) -> const R& { return k.B(a, b, c); };

  req(A(0, 0, 0) == A(1, 1, 1), "A000=A111");
  req(B(0, 0, 0) == B(1, 1, 1), "B000=B111");
  req(A(0, 1, 1) == A(1, 0, 0), "A011=A100");
  req(B(0, 1, 1) == B(1, 0, 0), "B011=B100");
  req(B(0, 1, 1) == B(0, 0, 0) * A(0, 0, 0).inv_unit() *
                        A(0, 0, 0).inv_unit() * A(0, 1, 1) * A(0, 1, 1),
      "B011=B000*A000^-2*A011^2");
  req(A(0, 0, 1) * A(0, 1, 0) == A(1, 1, 0) * A(1, 0, 1), "A001A010=A110A101");
  req(B(0, 0, 1) * A(0, 1, 0) == B(1, 1, 0) * A(1, 0, 1), "B001A010=B110A101");
  req(A(0, 1, 0) * B(1, 0, 1) == A(1, 0, 1) * B(0, 1, 0), "A010B101=A101B010");
  req(A(0, 0, 1) * B(0, 1, 0) == A(1, 1, 0) * B(1, 0, 1), "A001B010=A110B101");
  req(B(0, 0, 1) * B(0, 1, 0) == B(1, 1, 0) * B(1, 0, 1), "B001B010=B110B101");
  req(A(0, 0, 1) * B(1, 1, 0) == A(1, 1, 0) * B(0, 0, 1), "A001B110=A110B001");

  // structural disjunctions over an integral domain
  const bool b001_f1 = B(0, 0, 1) == A(0, 0, 0) * B(0, 0, 0).inv_unit() * A(0, 0, 1);
  const bool b001_f2 = B(0, 0, 1) == A(0, 0, 0).inv_unit() * B(0, 0, 0) * A(0, 0, 1);
  const bool b010_f1 = B(0, 1, 0) == A(0, 0, 0) * B(0, 0, 0).inv_unit() * A(0, 1, 0);
  const bool b010_f2 = B(0, 1, 0) == A(0, 0, 0).inv_unit() * B(0, 0, 0) * A(0, 1, 0);
  const bool a_plain = A(0, 1, 1) == A(0, 0, 0);
  const bool a_cubed = A(0, 1, 1) == A(0, 0, 0) * A(0, 0, 0) * A(0, 0, 0) *
                                         B(0, 0, 0).inv_unit() *
                                         B(0, 0, 0).inv_unit();
  req(b001_f1 || b001_f2, "B001 has neither canonical form");
  req(b010_f1 || b010_f2, "B010 has neither canonical form");
  req(a_plain || a_cubed, "A011 has neither canonical form");
  req(!b010_f1 || b001_f2, "B010 form 1 must force B001 form 2");
  req(!(b010_f2 && b001_f2) || a_plain,
      "B010,B001 form 2 must force A011=A000");
  return failures;
}

struct EnumerationResult {
  std::vector<Bracket<Fp>> brackets;
  std::array<long, 5> per_type = {0, 0, 0, 0, 0};  // |T^(i)|, with overlap
  long all_types = 0;                              // |intersection of all five|
  long formula = 0;                                // 5(p-1)^5 - 8(p-1)^4, 1 for p=2
};

inline long bracket_count_formula(long p) {
  if (p == 2) return 1;
  long u = p - 1;
  return 5 * u * u * u * u * u - 8 * u * u * u * u;
}

inline void tally(EnumerationResult& out) {
  for (const auto& k : out.brackets) {
    auto types = classify_type(k);
    for (int i : types) out.per_type[i - 1]++;
    if (types.size() == 5) out.all_types++;
  }
}

// Exhaustive filter over all (p-1)^16 unit assignments; the oracle mode.
inline EnumerationResult enumerate_brackets_brute(long p) {
  if (p > 3) throw BracketError("brute enumeration is limited to p <= 3");
  EnumerationResult out;
  out.formula = bracket_count_formula(p);
  const long u = p - 1;
  long total = 1;
  for (int t = 0; t < 16; ++t) total *= u;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    std::array<Fp, 8> A, B;
    for (int t = 0; t < 8; ++t) {
      A[t] = Fp(1 + rest % u, p);
      rest /= u;
    }
    for (int t = 0; t < 8; ++t) {
      B[t] = Fp(1 + rest % u, p);
      rest /= u;
    }
    if (!Bracket<Fp>::verify(A, B).ok) continue;
    out.brackets.emplace_back(std::move(A), std::move(B));
  }
  tally(out);
  return out;
}

// Images of the five universal brackets under all unit homomorphisms,
// deduplicated and re-verified.
inline EnumerationResult enumerate_brackets_homs(long p) {
  EnumerationResult out;
  out.formula = bracket_count_formula(p);
  const long u = p - 1;
  std::array<Bracket<Poly5>, 5> univ{universal(1), universal(2), universal(3),
                                     universal(4), universal(5)};
  std::set<std::array<long, 16>> seen;
  const Fp one(1, p);
  long count = u;
  for (int t = 1; t < 5; ++t) count *= u;
  for (long code = 0; code < count; ++code) {
    long rest = code;
    std::array<Fp, 5> images;
    for (int t = 0; t < 5; ++t) {
      images[t] = Fp(1 + rest % u, p);
      rest /= u;
    }
    RingHom<5, Fp> f(images);
    for (int i = 0; i < 5; ++i) {
      Bracket<Fp> k = apply_hom_to_bracket(f, univ[i], one);
      std::array<long, 16> key;
      for (int t = 0; t < 8; ++t) {
        key[t] = k.A_entries()[t].value();
        key[8 + t] = k.B_entries()[t].value();
      }
      if (seen.insert(key).second) out.brackets.push_back(std::move(k));
    }
  }
  tally(out);
  return out;
}

}  // namespace qep
