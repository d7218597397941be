#pragma once

// The state-sum invariant: beta(D, C) as an exact sum over all smoothing
// states, the per-state monomial beta', and the enhancement polynomial Phi
// as a multiset over all colorings.

#include <atomic>
#include <cstdint>
#include <type_traits>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qep/bracket.hpp"
#include "qep/coloring.hpp"
#include "qep/diagram.hpp"

namespace qep {

inline int state_sum_crossing_limit() {
  if (const char* env = std::getenv("QEP_MAX_CROSSINGS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 22;
}

struct StateSumLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiset of exponent values with multiplicities; the value of Phi.
template <typename R>
class EnhancementPolynomial {
 public:
  void add(const R& exponent, long multiplicity = 1) {
    entries_[exponent] += multiplicity;
  }
  const std::map<R, long>& entries() const { return entries_; }
  long total_multiplicity() const {
    long t = 0;
    for (auto& [e, m] : entries_) t += m;
    return t;
  }
  friend bool operator==(const EnhancementPolynomial& a,
                         const EnhancementPolynomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const EnhancementPolynomial& a,
                         const EnhancementPolynomial& b) {
    return !(a == b);
  }
  friend bool operator<(const EnhancementPolynomial& a,
                        const EnhancementPolynomial& b) {
    return a.entries_ < b.entries_;
  }

  // "m1 u^{p1} + m2 u^{p2} + ..." with exponents in canonical text order.
  std::string text() const {
    std::vector<std::pair<std::string, long>> parts;
    for (auto& [e, m] : entries_) parts.push_back({e.text(), m});
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    bool first = true;
    for (auto& [t, m] : parts) {
      if (!first) os << " + ";
      first = false;
      os << m << "u^{" << t << "}";
    }
    return os.str();
  }

 private:
  std::map<R, long> entries_;
};

// Per-crossing state factors s(c)(cl_C(c))^{sign(c)} for both choices of
// s(c), plus the A->B transition ratios used along the Gray-code walk.
template <typename R>
struct StateFactors {
  std::vector<R> factor_A, ratio_AB, ratio_BA;

  StateFactors(const OrientedDiagram& d, const Coloring& c,
               const Bracket<R>& k) {
    const int m = d.num_crossings();
    factor_A.reserve(m);
    ratio_AB.reserve(m);
    ratio_BA.reserve(m);
    for (int v = 0; v < m; ++v) {
      ColorTriple t = color_triple(d, c, v);
      R fa = k.A(t.x, t.y, t.z), fb = k.B(t.x, t.y, t.z);
      if (d.sign(v) < 0) {
        fa = fa.inv_unit();
        fb = fb.inv_unit();
      }
      ratio_AB.push_back(fb * fa.inv_unit());
      ratio_BA.push_back(fa * fb.inv_unit());
      factor_A.push_back(std::move(fa));
    }
  }
};

namespace detail {

// Unit monomials of the five-variable ring packed for the state-sum hot
// loop: a sign bit and five biased 12-bit exponents.
struct PackedUnit {
  int sign;
  std::array<int, 5> e;

  static PackedUnit of(const Poly5& p) {
    const auto& [ex, c] = *p.terms().begin();
    PackedUnit u;
    u.sign = c < 0 ? -1 : 1;
    for (int i = 0; i < 5; ++i) u.e[i] = ex[i];
    return u;
  }
  void mul(const PackedUnit& o) {
    sign *= o.sign;
    for (int i = 0; i < 5; ++i) e[i] += o.e[i];
  }
  uint64_t key() const {
    uint64_t k = 0;
    for (int i = 0; i < 5; ++i) k = (k << 12) | uint64_t(e[i] + 2048);
    return k;
  }
};

// Exact state sum over the five-variable Laurent ring: per-state unit
// monomials are bucketed by circle count and expanded against delta powers
// once at the end.
inline Poly5 beta_laurent(const OrientedDiagram& d, const Coloring& c,
                          const Bracket<Poly5>& k) {
  const int m = d.num_crossings();
  std::vector<std::map<uint64_t, long long>> buckets;
  auto bucket_add = [&](int circles, const PackedUnit& u) {
    if (int(buckets.size()) <= circles) buckets.resize(circles + 1);
    buckets[circles][u.key()] += u.sign;
  };

  if (m == 0) {
    PackedUnit one{1, {0, 0, 0, 0, 0}};
    bucket_add(d.smooth_and_count(State{{}}), one);
  } else {
    StateFactors<Poly5> f(d, c, k);
    std::vector<PackedUnit> ratio_ab, ratio_ba;
    PackedUnit prod{1, {0, 0, 0, 0, 0}};
    for (int v = 0; v < m; ++v) {
      ratio_ab.push_back(PackedUnit::of(f.ratio_AB[v]));
      ratio_ba.push_back(PackedUnit::of(f.ratio_BA[v]));
      prod.mul(PackedUnit::of(f.factor_A[v]));
    }
    State s{std::vector<bool>(m, false)};
    UnionFind scratch(4 * m);
    const unsigned long long total = 1ull << m;
    for (unsigned long long i = 0;; ++i) {
      bucket_add(d.smooth_and_count_with(scratch, s), prod);
      if (i + 1 == total) break;
      int v = __builtin_ctzll(i + 1);  // Gray code: one crossing flips
      s.use_B[v] = !s.use_B[v];
      prod.mul(s.use_B[v] ? ratio_ab[v] : ratio_ba[v]);
    }
  }

  Poly5 acc;
  Poly5 delta_pow = Poly5::one();
  for (size_t circles = 0; circles < buckets.size(); ++circles) {
    if (circles > 0) delta_pow = delta_pow * k.delta();
    if (buckets[circles].empty()) continue;
    Poly5 layer;
    for (auto& [key, coeff] : buckets[circles]) {
      if (coeff == 0) continue;
      ExponentVector<5> ex;
      uint64_t kk = key;
      for (int i = 4; i >= 0; --i) {
        ex[i] = int(kk & 0xfff) - 2048;
        kk >>= 12;
      }
      layer.add_term(ex, coeff);
    }
    acc += delta_pow * layer;
  }
  return acc;
}

}  // namespace detail

// beta(D, C) = w^{n-p} sum_s delta^{k_s} prod_c s(c)(cl_C(c))^{sign(c)},
// computed exactly over all 2^m states in Gray-code order.
template <typename R>
R beta(const OrientedDiagram& d, const Coloring& c, const Bracket<R>& k) {
  const int m = d.num_crossings();
  if (m > state_sum_crossing_limit())
    throw StateSumLimit("state sum refused: " + std::to_string(m) +
                        " crossings exceeds the limit (set QEP_MAX_CROSSINGS)");
  const int n_minus_p = d.negative_crossings() - d.positive_crossings();

  if constexpr (std::is_same_v<R, Poly5>) {
    return ring_pow(k.w(), n_minus_p) * detail::beta_laurent(d, c, k);
  } else {
    std::vector<R> delta_pow{k.delta().one_like()};
    auto delta_to = [&](int e) -> const R& {
      while (int(delta_pow.size()) <= e)
        delta_pow.push_back(delta_pow.back() * k.delta());
      return delta_pow[e];
    };

    R acc = k.delta().zero_like();
    State s{std::vector<bool>(m, false)};
    UnionFind scratch(4 * m);

    if (m == 0) {
      acc = delta_to(d.smooth_and_count(s));
    } else {
      StateFactors<R> f(d, c, k);
      R prod = k.delta().one_like();
      for (const R& fa : f.factor_A) prod = prod * fa;
      unsigned long long total = 1ull << m;
      for (unsigned long long i = 0;; ++i) {
        acc += delta_to(d.smooth_and_count_with(scratch, s)) * prod;
        if (i + 1 == total) break;
        int v = __builtin_ctzll(i + 1);  // Gray code: one crossing flips
        s.use_B[v] = !s.use_B[v];
        prod = prod * (s.use_B[v] ? f.ratio_AB[v] : f.ratio_BA[v]);
      }
    }
    return ring_pow(k.w(), n_minus_p) * acc;
  }
}

// The single-state monomial beta'(D, C, s) = w^{n-p} prod_c s(c)(...)^{sign},
// without the delta^{k_s} factor.
template <typename R>
R beta_per_state(const OrientedDiagram& d, const Coloring& c, const State& s,
                 const Bracket<R>& k) {
  const int m = d.num_crossings();
  if (int(s.use_B.size()) != m) throw DiagramError("state size mismatch");
  StateFactors<R> f(d, c, k);
  R prod = k.delta().one_like();
  for (int v = 0; v < m; ++v)
    prod = prod * (s.use_B[v] ? f.factor_A[v] * f.ratio_AB[v] : f.factor_A[v]);
  const int n_minus_p = d.negative_crossings() - d.positive_crossings();
  return ring_pow(k.w(), n_minus_p) * prod;
}

namespace detail {

template <typename R>
EnhancementPolynomial<R> phi_over(const OrientedDiagram& d,
                                  const std::vector<Coloring>& colorings,
                                  const Bracket<R>& k) {
  std::vector<R> values(colorings.size(), k.delta().zero_like());
  unsigned hw = std::thread::hardware_concurrency();
  size_t workers = std::min<size_t>(hw ? hw : 1, colorings.size());
  if (workers > 1 && d.num_crossings() >= 6) {
    std::vector<std::future<void>> jobs;
    std::atomic<size_t> next{0};
    for (size_t t = 0; t < workers; ++t)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next.fetch_add(1); i < colorings.size();
             i = next.fetch_add(1))
          values[i] = beta(d, colorings[i], k);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (size_t i = 0; i < colorings.size(); ++i)
      values[i] = beta(d, colorings[i], k);
  }
  EnhancementPolynomial<R> out;
  for (const R& v : values) out.add(v);
  return out;
}

}  // namespace detail

// Phi = sum over all colorings of u^{beta(D,C)}.
template <typename R>
EnhancementPolynomial<R> phi(const OrientedDiagram& d, const Bracket<R>& k) {
  return detail::phi_over(d, enumerate_colorings(d), k);
}

// Restriction of Phi to the two trivial and two checkerboard colorings.
template <typename R>
EnhancementPolynomial<R> phi_tc(const OrientedDiagram& d, const Bracket<R>& k) {
  std::vector<Coloring> tc;
  const int n = d.num_components();
  for (int a = 0; a <= 1; ++a) {
    tc.emplace_back(d, a, std::vector<bool>(n, false));
    tc.emplace_back(d, a, std::vector<bool>(n, true));
  }
  return detail::phi_over(d, tc, k);
}

// Mirror relation check: beta with the bar transform on D against beta with
// the original bracket on the crossing-changed diagram, same (a, D1) data.
template <typename R>
bool beta_bar_mirror_check(const OrientedDiagram& d, int base_color,
                           const std::vector<bool>& d1, const Bracket<R>& k) {
  if (!satisfies_mirror_hypothesis(k))
    throw BracketError("mirror hypothesis not satisfied");
  Bracket<R> kbar = bar(k);
  OrientedDiagram dm = d.mirror();
  R lhs = beta(d, Coloring(d, base_color, d1), kbar);
  R rhs = beta(dm, Coloring(dm, base_color, d1), k);
  return lhs == rhs;
}

}  // namespace qep
