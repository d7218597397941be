#pragma once

// Programmatic PD codes: standard torus-link and twist-knot diagrams plus a
// two-ladder chain family, built from an explicit planar wiring.  Generated
// codes carry sign annotations so orientation inference never has to break
// ties on two-edge components.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qep/diagram.hpp"

namespace qep {

// Wiring builder: crossings have four ends in counterclockwise order; the
// strand diagonals are {0,2} and {1,3}.  Arcs connect ends one-to-one.
// Components are traced, oriented (optionally reversed), labeled along the
// orientation and emitted as annotated PD tuples.
class PlanarBuilder {
 public:
  // over_diag: 0 if the {0,2} diagonal passes over, 1 for {1,3}
  int add_crossing(int over_diag) {
    over_diag_.push_back(over_diag);
    return int(over_diag_.size()) - 1;
  }

  void arc(int c1, int p1, int c2, int p2) {
    int u = 4 * c1 + p1, v = 4 * c2 + p2;
    if (u == v) throw std::logic_error("arc endpoints coincide");
    if (mate_.count(u) || mate_.count(v))
      throw std::logic_error("arc endpoint already used");
    mate_[u] = v;
    mate_[v] = u;
  }

  int num_crossings() const { return int(over_diag_.size()); }

  // reverse[k] flips the orientation of the k-th traced component.
  PDCode pd(const std::vector<bool>& reverse = {}) const {
    const int m = num_crossings();
    if (int(mate_.size()) != 4 * m)
      throw std::logic_error("wiring incomplete");

    // trace components as cyclic sequences of ends (tail ends, walk order)
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(4 * m, false);
    for (int start = 0; start < 4 * m; ++start) {
      if (seen[start]) continue;
      std::vector<int> walk;  // arc tails in traversal order
      int tail = start;
      do {
        walk.push_back(tail);
        seen[tail] = true;
        int head = mate_.at(tail);
        seen[head] = true;
        tail = head ^ 2;  // pass through the crossing
      } while (tail != start);
      comps.push_back(std::move(walk));
    }
    if (!reverse.empty() && reverse.size() != comps.size())
      throw std::logic_error("reverse flags do not match component count");

    // orient: reversing a component means each arc is traversed head->tail
    std::vector<int> edge_at(4 * m, 0);  // end -> edge label
    std::vector<bool> head_at(4 * m, false);
    int label = 0;
    for (size_t k = 0; k < comps.size(); ++k) {
      std::vector<int> walk = comps[k];
      bool rev = k < reverse.size() && reverse[k];
      if (rev) {
        // arcs traversed in the opposite cyclic order and direction
        std::vector<int> back;
        for (auto it = walk.rbegin(); it != walk.rend(); ++it)
          back.push_back(mate_.at(*it));
        walk = std::move(back);
      }
      for (int tail : walk) {
        ++label;
        edge_at[tail] = label;
        edge_at[mate_.at(tail)] = label;
        head_at[mate_.at(tail)] = true;
      }
    }

    PDCode out;
    for (int v = 0; v < m; ++v) {
      const int under_diag = over_diag_[v] ^ 1;
      int under_in = -1, over_in = -1;
      for (int p = 0; p < 4; ++p) {
        if (!head_at[4 * v + p]) continue;
        if ((p & 1) == under_diag)
          under_in = p;
        else
          over_in = p;
      }
      if (under_in < 0 || over_in < 0)
        throw std::logic_error("strand orientation through a crossing broken");
      std::array<int, 4> t;
      for (int k = 0; k < 4; ++k) t[k] = edge_at[4 * v + ((under_in + k) & 3)];
      out.tuples.push_back(t);
      out.sign_hints.push_back(over_in == ((under_in + 3) & 3) ? 1 : -1);
    }
    return out;
  }

 private:
  std::vector<int> over_diag_;
  std::map<int, int> mate_;
};

inline PDCode unlink_pd(int circles) {
  PDCode pd;
  pd.unknot_components = circles;
  return pd;
}

// Standard diagram of the (2,q) torus link: a cyclically closed vertical
// ladder of |q| crossings.  For even q the second strand may be reversed
// (antiparallel orientation).
inline PDCode torus_pd(int q, bool antiparallel = false) {
  if (q == 0) return unlink_pd(2);
  const int n = std::abs(q);
  PlanarBuilder b;
  // ends: 0=SE, 1=NE, 2=NW, 3=SW; positive q puts the SW-NE diagonal on top
  for (int i = 0; i < n; ++i) b.add_crossing(q > 0 ? 1 : 0);
  for (int i = 0; i < n; ++i) {
    b.arc(i, 1, (i + 1) % n, 0);
    b.arc(i, 2, (i + 1) % n, 3);
  }
  if (n % 2 == 1) return b.pd();
  // the default trace runs the strands against each other; reversing the
  // second component yields the parallel (torus) orientation
  return b.pd({false, !antiparallel});
}

// Standard diagram of the q-twist knot: a horizontal band with |q|
// half-twists, capped on the left, with a two-crossing clasp on the right.
// The over-diagonal choices of the twist box and the clasp are pinned by the
// closed-form cross-checks (TW(1) = the left trefoil, TW(2) = figure-eight).
inline PDCode twist_pd(int q, int twist_over = 0, int clasp_over = 0) {
  const int n = std::abs(q);
  if (q < 0) twist_over ^= 1;
  PlanarBuilder b;
  // two-crossing vertical clasp column: tangle corners NW=(c2,2),
  // NE=(c2,1), SW=(c1,3), SE=(c1,0)
  int c1 = b.add_crossing(clasp_over);
  int c2 = b.add_crossing(clasp_over);
  b.arc(c1, 1, c2, 0);
  b.arc(c1, 2, c2, 3);
  if (n == 0) {
    // numerator closure of the bare clasp: caps top and bottom
    b.arc(c2, 2, c2, 1);
    b.arc(c1, 3, c1, 0);
    return b.pd();
  }
  // horizontal twist row: corners NW=(h0,2), SW=(h0,3), NE=(hq-1,1),
  // SE=(hq-1,0)
  std::vector<int> h;
  for (int i = 0; i < n; ++i) h.push_back(b.add_crossing(twist_over));
  for (int i = 0; i + 1 < n; ++i) {
    b.arc(h[i], 1, h[i + 1], 2);  // top lane
    b.arc(h[i], 0, h[i + 1], 3);  // bottom lane
  }
  // tangle sum clasp + row, then numerator closure
  b.arc(c2, 1, h[0], 2);
  b.arc(c1, 0, h[0], 3);
  b.arc(c2, 2, h[n - 1], 1);
  b.arc(c1, 3, h[n - 1], 0);
  return b.pd();
}

// Two-ladder chain: satellite A clasped to an axis by q1 half-twists and
// satellite B clasped to the same axis by q2 half-twists; the ladders do not
// touch each other.  over1/over2 choose each ladder's over diagonal; rev_*
// reverse the orientation of the corresponding component.
inline PDCode chain_pd(int q1, int q2, int over1, int over2, bool rev_a,
                       bool rev_m, bool rev_b) {
  if (q1 < 2 || q2 < 2) throw std::logic_error("chain ladders need >= 2 rungs");
  PlanarBuilder b;
  std::vector<int> L, R;
  for (int i = 0; i < q1; ++i) L.push_back(b.add_crossing(over1));
  for (int i = 0; i < q2; ++i) R.push_back(b.add_crossing(over2));
  for (int i = 0; i + 1 < q1; ++i) {
    b.arc(L[i], 1, L[i + 1], 0);
    b.arc(L[i], 2, L[i + 1], 3);
  }
  for (int i = 0; i + 1 < q2; ++i) {
    b.arc(R[i], 1, R[i + 1], 0);
    b.arc(R[i], 2, R[i + 1], 3);
  }
  b.arc(L[q1 - 1], 2, L[0], 3);  // satellite A closes the left lane
  b.arc(L[q1 - 1], 1, R[0], 3);  // axis runs into the right ladder
  b.arc(R[q2 - 1], 2, L[0], 0);  // and back
  b.arc(R[q2 - 1], 1, R[0], 0);  // satellite B closes the right lane

  // map the orientation flags onto trace order: the axis is the unique
  // component passing through all q1+q2 crossings (satellites pass q1 and
  // q2 < q1+q2); the remaining two take rev_a, rev_b in trace order
  OrientedDiagram probe = OrientedDiagram::build(b.pd());
  std::vector<bool> rev;
  bool saw_first_satellite = false;
  for (const auto& comp : probe.edge_components()) {
    if (comp.size() == size_t(q1 + q2)) {
      rev.push_back(rev_m);
    } else if (!saw_first_satellite) {
      rev.push_back(rev_a);
      saw_first_satellite = true;
    } else {
      rev.push_back(rev_b);
    }
  }
  return b.pd(rev);
}

}  // namespace qep
