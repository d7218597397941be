#pragma once

// Region colorings of a diagram over the two-element tribracket
// [a,b,c] = a+b-c on Z/2Z.  A coloring is stored canonically as a base
// color together with the subset of components across which adjacent
// regions differ; the face color map is a derived cache.

#include <stdexcept>
#include <vector>

#include "qep/diagram.hpp"

namespace qep {

struct ColorTriple {
  int x, y, z;
};

class Coloring {
 public:
  // base_face = -1 uses the diagram's canonical base face; the family of
  // colorings does not depend on the choice.
  Coloring(const OrientedDiagram& d, int base_color, std::vector<bool> d1,
           int base_face = -1)
      : base_color_(base_color), d1_(std::move(d1)) {
    if (int(d1_.size()) != d.num_components())
      throw DiagramError("coloring: component subset size mismatch");
    if (base_face < 0) base_face = d.base_face();
    face_colors_.assign(d.num_faces(), -1);
    if (d.num_crossings() == 0) {
      face_colors_[0] = base_color_;
      for (int i = 0; i < d.unknot_circles(); ++i)
        face_colors_[1 + i] = base_color_ ^ int(d1_[i]);
      if (base_face != 0 && face_colors_[base_face] != base_color_)
        for (auto& c : face_colors_) c ^= 1;
      return;
    }
    // breadth-first traversal of the dual graph from the base face,
    // flipping across D1 edges and copying across D2 edges
    face_colors_[base_face] = base_color_;
    std::vector<int> queue{base_face};
    std::vector<std::vector<std::pair<int, int>>> adj(d.num_faces());
    for (int e = 1; e <= d.num_edges(); ++e) {
      auto [f1, f2] = d.edge_side_faces(e);
      int flip = d1_[d.component_of_edge(e)] ? 1 : 0;
      adj[f1].push_back({f2, flip});
      adj[f2].push_back({f1, flip});
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (auto [g, flip] : adj[f]) {
        int want = face_colors_[f] ^ flip;
        if (face_colors_[g] == -1) {
          face_colors_[g] = want;
          queue.push_back(g);
        } else if (face_colors_[g] != want) {
          throw DiagramError("coloring: inconsistent region colors");
        }
      }
    }
    for (int c : face_colors_)
      if (c == -1) throw DiagramError("coloring: unreached region");
  }

  int base_color() const { return base_color_; }
  const std::vector<bool>& d1() const { return d1_; }
  const std::vector<int>& face_colors() const { return face_colors_; }
  int face_color(int f) const { return face_colors_[f]; }

  bool is_trivial() const {
    for (bool b : d1_)
      if (b) return false;
    return true;
  }
  bool is_checkerboard() const {
    for (bool b : d1_)
      if (!b) return false;
    return true;
  }
  bool is_tc() const { return is_trivial() || is_checkerboard(); }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.face_colors_ == b.face_colors_;
  }

 private:
  int base_color_;
  std::vector<bool> d1_;
  std::vector<int> face_colors_;
};

// (x,y,z) read from the region colors around a crossing; the fourth region
// must carry [x,y,z] = x+y-z mod 2.
inline ColorTriple color_triple(const OrientedDiagram& d, const Coloring& c,
                                int v) {
  auto q = d.coloring_quadrants(v);
  ColorTriple t{c.face_color(q.x), c.face_color(q.y), c.face_color(q.z)};
  int expect = ((t.x + t.y - t.z) % 2 + 2) % 2;
  if (c.face_color(q.t) != expect)
    throw DiagramError("coloring: fourth-region rule violated");
  return t;
}

// All 2^(n+1) colorings, ordered by (base color, subset bitmask).
inline std::vector<Coloring> enumerate_colorings(const OrientedDiagram& d) {
  const int n = d.num_components();
  std::vector<Coloring> out;
  out.reserve(size_t(2) << n);
  for (int a = 0; a <= 1; ++a) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> d1(n);
      for (int i = 0; i < n; ++i) d1[i] = (mask >> i) & 1;
      out.emplace_back(d, a, std::move(d1));
    }
  }
  return out;
}

inline Coloring complement(const OrientedDiagram& d, const Coloring& c) {
  return Coloring(d, c.base_color() ^ 1, c.d1());
}

// Exhaustive oracle: every face-color assignment satisfying the coloring
// rule at each crossing.  Only for small diagrams.
inline std::vector<std::vector<int>> brute_force_colorings(
    const OrientedDiagram& d) {
  const int f = d.num_faces();
  if (f > 12) throw DiagramError("brute_force_colorings: too many faces");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<int> colors(f);
    for (int i = 0; i < f; ++i) colors[i] = (mask >> i) & 1;
    bool ok = true;
    for (int v = 0; v < d.num_crossings() && ok; ++v) {
      auto q = d.coloring_quadrants(v);
      int expect =
          ((colors[q.x] + colors[q.y] - colors[q.z]) % 2 + 2) % 2;
      ok = colors[q.t] == expect;
    }
    if (ok) out.push_back(std::move(colors));
  }
  return out;
}

// Census of shadow crossings between a D1 strand and a D2 strand, split by
// the crossing direction of the D1 strand over the D2 strand's orientation
// (r = right-to-left, l = left-to-right) and by the color on the left of
// the D2 strand as it enters the crossing.
struct CrossingCensus {
  int r0 = 0, r1 = 0, l0 = 0, l1 = 0;
};

inline CrossingCensus d1_d2_census(const OrientedDiagram& d,
                                   const Coloring& c) {
  CrossingCensus out;
  for (int v = 0; v < d.num_crossings(); ++v) {
    const auto& cr = d.crossings()[v];
    int comp_under = d.component_of_strand(v, false);
    int comp_over = d.component_of_strand(v, true);
    bool under_d1 = c.d1()[comp_under];
    bool over_d1 = c.d1()[comp_over];
    if (under_d1 == over_d1) continue;
    // in/out slots of the D2 strand and the out slot of the D1 strand
    int d2_in = under_d1 ? cr.over_in : cr.under_in;
    int d1_out = (under_d1 ? cr.under_in : cr.over_in) ^ 2;
    bool right_to_left = d1_out == ((d2_in + 2 + 1) & 3);
    int left_color = c.face_color(d.corner_face(v, (d2_in + 3) & 3));
    if (right_to_left)
      (left_color ? out.r1 : out.r0)++;
    else
      (left_color ? out.l1 : out.l0)++;
  }
  return out;
}

}  // namespace qep
