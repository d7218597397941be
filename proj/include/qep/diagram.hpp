#pragma once

// Oriented PD codes and the combinatorial diagrams built from them:
// crossings with counterclockwise rotation data, edges, components, signs,
// planar faces, mirrors, state smoothings and Reidemeister-I kinks.
//
// Convention: X[a,b,c,d] lists the four edge-ends counterclockwise starting
// from the incoming under-strand edge a.  The over-strand direction is
// inferred from the successor rule on edge labels (labels are consecutive
// along each component); an explicit sign:+/sign:- annotation overrides the
// inference.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qep {

struct PDParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PDCode {
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> sign_hints;  // per tuple: +1, -1, or 0 (no annotation)
  int unknot_components = 0;

  std::string text() const {
    std::ostringstream os;
    if (unknot_components > 0) os << "unknots=" << unknot_components;
    for (size_t i = 0; i < tuples.size(); ++i) {
      if (os.tellp() > 0) os << " ";
      os << "X[" << tuples[i][0] << "," << tuples[i][1] << "," << tuples[i][2]
         << "," << tuples[i][3] << "]";
      if (sign_hints[i] > 0) os << "sign:+";
      if (sign_hints[i] < 0) os << "sign:-";
    }
    return os.str();
  }
};

// Grammar: whitespace-separated X[a,b,c,d] tokens, optional PD[...] wrapper
// with comma separators, optional sign:+/sign:- suffix per crossing, optional
// unknots=<k> directive, # comments.
inline PDCode parse_pd(const std::string& input) {
  std::string text;
  text.reserve(input.size());
  // strip comments
  for (size_t i = 0; i < input.size();) {
    if (input[i] == '#') {
      while (i < input.size() && input[i] != '\n') ++i;
    } else {
      text.push_back(input[i++]);
    }
  }
  // tolerate the PD[...] wrapper and comma separators between tokens
  for (auto& ch : text)
    if (ch == ',' || ch == '\n' || ch == '\t') ch = ch == ',' ? ',' : ' ';

  PDCode pd;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == ',' || text[i] == '\r'))
      ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw PDParseError("expected integer in PD code");
    return std::stoi(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw PDParseError(std::string("expected '") + c + "' in PD code");
    ++i;
  };

  bool wrapped = false;
  skip_ws();
  if (text.compare(i, 3, "PD[") == 0) {
    wrapped = true;
    i += 3;
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (wrapped && text[i] == ']') {
      ++i;
      wrapped = false;
      continue;
    }
    if (text.compare(i, 8, "unknots=") == 0) {
      i += 8;
      int k = read_int();
      if (k < 0) throw PDParseError("unknots= must be non-negative");
      pd.unknot_components += k;
      continue;
    }
    if (text[i] == 'X') {
      ++i;
      expect('[');
      std::array<int, 4> t;
      for (int j = 0; j < 4; ++j) {
        t[j] = read_int();
        if (t[j] <= 0) throw PDParseError("edge labels must be positive");
      }
      expect(']');
      int hint = 0;
      skip_ws();
      if (text.compare(i, 6, "sign:+") == 0) {
        hint = 1;
        i += 6;
      } else if (text.compare(i, 6, "sign:-") == 0) {
        hint = -1;
        i += 6;
      }
      pd.tuples.push_back(t);
      pd.sign_hints.push_back(hint);
      continue;
    }
    throw PDParseError("unrecognized token in PD code at: " + text.substr(i, 12));
  }
  if (wrapped) throw PDParseError("unterminated PD[ wrapper");
  if (pd.tuples.empty() && pd.unknot_components == 0)
    throw PDParseError("empty PD code");

  // every label occurs exactly twice
  std::map<int, int> count;
  for (auto& t : pd.tuples)
    for (int e : t) count[e]++;
  int maxlabel = 0;
  for (auto& [e, c] : count) {
    if (c != 2)
      throw PDParseError("edge label " + std::to_string(e) + " occurs " +
                         std::to_string(c) + " times (expected 2)");
    maxlabel = std::max(maxlabel, e);
  }
  if (!pd.tuples.empty() && maxlabel != int(2 * pd.tuples.size()))
    throw PDParseError("edge labels must be 1..2m");
  for (int e = 1; e <= maxlabel; ++e)
    if (!count.count(e))
      throw PDParseError("edge label " + std::to_string(e) + " missing");
  return pd;
}

// A state assigns an A- or B-smoothing label to every crossing.
struct State {
  std::vector<bool> use_B;  // false = A, true = B
};

// Small union-find used for circle counting and connectivity checks.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

 private:
  std::vector<int> parent_;
};

class OrientedDiagram {
 public:
  struct Crossing {
    std::array<int, 4> edge;  // edge label at each slot, ccw
    int under_in = 0;         // slot of the incoming under-strand end
    int over_in = 0;          // slot of the incoming over-strand end
    int sign = 0;
  };

  static OrientedDiagram build(const PDCode& pd) {
    OrientedDiagram d;
    d.pd_ = pd;
    d.unknot_circles_ = pd.unknot_components;
    d.num_edges_ = int(2 * pd.tuples.size());
    if (!pd.tuples.empty() && pd.unknot_components > 0)
      throw DiagramError("mixed crossing diagram and detached circles");

    if (pd.tuples.empty()) {
      // pure unlink: k circles bound k+1 nested-free regions; the circle
      // components carry ids 0..k-1 and own no edges
      d.num_faces_ = d.unknot_circles_ + 1;
      d.base_face_ = 0;
      return d;
    }

    const int m = int(pd.tuples.size());

    // components of edge labels, via the two strand passages per crossing
    UnionFind uf(d.num_edges_ + 1);
    for (auto& t : pd.tuples) {
      uf.unite(t[0], t[2]);
      uf.unite(t[1], t[3]);
    }
    std::map<int, std::vector<int>> comps;
    for (int e = 1; e <= d.num_edges_; ++e) comps[uf.find(e)].push_back(e);
    for (auto& [root, edges] : comps) {
      std::sort(edges.begin(), edges.end());
      if (edges.back() - edges.front() + 1 != int(edges.size()))
        throw DiagramError("component edge labels are not consecutive");
      d.components_.push_back(edges);
    }
    std::sort(d.components_.begin(), d.components_.end());
    d.comp_of_edge_.assign(d.num_edges_ + 1, -1);
    for (int ci = 0; ci < int(d.components_.size()); ++ci)
      for (int e : d.components_[ci]) d.comp_of_edge_[e] = ci;

    auto succ = [&](int e) {
      const auto& c = d.components_[d.comp_of_edge_[e]];
      return e == c.back() ? c.front() : e + 1;
    };

    d.crossings_.resize(m);
    for (int v = 0; v < m; ++v) {
      auto& cr = d.crossings_[v];
      cr.edge = pd.tuples[v];
      cr.under_in = 0;
      if (succ(cr.edge[0]) != cr.edge[2])
        throw DiagramError("under-strand labels violate the successor rule");
    }

    // Over-strand directions.  Each edge end is a head (strand arrives) or a
    // tail (strand departs), and every edge has exactly one of each.  Under
    // passages fix their two ends; over passages are resolved by propagating
    // that balance, with the successor rule as validity check and the
    // annotation (or the non-wraparound reading) breaking residual ties.
    {
      std::map<int, std::vector<std::pair<int, int>>> sites;  // edge -> (v,slot)
      for (int v = 0; v < m; ++v)
        for (int k = 0; k < 4; ++k)
          sites[d.crossings_[v].edge[k]].push_back({v, k});
      // 0 unknown, 1 head, -1 tail
      std::vector<std::array<int, 4>> status(m, {0, 0, 0, 0});
      std::vector<int> over_in(m, 0);
      auto other_site = [&](int v, int k) {
        const auto& s = sites[d.crossings_[v].edge[k]];
        return s[0] == std::make_pair(v, k) ? s[1] : s[0];
      };
      // propagate one end's status through its edge and its over passage
      std::vector<std::pair<int, int>> work;
      auto set_status = [&](int v, int k, int st) {
        if (status[v][k] == st) return;
        if (status[v][k] != 0)
          throw DiagramError("inconsistent strand orientation");
        status[v][k] = st;
        work.push_back({v, k});
      };
      for (int v = 0; v < m; ++v) {
        set_status(v, 0, 1);
        set_status(v, 2, -1);
      }
      auto drain = [&] {
        while (!work.empty()) {
          auto [v, k] = work.back();
          work.pop_back();
          auto [w, j] = other_site(v, k);
          set_status(w, j, -status[v][k]);
          if (k == 1 || k == 3) {
            // the over passage has one head and one tail
            set_status(v, k ^ 2, -status[v][k]);
          }
        }
      };
      drain();
      for (int v = 0; v < m; ++v) {
        auto& cr = d.crossings_[v];
        if (status[v][1] == 0) {
          // an all-over two-edge component; fall back to the annotation or
          // the non-wraparound successor reading
          int b = cr.edge[1], dd = cr.edge[3];
          int oi;
          if (pd.sign_hints[v] > 0)
            oi = 3;
          else if (pd.sign_hints[v] < 0)
            oi = 1;
          else if (dd == b + 1)
            oi = 1;
          else if (b == dd + 1)
            oi = 3;
          else
            throw DiagramError("ambiguous orientation; sign annotation required");
          set_status(v, oi, 1);
          drain();
        }
        over_in[v] = status[v][1] == 1 ? 1 : 3;
        // the arriving over edge must be succeeded by the departing one
        if (succ(cr.edge[over_in[v]]) != cr.edge[over_in[v] ^ 2])
          throw DiagramError("over-strand labels violate the successor rule");
        cr.over_in = over_in[v];
        cr.sign = cr.over_in == 3 ? 1 : -1;
        if (pd.sign_hints[v] != 0 && pd.sign_hints[v] != cr.sign)
          throw DiagramError("sign annotation contradicts orientation data");
      }
    }

    // connected shadow check
    UnionFind cf(m);
    std::map<int, std::vector<int>> edge_sites;
    for (int v = 0; v < m; ++v)
      for (int k = 0; k < 4; ++k) edge_sites[d.crossings_[v].edge[k]].push_back(v);
    for (auto& [e, vs] : edge_sites) cf.unite(vs[0], vs[1]);
    for (int v = 0; v < m; ++v)
      if (cf.find(v) != cf.find(0))
        throw DiagramError("disconnected shadow (split diagrams unsupported)");

    // dart pairing: the two occurrences of each edge label
    d.other_end_.assign(4 * m, -1);
    {
      std::map<int, std::vector<int>> at;
      for (int v = 0; v < m; ++v)
        for (int k = 0; k < 4; ++k) at[d.crossings_[v].edge[k]].push_back(4 * v + k);
      for (auto& [e, darts] : at) {
        d.other_end_[darts[0]] = darts[1];
        d.other_end_[darts[1]] = darts[0];
      }
    }

    // faces: orbits of sigma(alpha(dart)), sigma = ccw slot rotation
    d.face_of_dart_.assign(4 * m, -1);
    int nf = 0;
    for (int start = 0; start < 4 * m; ++start) {
      if (d.face_of_dart_[start] != -1) continue;
      int dart = start;
      while (d.face_of_dart_[dart] == -1) {
        d.face_of_dart_[dart] = nf;
        int opp = d.other_end_[dart];
        dart = (opp & ~3) | ((opp + 1) & 3);
      }
      ++nf;
    }
    d.num_faces_ = nf;
    if (m - d.num_edges_ + nf != 2)
      throw DiagramError("Euler check failed (non-planar rotation data)");

    // the face holding the first-traced side of edge 1
    {
      int best = -1;
      for (int v = 0; v < m && best < 0; ++v)
        for (int k = 0; k < 4 && best < 0; ++k)
          if (d.crossings_[v].edge[k] == 1) best = 4 * v + k;
      d.base_face_ = d.face_of_dart_[best];
    }
    return d;
  }

  int num_crossings() const { return int(crossings_.size()); }
  int num_edges() const { return num_edges_; }
  int num_faces() const { return num_faces_; }
  int num_components() const {
    return int(components_.size()) + unknot_circles_;
  }
  int num_link_components() const { return num_components(); }
  int unknot_circles() const { return unknot_circles_; }
  int base_face() const { return base_face_; }
  const PDCode& pd() const { return pd_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::vector<int>>& edge_components() const {
    return components_;
  }

  int sign(int v) const { return crossings_[v].sign; }

  int writhe() const {
    int w = 0;
    for (auto& c : crossings_) w += c.sign;
    return w;
  }

  int positive_crossings() const {
    int p = 0;
    for (auto& c : crossings_) p += c.sign > 0;
    return p;
  }
  int negative_crossings() const {
    return num_crossings() - positive_crossings();
  }

  // Component of an edge label (crossing components come first, then the
  // detached circles).
  int component_of_edge(int e) const { return comp_of_edge_[e]; }

  int component_of_strand(int v, bool over) const {
    const auto& c = crossings_[v];
    return comp_of_edge_[c.edge[over ? c.over_in : c.under_in]];
  }

  // Face at the corner between slots k and k+1 of crossing v.
  int corner_face(int v, int k) const {
    return face_of_dart_[4 * v + ((k + 1) & 3)];
  }

  // The two faces on the sides of an edge.
  std::array<int, 2> edge_side_faces(int e) const {
    for (int v = 0; v < num_crossings(); ++v)
      for (int k = 0; k < 4; ++k)
        if (crossings_[v].edge[k] == e)
          return {face_of_dart_[4 * v + k], face_of_dart_[4 * v + ((k + 1) & 3)]};
    throw DiagramError("edge not found");
  }

  int face_of_dart(int dart) const { return face_of_dart_[dart]; }

  // Quadrant faces around a crossing in the roles of the region-coloring
  // rule: x is the corner between the incoming under-strand end and the
  // outgoing over-strand end, y lies across the over-strand from x, z
  // across the under-strand, and t (the remaining corner) carries [x,y,z].
  struct QuadFaces {
    int x, y, z, t;
  };
  QuadFaces coloring_quadrants(int v) const {
    const auto& c = crossings_[v];
    const int u = c.under_in;
    if (c.sign > 0)
      return {corner_face(v, u), corner_face(v, (u + 1) & 3),
              corner_face(v, (u + 3) & 3), corner_face(v, (u + 2) & 3)};
    return {corner_face(v, (u + 3) & 3), corner_face(v, (u + 2) & 3),
            corner_face(v, u), corner_face(v, (u + 1) & 3)};
  }

  // Mirror image: over/under swapped at every crossing, signs negated,
  // faces untouched.
  OrientedDiagram mirror() const {
    OrientedDiagram d = *this;
    for (size_t v = 0; v < d.crossings_.size(); ++v) {
      auto& c = d.crossings_[v];
      std::swap(c.under_in, c.over_in);
      c.sign = -c.sign;
      // keep the stored PD in sync: re-root the tuple at the new under-in
      std::array<int, 4> t;
      for (int k = 0; k < 4; ++k) t[k] = c.edge[(c.under_in + k) & 3];
      d.pd_.tuples[v] = t;
      d.pd_.sign_hints[v] = c.sign;
    }
    // re-rooting the tuples does not change darts or faces, but the stored
    // slot indices are relative to the crossing, so rebuild from the PD to
    // keep every index base-0 again.
    return build(d.pd_);
  }

  // Number of circles after smoothing every crossing according to the state
  // (Table-1 pairing: Kauffman A iff s(c)=A xor sign(c)=-1), plus one circle
  // per detached unknot component.
  int smooth_and_count(const State& s) const {
    UnionFind uf(4 * num_crossings());
    return smooth_and_count_with(uf, s);
  }

  int smooth_and_count_with(UnionFind& uf, const State& s) const {
    const int m = num_crossings();
    if (int(s.use_B.size()) != m)
      throw DiagramError("state size mismatch");
    if (m == 0) return unknot_circles_;
    uf.reset();
    for (int dart = 0; dart < 4 * m; ++dart)
      uf.unite(dart, other_end_[dart]);
    for (int v = 0; v < m; ++v) {
      const bool kauffman_A = s.use_B[v] == (crossings_[v].sign == -1);
      const int u = crossings_[v].under_in;
      // Kauffman A pairs (u,u+1),(u+2,u+3); B pairs (u+1,u+2),(u+3,u)
      const int off = kauffman_A ? 0 : 1;
      uf.unite(4 * v + ((u + off) & 3), 4 * v + ((u + off + 1) & 3));
      uf.unite(4 * v + ((u + off + 2) & 3), 4 * v + ((u + off + 3) & 3));
    }
    int circles = 0;
    for (int dart = 0; dart < 4 * m; ++dart) circles += uf.find(dart) == dart;
    return circles + unknot_circles_;
  }

  // Insert a Reidemeister-I kink of the requested handedness on an edge
  // (edge 0 = a detached unknot circle).  Labels above the insertion point
  // shift by 2.
  PDCode kinked_pd(int edge, int handedness) const {
    if (handedness != 1 && handedness != -1)
      throw DiagramError("kink handedness must be +1 or -1");
    PDCode out;
    if (edge == 0) {
      if (unknot_circles_ == 0) throw DiagramError("no unknot circle to kink");
      if (num_crossings() != 0)
        throw DiagramError("cannot kink a detached circle of a mixed diagram");
      out.unknot_components = unknot_circles_ - 1;
      int l = 1;
      if (handedness > 0)
        out.tuples.push_back({l, l, l + 1, l + 1});
      else
        out.tuples.push_back({l, l + 1, l + 1, l});
      out.sign_hints.push_back(handedness);
      return out;
    }
    if (edge < 1 || edge > num_edges_) throw DiagramError("no such edge");
    out.unknot_components = unknot_circles_;
    // relabel: labels > edge shift by 2; the head occurrence of `edge`
    // becomes edge+2, the loop is edge+1
    const int m = num_crossings();
    for (int v = 0; v < m; ++v) {
      const auto& c = crossings_[v];
      std::array<int, 4> t;
      for (int k = 0; k < 4; ++k) {
        int e = c.edge[k];
        bool incoming = k == c.under_in || k == c.over_in;
        if (e > edge)
          t[k] = e + 2;
        else if (e == edge && incoming)
          t[k] = e + 2;
        else
          t[k] = e;
      }
      // re-root at the under-in slot so the emitted tuple starts there
      std::array<int, 4> rooted;
      for (int k = 0; k < 4; ++k) rooted[k] = t[(c.under_in + k) & 3];
      out.tuples.push_back(rooted);
      out.sign_hints.push_back(c.sign);
    }
    const int l = edge;
    if (handedness < 0)
      out.tuples.push_back({l, l + 1, l + 1, l + 2});
    else
      out.tuples.push_back({l, l + 2, l + 1, l + 1});
    out.sign_hints.push_back(handedness);
    return out;
  }

  OrientedDiagram apply_r1(int edge, int handedness) const {
    return build(kinked_pd(edge, handedness));
  }

  // PD code of the diagram with the flagged components' orientations
  // reversed.  Edge labels of a reversed component are renumbered to stay
  // consecutive along the new orientation.
  PDCode reversed_pd(const std::vector<bool>& reverse_component) const {
    if (int(reverse_component.size()) != num_components())
      throw DiagramError("reversal flags do not match component count");
    PDCode out;
    out.unknot_components = unknot_circles_;
    auto relabel = [&](int e) {
      int comp = comp_of_edge_[e];
      if (!reverse_component[comp]) return e;
      int lo = components_[comp].front(), hi = components_[comp].back();
      return lo + hi - e;
    };
    for (const auto& c : crossings_) {
      bool under_rev = reverse_component[comp_of_edge_[c.edge[c.under_in]]];
      bool over_rev = reverse_component[comp_of_edge_[c.edge[c.over_in]]];
      int u = under_rev ? (c.under_in ^ 2) : c.under_in;
      int o = over_rev ? (c.over_in ^ 2) : c.over_in;
      std::array<int, 4> t;
      for (int k = 0; k < 4; ++k) t[k] = relabel(c.edge[(u + k) & 3]);
      out.tuples.push_back(t);
      out.sign_hints.push_back(o == ((u + 3) & 3) ? 1 : -1);
    }
    return out;
  }

 private:
  PDCode pd_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;  // edge labels per component
  std::vector<int> comp_of_edge_;
  std::vector<int> other_end_;
  std::vector<int> face_of_dart_;
  int num_edges_ = 0;
  int num_faces_ = 0;
  int base_face_ = 0;
  int unknot_circles_ = 0;
};

}  // namespace qep
