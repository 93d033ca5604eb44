#pragma once

// Planar diagram codes.  A crossing X(a,b,c,d) lists its four edge labels
// counterclockwise starting from the incoming under-strand, so the
// under-strand runs a -> c and the over-strand occupies slots 1 and 3.
// Labels must be 1..2V with each label appearing exactly twice.  Quadrant q
// of a crossing is the corner between arms q and q+1 (mod 4).
//
// Diagram text format: X-tuples separated by whitespace, '#' comments,
// and the directives
//   circles N    extra crossing-free components
//   outer N      face to treat as the unbounded one
//   oriented     labels claim to run consecutively along each component

#include <array>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tknot/common.hpp"

namespace tknot {

struct Crossing {
  std::array<int, 4> e;
};

struct Diagram {
  std::vector<Crossing> crossings;
  int circles = 0;
  std::optional<int> outer_hint;
  bool declared_oriented = false;

  int crossing_count() const { return int(crossings.size()); }
  int edge_count() const { return 2 * int(crossings.size()); }
};

// The two occurrences of each edge label, as occurrence indices 4*crossing +
// slot, in scan order.  Building this validates the label multiset.
struct EdgeOccurrences {
  std::vector<std::array<int, 2>> occ;  // indexed by edge label; entry 0 unused
};

inline EdgeOccurrences edge_occurrences(const Diagram& d) {
  const int E = d.edge_count();
  require(!d.crossings.empty() || d.circles > 0, "diagram: no crossings and no circles");
  require(d.circles >= 0, "diagram: negative circle count");
  EdgeOccurrences eo;
  eo.occ.assign(E + 1, {-1, -1});
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c].e[s];
      require(e >= 1 && e <= E, "edge label ", e, " out of range 1..", E);
      auto& pair = eo.occ[e];
      if (pair[0] < 0) {
        pair[0] = 4 * c + s;
      } else {
        require(pair[1] < 0, "edge label ", e, " appears more than twice");
        pair[1] = 4 * c + s;
      }
    }
  for (int e = 1; e <= E; ++e)
    require(eo.occ[e][1] >= 0, "edge label ", e, " appears fewer than twice");
  return eo;
}

inline int other_occurrence(const EdgeOccurrences& eo, int edge, int occ) {
  return eo.occ[edge][0] == occ ? eo.occ[edge][1] : eo.occ[edge][0];
}

inline void validate_diagram(const Diagram& d) { edge_occurrences(d); }

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Assign 0-based class ids ordered by smallest member, scanning labels 1..E.
inline int number_classes(UnionFind& uf, int E, std::vector<int>& id_of) {
  id_of.assign(E + 1, -1);
  std::vector<int> rep_id(E + 1, -1);
  int next = 0;
  for (int e = 1; e <= E; ++e) {
    int r = uf.find(e);
    if (rep_id[r] < 0) rep_id[r] = next++;
    id_of[e] = rep_id[r];
  }
  return next;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// components and over-strand arcs

struct Components {
  std::vector<int> of_edge;  // edge label -> component id
  int edge_components = 0;
  int count = 0;  // circles numbered after the edge-bearing components
};

inline Components diagram_components(const Diagram& d) {
  edge_occurrences(d);
  const int E = d.edge_count();
  detail::UnionFind uf(E + 1);
  for (const auto& cr : d.crossings) {
    uf.unite(cr.e[0], cr.e[2]);
    uf.unite(cr.e[1], cr.e[3]);
  }
  Components comp;
  comp.edge_components = detail::number_classes(uf, E, comp.of_edge);
  comp.count = comp.edge_components + d.circles;
  return comp;
}

// Arcs are maximal runs of edges glued across over-passes; they break at
// under-passes.  Each circle is one arc of its own, numbered last.
struct Arcs {
  std::vector<int> of_edge;
  int edge_arcs = 0;
  int count = 0;
};

inline Arcs over_arcs(const Diagram& d) {
  edge_occurrences(d);
  const int E = d.edge_count();
  detail::UnionFind uf(E + 1);
  for (const auto& cr : d.crossings) uf.unite(cr.e[1], cr.e[3]);
  Arcs arcs;
  arcs.edge_arcs = detail::number_classes(uf, E, arcs.of_edge);
  arcs.count = arcs.edge_arcs + d.circles;
  return arcs;
}

// ---------------------------------------------------------------------------
// orientation

// Directions of travel for every edge.  Slot 0 is always an arrival and slot
// 2 a departure; everything else is propagated from there.  Components that
// never pass under carry no such anchor: if their labels run consecutively
// the direction of increase wins, otherwise they are ambiguous (an error
// when strict, a deterministic pick when not).  Strict mode additionally
// demands that every component's labels be consecutive along travel, which
// is what lets signs be trusted.
struct Orientation {
  std::vector<char> arrives;    // per occurrence: edge points into the crossing
  std::vector<int> sign;        // per crossing: +1 if the over-strand enters at slot 1
  std::vector<int> head_occ;    // per edge label: occurrence where it arrives
  std::vector<int> tail_occ;    // per edge label: occurrence where it departs
  std::vector<int> succ;        // per edge label: next edge along the strand
};

inline Orientation infer_orientation(const Diagram& d, bool strict) {
  auto eo = edge_occurrences(d);
  auto comp = diagram_components(d);
  const int V = d.crossing_count(), E = d.edge_count();

  std::vector<signed char> arrives(4 * V, -1);
  std::queue<int> work;
  auto set = [&](int o, signed char val) {
    if (arrives[o] == -1) {
      arrives[o] = val;
      work.push(o);
    } else {
      require(arrives[o] == val,
              "orientation inference: direction conflict at crossing ", o / 4);
    }
  };
  for (int c = 0; c < V; ++c) {
    set(4 * c + 0, 1);
    set(4 * c + 2, 0);
  }
  while (!work.empty()) {
    int o = work.front();
    work.pop();
    int c = o / 4, s = o % 4;
    signed char flipped = arrives[o] ? 0 : 1;
    set(other_occurrence(eo, d.crossings[c].e[s], o), flipped);
    if (s == 1) set(4 * c + 3, flipped);
    if (s == 3) set(4 * c + 1, flipped);
  }

  // Walk a strand starting from a chosen arrival occurrence; returns the
  // edges in travel order paired with their arrival occurrences.
  auto walk = [&](int start) {
    std::vector<std::pair<int, int>> trail;
    int o = start;
    do {
      int c = o / 4, s = o % 4;
      trail.push_back({d.crossings[c].e[s], o});
      int out_slot = (s + 2) % 4;
      int e2 = d.crossings[c].e[out_slot];
      o = other_occurrence(eo, e2, 4 * c + out_slot);
    } while (o != start);
    return trail;
  };
  auto consecutive = [](const std::vector<std::pair<int, int>>& trail) {
    for (size_t i = 0; i < trail.size(); ++i)
      if (trail[i].first != trail[0].first + int(i)) return false;
    return true;
  };
  auto adopt = [&](const std::vector<std::pair<int, int>>& trail) {
    for (auto [e, o] : trail) {
      arrives[o] = 1;
      arrives[other_occurrence(eo, e, o)] = 0;
    }
  };

  // components that never pass under
  std::vector<int> smallest(comp.edge_components, 0);
  for (int e = E; e >= 1; --e) smallest[comp.of_edge[e]] = e;
  for (int k = 0; k < comp.edge_components; ++k) {
    int m = smallest[k];
    if (arrives[eo.occ[m][0]] != -1) continue;
    auto trail_a = walk(eo.occ[m][0]);
    auto trail_b = walk(eo.occ[m][1]);
    if (trail_a.size() >= 3 && consecutive(trail_a) && !consecutive(trail_b)) {
      adopt(trail_a);
    } else if (trail_a.size() >= 3 && consecutive(trail_b) && !consecutive(trail_a)) {
      adopt(trail_b);
    } else {
      require(!strict, "orientation inference: component containing edge ", m,
              " never passes under and its direction cannot be determined");
      adopt(trail_b);  // edge m departs from its first-listed occurrence
    }
  }

  Orientation ori;
  ori.arrives.assign(arrives.begin(), arrives.end());
  ori.head_occ.assign(E + 1, -1);
  ori.tail_occ.assign(E + 1, -1);
  ori.succ.assign(E + 1, -1);
  for (int e = 1; e <= E; ++e) {
    int a = eo.occ[e][0], b = eo.occ[e][1];
    ori.head_occ[e] = arrives[a] ? a : b;
    ori.tail_occ[e] = arrives[a] ? b : a;
    int c = ori.head_occ[e] / 4, s = ori.head_occ[e] % 4;
    ori.succ[e] = d.crossings[c].e[(s + 2) % 4];
  }
  ori.sign.assign(V, 0);
  for (int c = 0; c < V; ++c) ori.sign[c] = arrives[4 * c + 1] ? 1 : -1;

  if (strict) {
    for (int k = 0; k < comp.edge_components; ++k) {
      int m = smallest[k];
      require(consecutive(walk(ori.head_occ[m])),
              "oriented diagram: labels do not run consecutively along the "
              "component containing edge ", m);
    }
  }
  return ori;
}

// ---------------------------------------------------------------------------
// faces

// Faces of the underlying 4-valent plane graph, discovered by walking
// corners.  From the corner at quadrant s of crossing c the walk crosses the
// edge at arm s+1 to its far end.  A connected planar code yields exactly
// V+2 faces; anything else is rejected.  Crossing-free circles are taken to
// sit in the outer face, each contributing one extra face (its inside),
// numbered after the crossing faces.
struct Faces {
  int count = 0;           // total faces including circle insides
  int crossing_faces = 0;  // V+2, or 1 for a crossing-free diagram
  std::vector<int> of_quadrant;  // 4c+q -> face id
  std::vector<std::vector<std::pair<int, int>>> corners;  // per face, in walk order
  std::vector<std::vector<int>> boundary;  // per face: edge crossed after corner i
  int outer = 0;

  bool is_circle_face(int f) const { return f >= crossing_faces; }
  int circle_face(int k) const { return crossing_faces + k; }
};

inline Faces build_faces(const Diagram& d) {
  auto eo = edge_occurrences(d);
  const int V = d.crossing_count();
  Faces F;
  if (V == 0) {
    F.crossing_faces = 1;
    F.corners.emplace_back();
    F.boundary.emplace_back();
  } else {
    F.of_quadrant.assign(4 * V, -1);
    for (int start = 0; start < 4 * V; ++start) {
      if (F.of_quadrant[start] >= 0) continue;
      int id = int(F.corners.size());
      F.corners.emplace_back();
      F.boundary.emplace_back();
      int o = start;
      do {
        F.of_quadrant[o] = id;
        int c = o / 4, s = o % 4;
        F.corners[id].push_back({c, s});
        int e = d.crossings[c].e[(s + 1) % 4];
        F.boundary[id].push_back(e);
        o = other_occurrence(eo, e, 4 * c + (s + 1) % 4);
      } while (o != start);
    }
    F.crossing_faces = int(F.corners.size());
    require(F.crossing_faces == V + 2, "diagram code is not planar and connected (",
            F.crossing_faces, " faces where ", V + 2, " were expected)");
  }
  for (int k = 0; k < d.circles; ++k) {
    F.corners.emplace_back();
    F.boundary.emplace_back();
  }
  F.count = int(F.corners.size());

  if (d.outer_hint) {
    require(*d.outer_hint >= 0 && *d.outer_hint < F.crossing_faces, "outer face ",
            *d.outer_hint, " out of range 0..", F.crossing_faces - 1);
    F.outer = *d.outer_hint;
  } else {
    int best = 0;
    for (int f = 1; f < F.crossing_faces; ++f)
      if (F.boundary[f].size() > F.boundary[best].size()) best = f;
    F.outer = best;
  }
  return F;
}

// The two faces flanking an edge, read off at one of its occurrences: arm s
// separates the quadrants s-1 and s.
inline std::array<int, 2> edge_side_faces(const Faces& F, int c, int s) {
  return {F.of_quadrant[4 * c + (s + 3) % 4], F.of_quadrant[4 * c + s]};
}

// (left, right) of the directed edge at an occurrence: arriving along arm s
// puts quadrant s-1 on the left; departing flips that.
inline std::pair<int, int> directed_side_faces(const Faces& F, const Orientation& ori,
                                               int c, int s) {
  int before = F.of_quadrant[4 * c + (s + 3) % 4];
  int after = F.of_quadrant[4 * c + s];
  return ori.arrives[4 * c + s] ? std::pair{before, after} : std::pair{after, before};
}

// ---------------------------------------------------------------------------
// checkerboard coloring

struct Checkerboard {
  std::vector<char> white;  // per face id
};

inline Checkerboard checkerboard(const Diagram& d, const Faces& F) {
  std::vector<signed char> color(F.count, -1);
  color[F.outer] = 1;
  if (d.crossing_count() > 0) {
    auto eo = edge_occurrences(d);
    std::vector<std::vector<int>> adj(F.crossing_faces);
    for (int e = 1; e <= d.edge_count(); ++e) {
      int o1 = eo.occ[e][0], o2 = eo.occ[e][1];
      auto f1 = edge_side_faces(F, o1 / 4, o1 % 4);
      auto f2 = edge_side_faces(F, o2 / 4, o2 % 4);
      require((f1[0] == f2[0] && f1[1] == f2[1]) || (f1[0] == f2[1] && f1[1] == f2[0]),
              "internal: the two ends of edge ", e, " disagree about its side faces");
      adj[f1[0]].push_back(f1[1]);
      adj[f1[1]].push_back(f1[0]);
    }
    std::queue<int> q;
    q.push(F.outer);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int g : adj[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          q.push(g);
        } else {
          require(color[g] != color[f], "faces are not two-colorable");
        }
      }
    }
    for (int f = 0; f < F.crossing_faces; ++f)
      require(color[f] != -1, "internal: face ", f, " unreachable from the outer face");
  }
  for (int f = F.crossing_faces; f < F.count; ++f) color[f] = 0;  // circle insides

  Checkerboard cb;
  cb.white.assign(F.count, 0);
  for (int f = 0; f < F.count; ++f) cb.white[f] = color[f] == 1;
  return cb;
}

// ---------------------------------------------------------------------------
// text format

inline Diagram parse_pd(const std::string& text) {
  Diagram d;
  std::string stripped;
  stripped.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    stripped += comment ? ' ' : ch;
  }
  auto toks = split_ws(stripped);
  for (size_t i = 0; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "circles" || t == "outer") {
      require(i + 1 < toks.size(), "'", t, "' directive needs a number");
      int v = parse_int(toks[++i]);
      if (t == "circles") {
        require(v >= 0, "circles: negative count");
        d.circles = v;
      } else {
        require(v >= 0, "outer: negative face id");
        d.outer_hint = v;
      }
    } else if (t == "oriented") {
      d.declared_oriented = true;
    } else if (t.size() >= 4 && t[0] == 'X' && t[1] == '(' && t.back() == ')') {
      auto nums = split_on(t.substr(2, t.size() - 3), ',');
      require(nums.size() == 4, "crossing '", t, "': need four edge labels");
      Crossing cr;
      for (int k = 0; k < 4; ++k) cr.e[k] = parse_int(nums[k]);
      d.crossings.push_back(cr);
    } else {
      fail("unrecognized token '", t, "' in diagram text");
    }
  }
  validate_diagram(d);
  return d;
}

inline std::string write_pd(const Diagram& d) {
  std::ostringstream os;
  if (d.declared_oriented) os << "oriented\n";
  if (d.circles > 0) os << "circles " << d.circles << "\n";
  if (d.outer_hint) os << "outer " << *d.outer_hint << "\n";
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& e = d.crossings[c].e;
    os << "X(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
    os << (c % 6 == 5 || c + 1 == d.crossings.size() ? "\n" : " ");
  }
  return os.str();
}

}  // namespace tknot
