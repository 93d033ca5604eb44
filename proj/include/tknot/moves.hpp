#pragma once

// Reidemeister moves as rewrites on PD codes.
//
// Every move is built the same way: the old edges become symbols carrying a
// provenance tag (old edge id, split index) plus the darts where they arrive
// and depart; the move splices in new symbols and rewires darts; then the
// symbols are renumbered canonically.  Components are ordered by their
// smallest provenance, numbering starts at that symbol and follows the
// strand, so the output is deterministic and its labels run consecutively
// along travel, which the post-checks (label validity, Euler count,
// orientation closure) re-verify.
//
// Site addressing: R1 takes an edge id, with 0 standing for the first
// crossing-free circle; R2 takes a face plus two of its boundary edges (if
// an edge bounds the face on both sides, its first visit in the boundary
// walk decides directions); R3 takes a triangular face where one strand
// passes over the other two.  Moves are generators: an R1 that removes a
// kink is not provided, only the four ways of adding one.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "tknot/common.hpp"
#include "tknot/diagram.hpp"

namespace tknot {

enum class R1Variant { under_left, under_right, over_left, over_right };
enum class R2Variant { a_over, a_under };

inline const char* r1_variant_name(R1Variant v) {
  switch (v) {
    case R1Variant::under_left: return "under-left";
    case R1Variant::under_right: return "under-right";
    case R1Variant::over_left: return "over-left";
    case R1Variant::over_right: return "over-right";
  }
  return "?";
}

inline R1Variant parse_r1_variant(const std::string& s) {
  for (auto v : {R1Variant::under_left, R1Variant::under_right, R1Variant::over_left,
                 R1Variant::over_right})
    if (s == r1_variant_name(v)) return v;
  fail("unknown r1 variant '", s, "' (under-left, under-right, over-left, over-right)");
}

inline const char* r2_variant_name(R2Variant v) {
  return v == R2Variant::a_over ? "a-over" : "a-under";
}

inline R2Variant parse_r2_variant(const std::string& s) {
  if (s == "a-over") return R2Variant::a_over;
  if (s == "a-under") return R2Variant::a_under;
  fail("unknown r2 variant '", s, "' (a-over, a-under)");
}

namespace detail {

// Scratch state for a rewrite: crossings hold symbol ids (0-based), and each
// symbol knows its provenance and its arriving/departing dart (4c+s).
struct MoveBuild {
  std::vector<std::array<int, 4>> cross;
  std::vector<std::pair<int, int>> prov;
  std::vector<int> head, tail;
  int circles = 0;
  Orientation ori;

  void init(const Diagram& d) {
    ori = infer_orientation(d, false);
    circles = d.circles;
    for (int e = 1; e <= d.edge_count(); ++e) {
      prov.push_back({e, 0});
      head.push_back(ori.head_occ[e]);
      tail.push_back(ori.tail_occ[e]);
    }
    cross.resize(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) cross[c][s] = d.crossings[c].e[s] - 1;
  }

  int add(int orig, int sub) {
    prov.push_back({orig, sub});
    head.push_back(-1);
    tail.push_back(-1);
    return int(prov.size()) - 1;
  }
};

inline Diagram finalize(const MoveBuild& b, bool declared_oriented, int expect_faces) {
  const int S = int(b.prov.size());
  std::vector<int> uses(S, 0);
  for (const auto& cr : b.cross)
    for (int s : cr) {
      require(s >= 0 && s < S, "move bookkeeping: slot holds no symbol");
      ++uses[s];
    }
  std::vector<int> succ(S, -1);
  for (int s = 0; s < S; ++s) {
    require(uses[s] == 2, "move bookkeeping: symbol not used exactly twice");
    require(b.head[s] >= 0 && b.tail[s] >= 0 && b.head[s] != b.tail[s],
            "move bookkeeping: symbol darts unset");
    require(b.cross[b.head[s] / 4][b.head[s] % 4] == s &&
                b.cross[b.tail[s] / 4][b.tail[s] % 4] == s,
            "move bookkeeping: dart does not hold its symbol");
    int hc = b.head[s] / 4, hs = b.head[s] % 4;
    int nxt = b.cross[hc][(hs + 2) % 4];
    require(b.tail[nxt] == 4 * hc + (hs + 2) % 4, "move bookkeeping: strand discontinuity");
    succ[s] = nxt;
  }

  // orbit the strands; each component is keyed by its smallest provenance
  std::vector<int> comp(S, -1), comp_start;
  for (int s = 0; s < S; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(comp_start.size());
    int best = s;
    for (int t = s; comp[t] < 0; t = succ[t]) {
      comp[t] = id;
      if (b.prov[t] < b.prov[best]) best = t;
    }
    comp_start.push_back(best);
  }
  std::sort(comp_start.begin(), comp_start.end(),
            [&](int a, int c) { return b.prov[a] < b.prov[c]; });

  std::vector<int> label(S, 0);
  int next = 1;
  for (int s0 : comp_start) {
    int s = s0;
    do {
      label[s] = next++;
      s = succ[s];
    } while (s != s0);
  }

  Diagram out;
  out.circles = b.circles;
  out.declared_oriented = declared_oriented;
  out.crossings.resize(b.cross.size());
  for (size_t c = 0; c < b.cross.size(); ++c)
    for (int s = 0; s < 4; ++s) out.crossings[c].e[s] = label[b.cross[c][s]];
  validate_diagram(out);
  auto F = build_faces(out);
  require(F.count == expect_faces, "move produced ", F.count, " faces where ", expect_faces,
          " were expected");
  infer_orientation(out, false);
  return out;
}

}  // namespace detail

// Add a kink on an edge (or on the first circle when edge = 0).  The strand
// segment e splits into e1 -> e2 -> e3 along travel; the variant says
// whether the strand passes under or over itself first and on which side
// the loop hangs.  Under-right and over-left kinks are positive crossings,
// the other two negative.
inline Diagram apply_r1(const Diagram& d, int edge, R1Variant v) {
  int faces_before = build_faces(d).count;
  detail::MoveBuild b;
  b.init(d);
  const int V = d.crossing_count();
  int s1, s2, s3;
  if (edge == 0) {
    require(d.circles > 0, "r1: no crossing-free circle to kink");
    b.circles -= 1;
    int base = d.edge_count() + 1;
    s1 = b.add(base, 0);
    s2 = b.add(base, 1);
    s3 = s1;  // the loop closes straight back up
  } else {
    require(edge >= 1 && edge <= d.edge_count(), "r1: no edge ", edge);
    s1 = edge - 1;
    s2 = b.add(edge, 1);
    s3 = b.add(edge, 2);
    int hd = b.head[s1];  // old arrival now belongs to the last segment
    b.cross[hd / 4][hd % 4] = s3;
    b.head[s3] = hd;
  }
  std::array<int, 4> t{};
  switch (v) {
    case R1Variant::under_right:
      t = {s1, s2, s2, s3};
      b.head[s1] = 4 * V + 0;
      b.tail[s2] = 4 * V + 2;
      b.head[s2] = 4 * V + 1;
      b.tail[s3] = 4 * V + 3;
      break;
    case R1Variant::under_left:
      t = {s1, s3, s2, s2};
      b.head[s1] = 4 * V + 0;
      b.tail[s2] = 4 * V + 2;
      b.head[s2] = 4 * V + 3;
      b.tail[s3] = 4 * V + 1;
      break;
    case R1Variant::over_left:
      t = {s2, s1, s3, s2};
      b.head[s1] = 4 * V + 1;
      b.tail[s2] = 4 * V + 3;
      b.head[s2] = 4 * V + 0;
      b.tail[s3] = 4 * V + 2;
      break;
    case R1Variant::over_right:
      t = {s2, s2, s3, s1};
      b.head[s1] = 4 * V + 3;
      b.tail[s2] = 4 * V + 1;
      b.head[s2] = 4 * V + 0;
      b.tail[s3] = 4 * V + 2;
      break;
  }
  b.cross.push_back(t);
  return detail::finalize(b, d.declared_oriented, faces_before + 1);
}

// Poke edge_a across a face over (or under) edge_b.  Both strands split in
// three; the two new crossings have opposite signs.  Directions are read
// off the face's boundary walk: call the walk direction along edge_a
// "north" (the face lies east of it), so strand A is northbound when its
// travel agrees with the walk there, and strand B, on the far side, is
// northbound when its travel opposes the walk.  The first new crossing is
// the one where A heads east, the second the one where it comes back.
inline Diagram apply_r2(const Diagram& d, int face, int edge_a, int edge_b, R2Variant v) {
  auto F = build_faces(d);
  require(face >= 0 && face < F.crossing_faces, "r2: face ", face, " has no boundary to poke");
  require(edge_a != edge_b, "r2: need two distinct edges");
  int ia = -1, ib = -1;
  const auto& bd = F.boundary[face];
  for (int i = 0; i < int(bd.size()); ++i) {
    if (bd[i] == edge_a && ia < 0) ia = i;
    if (bd[i] == edge_b && ib < 0) ib = i;
  }
  require(ia >= 0, "r2: edge ", edge_a, " does not bound face ", face);
  require(ib >= 0, "r2: edge ", edge_b, " does not bound face ", face);

  int faces_before = F.count;
  detail::MoveBuild b;
  b.init(d);
  auto walk_leave = [&](int i) {
    auto [c, s] = F.corners[face][i];
    return 4 * c + (s + 1) % 4;
  };
  bool a_north = b.ori.tail_occ[edge_a] == walk_leave(ia);
  bool b_north = b.ori.head_occ[edge_b] == walk_leave(ib);

  // split both edges along travel; the outer segments keep the old hookups
  auto split3 = [&](int e, int& x1, int& x2, int& x3) {
    x1 = e - 1;
    x2 = b.add(e, 1);
    x3 = b.add(e, 2);
    int hd = b.head[x1];
    b.cross[hd / 4][hd % 4] = x3;
    b.head[x3] = hd;
  };
  int a1, a2, a3, b1, b2, b3;
  split3(edge_a, a1, a2, a3);
  split3(edge_b, b1, b2, b3);

  const int V = d.crossing_count();
  const int E = 4 * V, W = 4 * (V + 1);  // dart bases of the two new crossings
  std::array<int, 4> xe{}, xw{};
  if (v == R2Variant::a_under) {
    // A runs under both crossings: in at slot 0, out at slot 2
    b.head[a1] = E + 0;
    b.tail[a2] = E + 2;
    b.head[a2] = W + 0;
    b.tail[a3] = W + 2;
    if (a_north && b_north) {
      xe = {a1, b1, a2, b2};  // +
      xw = {a2, b3, a3, b2};  // -
      b.head[b1] = E + 1;
      b.tail[b2] = E + 3;
      b.head[b2] = W + 3;
      b.tail[b3] = W + 1;
    } else if (a_north && !b_north) {
      xe = {a1, b3, a2, b2};  // -
      xw = {a2, b1, a3, b2};  // +
      b.head[b1] = W + 1;
      b.tail[b2] = W + 3;
      b.head[b2] = E + 3;
      b.tail[b3] = E + 1;
    } else if (!a_north && b_north) {
      xe = {a1, b2, a2, b3};  // +
      xw = {a2, b2, a3, b1};  // -
      b.head[b1] = W + 3;
      b.tail[b2] = W + 1;
      b.head[b2] = E + 1;
      b.tail[b3] = E + 3;
    } else {
      xe = {a1, b2, a2, b1};  // -
      xw = {a2, b2, a3, b3};  // +
      b.head[b1] = E + 3;
      b.tail[b2] = E + 1;
      b.head[b2] = W + 1;
      b.tail[b3] = W + 3;
    }
  } else {
    // A runs over both crossings; B is the under strand at each
    if (a_north && b_north) {
      xe = {b1, a2, b2, a1};  // -
      xw = {b2, a2, b3, a3};  // +
      b.head[b1] = E + 0;
      b.tail[b2] = E + 2;
      b.head[b2] = W + 0;
      b.tail[b3] = W + 2;
      b.head[a1] = E + 3;
      b.tail[a2] = E + 1;
      b.head[a2] = W + 1;
      b.tail[a3] = W + 3;
    } else if (a_north && !b_north) {
      xe = {b2, a1, b3, a2};  // +
      xw = {b1, a3, b2, a2};  // -
      b.head[b1] = W + 0;
      b.tail[b2] = W + 2;
      b.head[b2] = E + 0;
      b.tail[b3] = E + 2;
      b.head[a1] = E + 1;
      b.tail[a2] = E + 3;
      b.head[a2] = W + 3;
      b.tail[a3] = W + 1;
    } else if (!a_north && b_north) {
      xe = {b2, a2, b3, a1};  // -
      xw = {b1, a2, b2, a3};  // +
      b.head[b1] = W + 0;
      b.tail[b2] = W + 2;
      b.head[b2] = E + 0;
      b.tail[b3] = E + 2;
      b.head[a1] = E + 3;
      b.tail[a2] = E + 1;
      b.head[a2] = W + 1;
      b.tail[a3] = W + 3;
    } else {
      xe = {b1, a1, b2, a2};  // +
      xw = {b2, a3, b3, a2};  // -
      b.head[b1] = E + 0;
      b.tail[b2] = E + 2;
      b.head[b2] = W + 0;
      b.tail[b3] = W + 2;
      b.head[a1] = E + 1;
      b.tail[a2] = E + 3;
      b.head[a2] = W + 3;
      b.tail[a3] = W + 1;
    }
  }
  b.cross.push_back(xe);
  b.cross.push_back(xw);
  return detail::finalize(b, d.declared_oriented, faces_before + 2);
}

namespace detail {

struct R3Site {
  int c[3];     // the three crossings, walk order starting where e_t leaves
  int q[3];     // the face's quadrant slot at each
  int e_t, e_m, e_b;
  bool first_case;  // the walk-exit edge at the second corner goes under twice
};

// A slide site is a triangular face whose boundary splits into one edge
// passing over at both ends, one under at both, and one mixed.
inline bool classify_r3_site(const Diagram& d, const Faces& F, int face, R3Site& out) {
  if (face < 0 || face >= F.crossing_faces) return false;
  if (F.corners[face].size() != 3) return false;
  const auto& cor = F.corners[face];
  const auto& bd = F.boundary[face];
  if (cor[0].first == cor[1].first || cor[0].first == cor[2].first ||
      cor[1].first == cor[2].first)
    return false;
  auto eo = edge_occurrences(d);
  auto over_count = [&](int e) {
    return (eo.occ[e][0] % 4 % 2) + (eo.occ[e][1] % 4 % 2);
  };
  int e_t = -1, e_m = -1, e_b = -1;
  for (int e : bd) {
    int k = over_count(e);
    int& slot = k == 2 ? e_t : k == 0 ? e_b : e_m;
    if (slot >= 0) return false;
    slot = e;
  }
  if (e_t < 0 || e_m < 0 || e_b < 0) return false;
  int i1 = bd[0] == e_t ? 0 : bd[1] == e_t ? 1 : 2;
  for (int k = 0; k < 3; ++k) {
    out.c[k] = cor[(i1 + k) % 3].first;
    out.q[k] = cor[(i1 + k) % 3].second;
  }
  out.e_t = e_t;
  out.e_m = e_m;
  out.e_b = e_b;
  out.first_case = bd[(i1 + 1) % 3] == e_b;
  return true;
}

}  // namespace detail

inline bool is_r3_site(const Diagram& d, const Faces& F, int face) {
  detail::R3Site site;
  return detail::classify_r3_site(d, F, face, site);
}

inline std::vector<int> r3_sites(const Diagram& d) {
  auto F = build_faces(d);
  std::vector<int> out;
  for (int f = 0; f < F.crossing_faces; ++f)
    if (is_r3_site(d, F, f)) out.push_back(f);
  return out;
}

// Slide the over strand of a triangular site across the crossing of the
// other two strands.  The three crossings keep their ids and their signs;
// the triangle reappears on their other side.  Edge counts, face counts and
// all strand directions are unchanged.  The variant parameter is accepted
// for symmetry with the other moves but there is only one slide per site.
inline Diagram apply_r3(const Diagram& d, int face, int variant = 0) {
  (void)variant;
  auto F = build_faces(d);
  detail::R3Site st;
  require(detail::classify_r3_site(d, F, face, st),
          "r3: face ", face, " is not a slide triangle");
  detail::MoveBuild b;
  b.init(d);

  const int TB = st.e_t - 1, MB = st.e_m - 1, BB = st.e_b - 1;  // become mid edges
  // ports: each takes over the old edge found at a source dart and moves its
  // triangle-side end to a new dart
  struct Port {
    int src_c, src_s;  // old occurrence
    int dst_c, dst_s;  // new dart
  };
  auto at = [&](int k, int off) { return std::pair{st.c[k], (st.q[k] + off) % 4}; };
  // per corner, the new occupant of slots q..q+3; -1 marks a port slot,
  // filled below by the edge arriving from outside the triangle
  std::array<int, 4> slot1{}, slot2{}, slot3{};
  std::array<Port, 6> ports{};
  // mid-edge darts at their two crossings, role-swapped below
  std::array<std::pair<int, int>, 2> tb_darts, mb_darts, bb_darts;
  if (st.first_case) {
    slot1 = {-1, -1, MB, TB};
    slot2 = {-1, -1, TB, BB};
    slot3 = {-1, -1, BB, MB};
    ports = {Port{st.c[0], (st.q[0] + 3) % 4, st.c[1], st.q[1]},            // top in
             Port{st.c[1], (st.q[1] + 2) % 4, st.c[0], (st.q[0] + 1) % 4},  // top out
             Port{st.c[0], (st.q[0] + 2) % 4, st.c[2], (st.q[2] + 1) % 4},  // middle
             Port{st.c[2], (st.q[2] + 3) % 4, st.c[0], st.q[0]},
             Port{st.c[1], (st.q[1] + 3) % 4, st.c[2], st.q[2]},  // bottom
             Port{st.c[2], (st.q[2] + 2) % 4, st.c[1], (st.q[1] + 1) % 4}};
    tb_darts = {at(0, 3), at(1, 2)};
    mb_darts = {at(0, 2), at(2, 3)};
    bb_darts = {at(1, 3), at(2, 2)};
  } else {
    slot1 = {-1, -1, BB, TB};
    slot2 = {-1, -1, TB, MB};
    slot3 = {-1, -1, MB, BB};
    ports = {Port{st.c[0], (st.q[0] + 3) % 4, st.c[1], st.q[1]},            // top in
             Port{st.c[1], (st.q[1] + 2) % 4, st.c[0], (st.q[0] + 1) % 4},  // top out
             Port{st.c[1], (st.q[1] + 3) % 4, st.c[2], st.q[2]},            // middle
             Port{st.c[2], (st.q[2] + 2) % 4, st.c[1], (st.q[1] + 1) % 4},
             Port{st.c[0], (st.q[0] + 2) % 4, st.c[2], (st.q[2] + 1) % 4},  // bottom
             Port{st.c[2], (st.q[2] + 3) % 4, st.c[0], st.q[0]}};
    tb_darts = {at(0, 3), at(1, 2)};
    mb_darts = {at(1, 3), at(2, 2)};
    bb_darts = {at(0, 2), at(2, 3)};
  }

  // lay down the new slot assignments at the three crossings
  auto put = [&](int k, const std::array<int, 4>& names) {
    for (int off = 0; off < 4; ++off)
      if (names[off] >= 0) b.cross[st.c[k]][(st.q[k] + off) % 4] = names[off];
  };
  put(0, slot1);
  put(1, slot2);
  put(2, slot3);
  for (const auto& p : ports) {
    int sym = d.crossings[p.src_c].e[p.src_s] - 1;
    b.cross[p.dst_c][p.dst_s] = sym;
    int old_dart = 4 * p.src_c + p.src_s, new_dart = 4 * p.dst_c + p.dst_s;
    if (b.head[sym] == old_dart)
      b.head[sym] = new_dart;
    else {
      require(b.tail[sym] == old_dart, "r3: port source dart is stale");
      b.tail[sym] = new_dart;
    }
  }
  // mid edges keep their crossings but swap which end arrives: the strand
  // now meets its two crossings in the opposite order
  auto remap_mid = [&](int sym, std::array<std::pair<int, int>, 2> darts) {
    int tc = b.tail[sym] / 4;
    int n0 = 4 * darts[0].first + darts[0].second;
    int n1 = 4 * darts[1].first + darts[1].second;
    b.head[sym] = darts[0].first == tc ? n0 : n1;
    b.tail[sym] = darts[0].first == tc ? n1 : n0;
  };
  remap_mid(TB, tb_darts);
  remap_mid(MB, mb_darts);
  remap_mid(BB, bb_darts);

  return detail::finalize(b, d.declared_oriented, F.count);
}

// ---------------------------------------------------------------------------
// move scripts

struct MoveSpec {
  int move = 1;
  int edge = 0;  // r1 site (0 = first circle)
  R1Variant r1 = R1Variant::under_left;
  int face = 0;  // r2/r3 site
  int edge_a = 0, edge_b = 0;
  R2Variant r2 = R2Variant::a_over;
  int variant = 0;  // r3, reserved
};

// "r1 <edge> <variant>" | "r2 <face> <edge_a> <edge_b> <variant>" | "r3 <face>"
inline MoveSpec parse_move_spec(const std::string& text) {
  auto tok = split_ws(text);
  require(!tok.empty(), "empty move");
  MoveSpec m;
  if (tok[0] == "r1") {
    require(tok.size() == 3, "r1 takes an edge and a variant");
    m.move = 1;
    m.edge = parse_int(tok[1]);
    m.r1 = parse_r1_variant(tok[2]);
  } else if (tok[0] == "r2") {
    require(tok.size() == 5, "r2 takes a face, two edges and a variant");
    m.move = 2;
    m.face = parse_int(tok[1]);
    m.edge_a = parse_int(tok[2]);
    m.edge_b = parse_int(tok[3]);
    m.r2 = parse_r2_variant(tok[4]);
  } else if (tok[0] == "r3") {
    require(tok.size() == 2 || tok.size() == 3, "r3 takes a face");
    m.move = 3;
    m.face = parse_int(tok[1]);
    if (tok.size() == 3) m.variant = parse_int(tok[2]);
  } else {
    fail("unknown move '", tok[0], "'");
  }
  return m;
}

inline std::string write_move_spec(const MoveSpec& m) {
  std::ostringstream os;
  if (m.move == 1)
    os << "r1 " << m.edge << " " << r1_variant_name(m.r1);
  else if (m.move == 2)
    os << "r2 " << m.face << " " << m.edge_a << " " << m.edge_b << " " << r2_variant_name(m.r2);
  else
    os << "r3 " << m.face;
  return os.str();
}

inline Diagram apply_move(const Diagram& d, const MoveSpec& m) {
  switch (m.move) {
    case 1: return apply_r1(d, m.edge, m.r1);
    case 2: return apply_r2(d, m.face, m.edge_a, m.edge_b, m.r2);
    case 3: return apply_r3(d, m.face, m.variant);
  }
  fail("move kind ", m.move, " out of range");
}

// one move per line; '#' starts a comment, blank lines are skipped
inline std::vector<MoveSpec> parse_move_script(const std::string& text) {
  std::vector<MoveSpec> out;
  for (const auto& line : split_on(text, '\n')) {
    auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    if (split_ws(body).empty()) continue;
    out.push_back(parse_move_spec(body));
  }
  return out;
}

inline Diagram apply_moves(Diagram d, const std::vector<MoveSpec>& moves) {
  for (const auto& m : moves) d = apply_move(d, m);
  return d;
}

}  // namespace tknot
