#pragma once

// Region colorings.  Each crossing constrains the four faces around it: the
// face at quadrant h must equal an operator applied to the other three,
// read counterclockwise starting just past h when h holds a marker (the
// quadrants immediately counterclockwise of the over-strand arms, i.e. the
// odd ones here), clockwise starting just before h otherwise.  Unoriented
// algebras pick the operator by the head's shading (W on white), oriented
// ones by whether the head's marker status matches the crossing sign (C on
// match).
//
// The solver backtracks over faces in decreasing order of crossing
// incidence with unit propagation; a crossing whose faces are all assigned
// is checked on all four head relations, so every reported coloring
// satisfies the full relation set.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tknot/algebra.hpp"
#include "tknot/common.hpp"
#include "tknot/diagram.hpp"

namespace tknot {

struct ShadedDiagram {
  Diagram d;
  Faces faces;
  Checkerboard shading;
  std::optional<Orientation> ori;  // present when crossing signs are known
};

// oriented = true also infers strict orientation (needed by oriented
// algebras and the knot-group arc scheme).
inline ShadedDiagram shade(const Diagram& d, bool oriented = false) {
  ShadedDiagram sd;
  sd.d = d;
  sd.faces = build_faces(d);
  sd.shading = checkerboard(d, sd.faces);
  if (oriented) sd.ori = infer_orientation(d, true);
  return sd;
}

struct HeadRelation {
  int head_slot = 0;
  std::array<int, 3> input_slots{};  // in reading order
  int op = 1;                        // 1 = W/C, 2 = B/S
};

struct CrossingConstraint {
  int crossing = 0;
  std::array<int, 4> faces{};  // per quadrant
  std::array<HeadRelation, 4> heads{};
};

inline std::vector<CrossingConstraint> build_constraints(const ShadedDiagram& sd, Kind kind) {
  const bool oriented = kind == Kind::oriented;
  require(!oriented || sd.ori.has_value(),
          "oriented reading needs crossing signs; shade the diagram oriented");
  std::vector<CrossingConstraint> out;
  out.reserve(sd.d.crossing_count());
  for (int c = 0; c < sd.d.crossing_count(); ++c) {
    CrossingConstraint cc;
    cc.crossing = c;
    for (int q = 0; q < 4; ++q) cc.faces[q] = sd.faces.of_quadrant[4 * c + q];
    for (int h = 0; h < 4; ++h) {
      HeadRelation r;
      r.head_slot = h;
      bool marker = h % 2 == 1;
      if (marker)
        r.input_slots = {(h + 1) % 4, (h + 2) % 4, (h + 3) % 4};
      else
        r.input_slots = {(h + 3) % 4, (h + 2) % 4, (h + 1) % 4};
      if (oriented)
        r.op = marker == (sd.ori->sign[c] > 0) ? 1 : 2;
      else
        r.op = sd.shading.white[cc.faces[h]] ? 1 : 2;
      cc.heads[h] = r;
    }
    out.push_back(cc);
  }
  return out;
}

inline std::vector<CrossingConstraint> build_constraints(const ShadedDiagram& sd,
                                                         const FiniteTernaryAlgebra& A) {
  require(A.kind != Kind::oriented || sd.ori.has_value(),
          "oriented algebra '", A.name, "' needs crossing signs; shade the diagram oriented");
  return build_constraints(sd, A.kind);
}

inline int eval_head(const CrossingConstraint& cc, const HeadRelation& r,
                     const FiniteTernaryAlgebra& A, const std::vector<int>& assign) {
  int x = assign[cc.faces[r.input_slots[0]]];
  int y = assign[cc.faces[r.input_slots[1]]];
  int z = assign[cc.faces[r.input_slots[2]]];
  return r.op == 1 ? A.at1(x, y, z) : A.at2(x, y, z);
}

struct Violation {
  int crossing = 0;
  int head_slot = 0;
};

// First violated head relation of a total assignment, if any.
inline std::optional<Violation> find_violation(const ShadedDiagram& sd,
                                               const FiniteTernaryAlgebra& A,
                                               const std::vector<int>& assign) {
  require(int(assign.size()) == sd.faces.count, "coloring must assign every face");
  for (int v : assign) require(v >= 0 && v < A.n, "coloring value out of range");
  for (const auto& cc : build_constraints(sd, A))
    for (const auto& r : cc.heads)
      if (eval_head(cc, r, A, assign) != assign[cc.faces[r.head_slot]])
        return Violation{cc.crossing, r.head_slot};
  return std::nullopt;
}

inline bool verify_coloring(const ShadedDiagram& sd, const FiniteTernaryAlgebra& A,
                            const std::vector<int>& assign) {
  return !find_violation(sd, A, assign).has_value();
}

struct SolveOptions {
  bool check_axioms = true;
  bool enumerate = false;
  int jobs = 1;
};

struct ColoringReport {
  unsigned long long count = 0;
  std::vector<std::vector<int>> colorings;  // filled when enumerating, lex order
  std::string algebra;
  std::string diagram_fingerprint;
};

inline std::string diagram_fingerprint(const Diagram& d) {
  unsigned long long h = 1469598103934665603ull;  // FNV-1a
  for (char ch : write_pd(d)) {
    h ^= (unsigned char)ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "v" << d.crossing_count() << ".k" << d.circles << "." << std::hex << (h & 0xffffffffull);
  return os.str();
}

namespace detail {

// One backtracking run over the faces in `order` starting at depth `from`,
// with everything before `from` already assigned and propagated.
class RegionSearch {
 public:
  RegionSearch(const std::vector<CrossingConstraint>& cons, const FiniteTernaryAlgebra& A,
               int face_count, std::vector<int> order)
      : cons_(cons), A_(A), order_(std::move(order)), assign_(face_count, -1) {
    by_face_.assign(face_count, {});
    for (int i = 0; i < int(cons_.size()); ++i) {
      auto fs = cons_[i].faces;
      std::sort(fs.begin(), fs.end());
      for (int j = 0; j < 4; ++j)
        if (j == 0 || fs[j] != fs[j - 1]) by_face_[fs[j]].push_back(i);
    }
  }

  // pin: optional (face, value) prefix assignment for parallel splits
  unsigned long long run(std::optional<std::pair<int, int>> pin, bool enumerate,
                         std::vector<std::vector<int>>* out) {
    count_ = 0;
    enumerate_ = enumerate;
    out_ = out;
    if (pin) {
      trail_.clear();
      if (!assign_and_propagate(pin->first, pin->second)) {
        undo_all();
        return 0;
      }
      dfs(0);
      undo_all();
    } else {
      dfs(0);
    }
    return count_;
  }

 private:
  const std::vector<CrossingConstraint>& cons_;
  const FiniteTernaryAlgebra& A_;
  std::vector<int> order_;
  std::vector<int> assign_;
  std::vector<std::vector<int>> by_face_;
  std::vector<int> trail_;
  unsigned long long count_ = 0;
  bool enumerate_ = false;
  std::vector<std::vector<int>>* out_ = nullptr;

  void undo_all() {
    for (int f : trail_) assign_[f] = -1;
    trail_.clear();
  }

  // Assign face f := v, then force values at any incident crossing left with
  // exactly one unassigned face occupying exactly one slot; check crossings
  // that become fully assigned.  Returns false on contradiction (trail still
  // records partial work; caller unwinds via markers).
  bool assign_and_propagate(int f, int v) {
    assign_[f] = v;
    trail_.push_back(f);
    for (size_t head = trail_.size() - 1; head < trail_.size(); ++head) {
      int g = trail_[head];
      for (int ci : by_face_[g]) {
        const auto& cc = cons_[ci];
        int missing_face = -1, missing_slot = -1, missing_slots = 0;
        for (int s = 0; s < 4; ++s) {
          int face = cc.faces[s];
          if (assign_[face] < 0) {
            ++missing_slots;
            missing_face = face;
            missing_slot = s;
          }
        }
        if (missing_slots == 0) {
          for (const auto& r : cc.heads)
            if (eval_head(cc, r, A_, assign_) != assign_[cc.faces[r.head_slot]]) return false;
        } else if (missing_slots == 1) {
          int forced = eval_head(cc, cc.heads[missing_slot], A_, assign_);
          assign_[missing_face] = forced;
          trail_.push_back(missing_face);
        }
        // a face missing on two or more slots cannot be forced here; the
        // plain search below will reach it
      }
    }
    return true;
  }

  void dfs(size_t pos) {
    while (pos < order_.size() && assign_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      ++count_;
      if (enumerate_ && out_) out_->push_back(assign_);
      return;
    }
    int f = order_[pos];
    for (int v = 0; v < A_.n; ++v) {
      size_t mark = trail_.size();
      if (assign_and_propagate(f, v)) dfs(pos + 1);
      while (trail_.size() > mark) {
        assign_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }
  }
};

}  // namespace detail

inline ColoringReport solve_colorings(const ShadedDiagram& sd, const FiniteTernaryAlgebra& A,
                                      const SolveOptions& opt = {}) {
  A.validate();
  if (opt.check_axioms) {
    auto rep = check_axioms(A);
    require(rep.all_pass(), "algebra '", A.name, "' fails its axiom suite (", rep.summary(),
            "); rerun unchecked to count anyway");
  }
  auto cons = build_constraints(sd, A);

  // order faces by decreasing crossing incidence, ties to the smaller id
  std::vector<int> corner_count(sd.faces.count, 0);
  for (const auto& cc : cons)
    for (int q = 0; q < 4; ++q) ++corner_count[cc.faces[q]];
  std::vector<int> order(sd.faces.count);
  for (int f = 0; f < sd.faces.count; ++f) order[f] = f;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return corner_count[a] > corner_count[b]; });

  ColoringReport rep;
  rep.algebra = A.name;
  rep.diagram_fingerprint = diagram_fingerprint(sd.d);

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || order.empty()) {
    detail::RegionSearch search(cons, A, sd.faces.count, order);
    rep.count = search.run(std::nullopt, opt.enumerate, &rep.colorings);
  } else {
    // split on the first variable's value; workers are independent searches
    int first = order[0];
    std::vector<unsigned long long> counts(A.n, 0);
    std::vector<std::vector<std::vector<int>>> lists(A.n);
    std::vector<std::thread> pool;
    std::vector<int> todo(A.n);
    for (int v = 0; v < A.n; ++v) todo[v] = v;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (int v = w; v < A.n; v += jobs) {
          detail::RegionSearch search(cons, A, sd.faces.count, order);
          counts[v] = search.run(std::pair{first, v}, opt.enumerate, &lists[v]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (int v = 0; v < A.n; ++v) {
      rep.count += counts[v];
      for (auto& sol : lists[v]) rep.colorings.push_back(std::move(sol));
    }
  }
  if (opt.enumerate) std::sort(rep.colorings.begin(), rep.colorings.end());
  return rep;
}

inline unsigned long long count_colorings(const ShadedDiagram& sd, const FiniteTernaryAlgebra& A,
                                          const SolveOptions& opt = {}) {
  SolveOptions o = opt;
  o.enumerate = false;
  return solve_colorings(sd, A, o).count;
}

inline ColoringReport enumerate_colorings(const ShadedDiagram& sd, const FiniteTernaryAlgebra& A,
                                          const SolveOptions& opt = {}) {
  SolveOptions o = opt;
  o.enumerate = true;
  return solve_colorings(sd, A, o);
}

// ---------------------------------------------------------------------------
// arc colorings: the independent group-theoretic side

enum class ArcTheory { wirtinger, core };

// Exhaustive count of arc labelings over a group: Wirtinger conjugation
// relations (out = over^-1 * in * over at positive crossings) or core
// relations (out = over * in^-1 * over).  Written as a plain product search;
// this is the oracle the region solver is compared against.
inline unsigned long long count_arc_colorings(const Diagram& d, const MagmaTable& G,
                                              ArcTheory theory) {
  require(G.is_group(), "count_arc_colorings: '", G.name, "' is not a group");
  auto arcs = over_arcs(d);
  std::optional<Orientation> ori;
  if (theory == ArcTheory::wirtinger) ori = infer_orientation(d, true);

  struct Rel {
    int over, in, out, sign;
  };
  std::vector<Rel> rels;
  for (int c = 0; c < d.crossing_count(); ++c) {
    Rel r;
    r.over = arcs.of_edge[d.crossings[c].e[1]];
    r.in = arcs.of_edge[d.crossings[c].e[0]];
    r.out = arcs.of_edge[d.crossings[c].e[2]];
    r.sign = ori ? ori->sign[c] : 0;
    rels.push_back(r);
  }
  auto holds = [&](const Rel& r, const std::vector<int>& lab) {
    int a = lab[r.over], b = lab[r.in], g = lab[r.out];
    if (theory == ArcTheory::core) return g == G.at(G.at(a, G.inv(b)), a);
    return r.sign > 0 ? g == G.at(G.at(G.inv(a), b), a) : g == G.at(G.at(a, b), G.inv(a));
  };

  // relations become checkable once all three arcs are assigned
  std::vector<std::vector<int>> ready(arcs.count);
  for (int i = 0; i < int(rels.size()); ++i) {
    int last = std::max({rels[i].over, rels[i].in, rels[i].out});
    ready[last].push_back(i);
  }
  std::vector<int> lab(arcs.count, -1);
  unsigned long long total = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == arcs.count) {
      ++total;
      return;
    }
    for (int v = 0; v < G.n; ++v) {
      lab[pos] = v;
      bool ok = true;
      for (int i : ready[pos])
        if (!holds(rels[i], lab)) {
          ok = false;
          break;
        }
      if (ok) self(self, pos + 1);
    }
    lab[pos] = -1;
  };
  if (arcs.count == 0) return 0;
  rec(rec, 0);
  return total;
}

// ---------------------------------------------------------------------------
// arc labels induced by a region coloring

enum class ArcScheme { knot_group, core };

struct ArcLabeling {
  bool well_defined = false;
  std::vector<int> label;          // per arc, when well defined
  std::vector<char> sigma_uleft;   // per component: left face plays the u role
};

// Core scheme: each edge is labeled (white side)*(black side); knot-group
// scheme: u*v^-1 where the co-normal points u -> v, chosen per component so
// that it runs white -> black at the arc carrying the component's smallest
// edge.  The labeling is well defined only if every edge of an arc yields
// the same value; failure is a signal (used by the classifier), not a bug.
inline ArcLabeling try_arc_labels(const ShadedDiagram& sd, const MagmaTable& G,
                                  const std::vector<int>& coloring, ArcScheme scheme) {
  require(int(coloring.size()) == sd.faces.count, "coloring must assign every face");
  require(G.is_group(), "arc labels need a group, got '", G.name, "'");
  auto arcs = over_arcs(sd.d);
  auto comp = diagram_components(sd.d);
  ArcLabeling out;
  out.label.assign(arcs.count, -1);
  out.sigma_uleft.assign(comp.count, 1);

  const Orientation* ori = nullptr;
  if (scheme == ArcScheme::knot_group) {
    require(sd.ori.has_value(), "knot-group arc labels need an oriented shading");
    ori = &*sd.ori;
    for (int k = 0; k < comp.edge_components; ++k) {
      int m = 0;
      for (int e = sd.d.edge_count(); e >= 1; --e)
        if (comp.of_edge[e] == k) m = e;
      int h = ori->head_occ[m];
      auto [left, right] = directed_side_faces(sd.faces, *ori, h / 4, h % 4);
      // u is whichever side makes the base arc read white -> black
      out.sigma_uleft[k] = sd.shading.white[left] ? 1 : 0;
      (void)right;
    }
  }

  auto eo = edge_occurrences(sd.d);
  for (int e = 1; e <= sd.d.edge_count(); ++e) {
    int lab;
    if (scheme == ArcScheme::core) {
      int o = eo.occ[e][0];
      auto fs = edge_side_faces(sd.faces, o / 4, o % 4);
      int white = sd.shading.white[fs[0]] ? fs[0] : fs[1];
      int black = sd.shading.white[fs[0]] ? fs[1] : fs[0];
      lab = G.at(coloring[white], coloring[black]);
    } else {
      int h = ori->head_occ[e];
      auto [left, right] = directed_side_faces(sd.faces, *ori, h / 4, h % 4);
      bool uleft = out.sigma_uleft[comp.of_edge[e]];
      int u = uleft ? left : right;
      int v = uleft ? right : left;
      lab = G.at(coloring[u], G.inv(coloring[v]));
    }
    int a = arcs.of_edge[e];
    if (out.label[a] >= 0 && out.label[a] != lab) return out;  // not well defined
    out.label[a] = lab;
  }
  // circles: sides are the outer face and the circle's inside
  for (int k = 0; k < sd.d.circles; ++k) {
    int u = coloring[sd.faces.outer], v = coloring[sd.faces.circle_face(k)];
    out.label[arcs.edge_arcs + k] = scheme == ArcScheme::core ? G.at(u, v) : G.at(u, G.inv(v));
  }
  out.well_defined = true;
  return out;
}

inline ArcLabeling arc_labels(const ShadedDiagram& sd, const MagmaTable& G,
                              const std::vector<int>& coloring, ArcScheme scheme) {
  auto out = try_arc_labels(sd, G, coloring, scheme);
  require(out.well_defined, "arc labels are not constant along an arc (scheme mismatch)");
  return out;
}

// Check the group relations the labels should satisfy: core gamma =
// alpha*beta^-1*alpha; knot-group conjugation with the exponent fixed by
// the crossing sign and the over-component's co-normal side.
inline bool verify_arc_relations(const ShadedDiagram& sd, const MagmaTable& G,
                                 const ArcLabeling& labels, ArcScheme scheme) {
  require(labels.well_defined, "verify_arc_relations: labels not well defined");
  auto arcs = over_arcs(sd.d);
  auto comp = diagram_components(sd.d);
  for (int c = 0; c < sd.d.crossing_count(); ++c) {
    int a = labels.label[arcs.of_edge[sd.d.crossings[c].e[1]]];
    int b = labels.label[arcs.of_edge[sd.d.crossings[c].e[0]]];
    int g = labels.label[arcs.of_edge[sd.d.crossings[c].e[2]]];
    if (scheme == ArcScheme::core) {
      if (g != G.at(G.at(a, G.inv(b)), a)) return false;
    } else {
      require(sd.ori.has_value(), "knot-group relations need signs");
      bool uleft = labels.sigma_uleft[comp.of_edge[sd.d.crossings[c].e[1]]];
      bool conj_inv_left = (sd.ori->sign[c] > 0) == uleft;
      int want = conj_inv_left ? G.at(G.at(G.inv(a), b), a) : G.at(G.at(a, b), G.inv(a));
      if (g != want) return false;
    }
  }
  return true;
}

}  // namespace tknot
