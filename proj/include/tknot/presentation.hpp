#pragma once

// Finite presentations read off a diagram.
//
// Three families: the ternary presentation (one region generator per face,
// one W/B or C/S relation per crossing), the region presentation of the
// knot group (the same relations with xy^-1z substituted for both
// operators, plus the unbounded region set to 1), and the two arc
// presentations (conjugation form and the symmetric core form).
//
// Relations are kept structurally: a head generator and either a ternary
// application or a group word.  The text form is one `gen` line followed by
// `rel` lines:
//
//   gen r0 r1 r2 r3 r4
//   rel r3 = W(r0,r2,r1)
//   rel r2 = r3*r0^-1*r4
//   rel r0 = 1

#include <array>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tknot/coloring.hpp"
#include "tknot/common.hpp"
#include "tknot/diagram.hpp"

namespace tknot {

struct Relation {
  int lhs = 0;                              // generator index
  char op = 0;                              // 'W','B','C','S'; 0 for a group word
  std::array<int, 3> args{-1, -1, -1};      // ternary arguments, in reading order
  std::vector<std::pair<int, int>> word;    // group word as (generator, +1/-1)

  bool operator==(const Relation&) const = default;
};

struct Presentation {
  std::string style;  // ternary-unoriented | ternary-oriented | dehn | wirtinger | core
  char prefix = 'r';
  int gens = 0;
  std::vector<Relation> relations;

  bool operator==(const Presentation&) const = default;

  void validate() const {
    for (const auto& r : relations) {
      require(r.lhs >= 0 && r.lhs < gens, "presentation: relation head out of range");
      if (r.op) {
        for (int a : r.args) require(a >= 0 && a < gens, "presentation: argument out of range");
        require(r.word.empty(), "presentation: relation mixes ternary and word forms");
      } else {
        for (auto [g, e] : r.word) {
          require(g >= 0 && g < gens, "presentation: word letter out of range");
          require(e == 1 || e == -1, "presentation: word exponent must be +1 or -1");
        }
      }
    }
  }
};

namespace detail {

// canonical head: the slot holding the lowest face id, earliest slot on ties
inline int lowest_face_slot(const CrossingConstraint& cc) {
  int h = 0;
  for (int s = 1; s < 4; ++s)
    if (cc.faces[s] < cc.faces[h]) h = s;
  return h;
}

}  // namespace detail

// One relation per crossing, solved for the head region.  forced_head picks
// the same slot at every crossing instead of the canonical lowest-face one;
// all four choices present the same algebra.
inline Presentation emit_ternary(const ShadedDiagram& sd, Kind kind, int forced_head = -1) {
  require(forced_head < 4, "emit_ternary: head slot out of range");
  auto cons = build_constraints(sd, kind);
  Presentation p;
  p.style = kind == Kind::unoriented ? "ternary-unoriented" : "ternary-oriented";
  p.prefix = 'r';
  p.gens = sd.faces.count;
  for (const auto& cc : cons) {
    int h = forced_head >= 0 ? forced_head : detail::lowest_face_slot(cc);
    const auto& hr = cc.heads[h];
    Relation rel;
    rel.lhs = cc.faces[h];
    rel.op = hr.op == 1 ? (kind == Kind::unoriented ? 'W' : 'C')
                        : (kind == Kind::unoriented ? 'B' : 'S');
    for (int i = 0; i < 3; ++i) rel.args[i] = cc.faces[hr.input_slots[i]];
    p.relations.push_back(rel);
  }
  p.validate();
  return p;
}

// Region presentation of the knot group: substitute xy^-1z for both
// operators and kill the unbounded region.
inline Presentation emit_dehn(const ShadedDiagram& sd) {
  auto cons = build_constraints(sd, Kind::unoriented);
  Presentation p;
  p.style = "dehn";
  p.prefix = 'r';
  p.gens = sd.faces.count;
  for (const auto& cc : cons) {
    int h = detail::lowest_face_slot(cc);
    const auto& hr = cc.heads[h];
    Relation rel;
    rel.lhs = cc.faces[h];
    rel.word = {{cc.faces[hr.input_slots[0]], 1},
                {cc.faces[hr.input_slots[1]], -1},
                {cc.faces[hr.input_slots[2]], 1}};
    p.relations.push_back(rel);
  }
  Relation kill;
  kill.lhs = sd.faces.outer;
  p.relations.push_back(kill);
  p.validate();
  return p;
}

// Arc presentations: a generator per arc.  The conjugation form needs the
// strand directions to pick which side of the bridge conjugates; the core
// form is symmetric in the two under-arcs and needs none.
inline Presentation emit_arc_presentation(const Diagram& d, ArcTheory theory) {
  auto arcs = over_arcs(d);
  Presentation p;
  p.style = theory == ArcTheory::wirtinger ? "wirtinger" : "core";
  p.prefix = 'a';
  p.gens = arcs.count;
  std::vector<int> sign;
  if (theory == ArcTheory::wirtinger) sign = infer_orientation(d, false).sign;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& e = d.crossings[c].e;
    int over = arcs.of_edge[e[1]], in = arcs.of_edge[e[0]], out = arcs.of_edge[e[2]];
    Relation rel;
    rel.lhs = out;
    if (theory == ArcTheory::core)
      rel.word = {{over, 1}, {in, -1}, {over, 1}};
    else if (sign[c] > 0)
      rel.word = {{over, -1}, {in, 1}, {over, 1}};
    else
      rel.word = {{over, 1}, {in, 1}, {over, -1}};
    p.relations.push_back(rel);
  }
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// text form

inline std::string write_presentation(const Presentation& p) {
  p.validate();
  std::ostringstream os;
  os << "gen";
  for (int g = 0; g < p.gens; ++g) os << " " << p.prefix << g;
  os << "\n";
  for (const auto& r : p.relations) {
    os << "rel " << p.prefix << r.lhs << " = ";
    if (r.op) {
      os << r.op << "(" << p.prefix << r.args[0] << "," << p.prefix << r.args[1] << ","
         << p.prefix << r.args[2] << ")";
    } else if (r.word.empty()) {
      os << "1";
    } else {
      for (size_t i = 0; i < r.word.size(); ++i) {
        if (i) os << "*";
        os << p.prefix << r.word[i].first;
        if (r.word[i].second < 0) os << "^-1";
      }
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// abelianization

// Invariant factors of an integer matrix: diagonalize by elementary row and
// column operations, smallest pivot first, then patch up the divisibility
// chain on the diagonal.
namespace detail {

inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const int R = int(a.size()), C = R ? int(a[0].size()) : 0;
  std::vector<long long> diag;
  int t = 0;
  while (t < R && t < C) {
    int pr = -1, pc = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (a[i][j] != 0 &&
            (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pc]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder is smaller; promote it to pivot
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  // diag(x, y) and diag(gcd, lcm) present the same group
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        long long g = std::gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
      }
  return diag;
}

}  // namespace detail

struct Abelianized {
  int rank = 0;                     // free rank
  std::vector<long long> torsion;  // invariant factors > 1

  bool operator==(const Abelianized&) const = default;
};

inline Abelianized abelianize(const Presentation& p) {
  p.validate();
  std::vector<std::vector<long long>> rows;
  for (const auto& r : p.relations) {
    require(r.op == 0, "abelianize: '", p.style, "' has ternary relations, not group words");
    std::vector<long long> row(p.gens, 0);
    for (auto [g, e] : r.word) row[g] += e;
    row[r.lhs] -= 1;
    rows.push_back(std::move(row));
  }
  Abelianized out;
  if (rows.empty()) {
    out.rank = p.gens;
    return out;
  }
  auto diag = detail::smith_diagonal(std::move(rows));
  int nonzero = 0;
  for (long long d : diag)
    if (d != 0) {
      ++nonzero;
      if (d > 1) out.torsion.push_back(d);
    }
  out.rank = p.gens - nonzero;
  return out;
}

}  // namespace tknot
