#pragma once

// Three searches over the axiom suites: word templates evaluated on a
// battery of groups or loops, raw table search over small carriers, and a
// classifier that sorts group word pairs by which arc-label scheme their
// region colorings induce.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tknot/algebra.hpp"
#include "tknot/coloring.hpp"
#include "tknot/common.hpp"
#include "tknot/diagram.hpp"

namespace tknot {

// ---------------------------------------------------------------------------
// word templates

// Depth-2 product over the letters a,b,c, each used exactly once and
// optionally inverted.  Node operators: 0 '*', 1 '\' (left division),
// 2 '/' (right division).  Batteries made of groups only get '*', where
// both divisions are already products with inverses.
struct WordTemplate {
  bool left_tree = true;  // (x . y) . z when true, x . (y . z) when false
  std::array<int, 3> var{0, 1, 2};
  std::array<bool, 3> inv{false, false, false};
  int outer_op = 0;
  int inner_op = 0;
};

inline std::string write_word(const WordTemplate& w) {
  static const char* const sym[3] = {"*", "\\", "/"};
  std::string leaf[3];
  for (int i = 0; i < 3; ++i) {
    leaf[i] = std::string(1, char('a' + w.var[i]));
    if (w.inv[i]) leaf[i] += "^-1";
  }
  if (w.left_tree)
    return "(" + leaf[0] + sym[w.inner_op] + leaf[1] + ")" + sym[w.outer_op] + leaf[2];
  return leaf[0] + sym[w.outer_op] + "(" + leaf[1] + sym[w.inner_op] + leaf[2] + ")";
}

inline std::vector<WordTemplate> word_grammar(bool group_battery) {
  const int nops = group_battery ? 1 : 3;
  std::vector<WordTemplate> out;
  for (int shape = 0; shape < 2; ++shape) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (unsigned mask = 0; mask < 8; ++mask)
        for (int oo = 0; oo < nops; ++oo)
          for (int io = 0; io < nops; ++io) {
            WordTemplate w;
            w.left_tree = shape == 0;
            w.var = perm;
            w.inv = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
            w.outer_op = oo;
            w.inner_op = io;
            out.push_back(w);
          }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

namespace detail {

// ldiv/rdiv/inv are linear scans on MagmaTable; the search calls them in
// bulk, so flatten everything into lookup tables once per battery member.
struct CachedOps {
  int n = 0;
  std::vector<int> mul, ld, rd, inverse;

  explicit CachedOps(const MagmaTable& m)
      : n(m.n), mul(m.mul), ld(size_t(m.n) * m.n), rd(size_t(m.n) * m.n), inverse(m.n) {
    for (int x = 0; x < n; ++x) {
      inverse[x] = m.inv(x);
      for (int y = 0; y < n; ++y) {
        ld[size_t(x) * n + y] = m.ldiv(x, y);
        rd[size_t(x) * n + y] = m.rdiv(x, y);
      }
    }
  }

  int apply(int op, int x, int y) const {
    size_t i = size_t(x) * n + y;
    return op == 0 ? mul[i] : op == 1 ? ld[i] : rd[i];
  }
};

inline std::vector<int> materialize_word(const CachedOps& ops, const WordTemplate& w) {
  const int n = ops.n;
  std::vector<int> cube(size_t(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int args[3] = {a, b, c};
        int leaf[3];
        for (int i = 0; i < 3; ++i) {
          leaf[i] = args[w.var[i]];
          if (w.inv[i]) leaf[i] = ops.inverse[leaf[i]];
        }
        int r = w.left_tree
                    ? ops.apply(w.outer_op, ops.apply(w.inner_op, leaf[0], leaf[1]), leaf[2])
                    : ops.apply(w.outer_op, leaf[0], ops.apply(w.inner_op, leaf[1], leaf[2]));
        cube[(size_t(a) * n + b) * n + c] = r;
      }
  return cube;
}

}  // namespace detail

// Extensional fingerprint of one operation across the whole battery; two
// templates with equal keys are the same operation everywhere it matters.
inline std::string tables_key(const std::vector<std::vector<int>>& tables) {
  std::string k;
  for (const auto& t : tables) {
    for (int v : t) {
      k += std::to_string(v);
      k += ',';
    }
    k += ';';
  }
  return k;
}

// ---------------------------------------------------------------------------
// word search

enum class AxiomFilter { full, distributivity_only };

inline std::string axiom_filter_name(AxiomFilter f) {
  return f == AxiomFilter::full ? "full" : "distributivity-only";
}

struct WordPairHit {
  WordTemplate op1, op2;
  std::string op1_word, op2_word;
  int op1_aliases = 1, op2_aliases = 1;  // grammar words sharing each table
  std::vector<std::vector<int>> op1_tables, op2_tables;  // one cube per member
  std::string op1_key, op2_key;
};

struct WordSearchResult {
  Kind kind = Kind::unoriented;
  AxiomFilter filter = AxiomFilter::full;
  std::vector<std::string> battery;
  int grammar_size = 0;
  int distinct_tables = 0;
  int shape_survivors = 0;  // tables passing the single-operation axiom
  std::vector<WordPairHit> pairs;
};

// Enumerates the grammar, dedups extensionally over the battery, filters
// single tables by the one axiom that mentions only one operation, then
// runs every surviving pair through the full suite on every member.  The
// unoriented suite is invariant under swapping the two operations (axioms
// come in swapped twins), so unoriented pairs are reported once, with the
// earlier candidate in the op1 slot.  distributivity_only skips the shape
// filter and keeps pairs satisfying only the two-operation distributive
// axioms, which admit many more binary structures.
inline WordSearchResult search_words(const std::vector<MagmaTable>& battery, Kind kind,
                                     AxiomFilter filter = AxiomFilter::full) {
  require(!battery.empty(), "search_words: empty battery");
  bool groups = true;
  for (const auto& m : battery) {
    m.validate();
    require(m.is_loop(), "search_words: battery member '", m.name, "' is not a loop");
    groups = groups && m.is_group();
  }
  std::vector<detail::CachedOps> ops;  // rejects loops without two-sided inverses
  ops.reserve(battery.size());
  for (const auto& m : battery) ops.emplace_back(m);

  WordSearchResult res;
  res.kind = kind;
  res.filter = filter;
  for (const auto& m : battery) res.battery.push_back(m.name);

  auto grammar = word_grammar(groups);
  res.grammar_size = int(grammar.size());

  struct Candidate {
    WordTemplate tmpl;
    std::vector<std::vector<int>> tables;
    std::string key;
    int aliases = 1;
  };
  std::vector<Candidate> cand;
  std::map<std::string, int> seen;
  for (const auto& w : grammar) {
    Candidate c;
    c.tmpl = w;
    for (const auto& o : ops) c.tables.push_back(detail::materialize_word(o, w));
    c.key = tables_key(c.tables);
    auto [it, fresh] = seen.emplace(c.key, int(cand.size()));
    if (fresh)
      cand.push_back(std::move(c));
    else
      ++cand[it->second].aliases;
  }
  res.distinct_tables = int(cand.size());

  // f(b, f(a,c,b), a) == c: the shape both single-operation axioms share,
  // so one filter serves the op1 and op2 roles alike.
  auto shape_ok = [&](const Candidate& c) {
    for (size_t m = 0; m < ops.size(); ++m) {
      const int n = ops[m].n;
      const auto& t = c.tables[m];
      auto f = [&](int x, int y, int z) { return t[(size_t(x) * n + y) * n + z]; };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int u = 0; u < n; ++u)
            if (f(b, f(a, u, b), a) != u) return false;
    }
    return true;
  };
  std::vector<int> pool;
  for (int i = 0; i < int(cand.size()); ++i)
    if (filter == AxiomFilter::distributivity_only || shape_ok(cand[i])) pool.push_back(i);
  res.shape_survivors = int(pool.size());

  auto pair_passes = [&](int i, int j) {
    for (size_t m = 0; m < ops.size(); ++m) {
      FiniteTernaryAlgebra A;
      A.n = ops[m].n;
      A.kind = kind;
      A.op1 = cand[i].tables[m];
      A.op2 = cand[j].tables[m];
      auto rep = check_axioms(A);
      for (const auto& ax : rep.axioms) {
        if (filter == AxiomFilter::distributivity_only && ax.id < 5) continue;
        if (!ax.pass) return false;
      }
    }
    return true;
  };

  for (size_t a = 0; a < pool.size(); ++a)
    for (size_t b = kind == Kind::unoriented ? a : 0; b < pool.size(); ++b) {
      int i = pool[a], j = pool[b];
      if (!pair_passes(i, j)) continue;
      WordPairHit h;
      h.op1 = cand[i].tmpl;
      h.op2 = cand[j].tmpl;
      h.op1_word = write_word(h.op1);
      h.op2_word = write_word(h.op2);
      h.op1_aliases = cand[i].aliases;
      h.op2_aliases = cand[j].aliases;
      h.op1_tables = cand[i].tables;
      h.op2_tables = cand[j].tables;
      h.op1_key = cand[i].key;
      h.op2_key = cand[j].key;
      res.pairs.push_back(std::move(h));
    }
  std::sort(res.pairs.begin(), res.pairs.end(), [](const WordPairHit& x, const WordPairHit& y) {
    return std::tie(x.op1_key, x.op2_key) < std::tie(y.op1_key, y.op2_key);
  });
  return res;
}

// ---------------------------------------------------------------------------
// raw table search

struct CubeSearchOptions {
  // Every attempted branch value counts one node; 0 means unlimited.  The
  // default covers the order-4 searches with room to spare.
  unsigned long long node_budget = 50'000'000;
};

struct CubeSearchResult {
  int n = 0;
  Kind kind = Kind::unoriented;
  std::vector<FiniteTernaryAlgebra> survivors;
  unsigned long long nodes = 0;
  bool budget_exhausted = false;  // survivors found so far are still valid
};

namespace detail {

// Backtracking over op1 entries only.  Three masks keep every line of the
// table a permutation; the single-operation axiom pairs cells, so each
// branch assignment immediately places its forced partner.  op2 never gets
// searched: at a full leaf it is forced, entry by entry, by the axiom that
// cancels op1 from the left, and the remaining axioms are checked whole.
struct CubeSearch {
  int n = 0;
  Kind kind = Kind::unoriented;
  unsigned long long budget = 0;
  std::vector<int> cube;
  std::vector<unsigned> mx, my, mz;  // used-value masks per line
  unsigned long long nodes = 0;
  bool exhausted = false;
  std::vector<FiniteTernaryAlgebra> found;

  CubeSearch(int n_, Kind k, unsigned long long b)
      : n(n_),
        kind(k),
        budget(b),
        cube(size_t(n_) * n_ * n_, -1),
        mx(size_t(n_) * n_, 0),
        my(size_t(n_) * n_, 0),
        mz(size_t(n_) * n_, 0) {}

  bool place(int x, int y, int z, int v, std::vector<int>& trail) {
    size_t i = (size_t(x) * n + y) * n + z;
    if (cube[i] >= 0) return cube[i] == v;
    unsigned bit = 1u << v;
    if ((mx[size_t(y) * n + z] | my[size_t(x) * n + z] | mz[size_t(x) * n + y]) & bit)
      return false;
    cube[i] = v;
    mx[size_t(y) * n + z] |= bit;
    my[size_t(x) * n + z] |= bit;
    mz[size_t(x) * n + y] |= bit;
    trail.push_back(int(i));
    return true;
  }

  // op1(a,c,b) = v forces op1(b,v,a) = c; the forced cell's own partner is
  // the original cell, so placing both halves closes the orbit.
  bool place_pair(int x, int y, int z, int v, std::vector<int>& trail) {
    return place(x, y, z, v, trail) && place(z, v, x, y, trail);
  }

  void unplace(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      size_t i = size_t(trail.back());
      trail.pop_back();
      int z = int(i) % n, y = int(i / n) % n, x = int(i / (size_t(n) * n));
      unsigned bit = 1u << cube[i];
      mx[size_t(y) * n + z] &= ~bit;
      my[size_t(x) * n + z] &= ~bit;
      mz[size_t(x) * n + y] &= ~bit;
      cube[i] = -1;
    }
  }

  void run(size_t from, std::vector<int>& trail) {
    size_t total = cube.size();
    while (from < total && cube[from] >= 0) ++from;
    if (from == total) {
      leaf();
      return;
    }
    int z = int(from) % n, y = int(from / n) % n, x = int(from / (size_t(n) * n));
    for (int v = 0; v < n; ++v) {
      ++nodes;
      if (budget && nodes > budget) {
        exhausted = true;
        return;
      }
      size_t mark = trail.size();
      if (place_pair(x, y, z, v, trail)) run(from + 1, trail);
      unplace(trail, mark);
      if (exhausted) return;
    }
  }

  void leaf() {
    FiniteTernaryAlgebra A;
    A.n = n;
    A.kind = kind;
    A.op1 = cube;
    A.op2 = derive_op2(cube, n);
    if (latin_cube_check(A)) return;
    if (!check_axioms(A).all_pass()) return;
    A.name = "cube" + std::to_string(n) + "-" + kind_name(kind) + "-" +
             std::to_string(found.size());
    found.push_back(std::move(A));
  }
};

}  // namespace detail

// Exhaustive for small carriers; order 4 typically needs the budget.  The
// survivor list is in lexicographic op1 order and is a prefix of the full
// list whenever the budget ran out.
inline CubeSearchResult search_cubes(int n, Kind kind, const CubeSearchOptions& opt = {}) {
  require(n >= 1 && n <= 6, "search_cubes: carrier size ", n, " out of range (1..6)");
  detail::CubeSearch s(n, kind, opt.node_budget);
  std::vector<int> trail;
  s.run(0, trail);
  CubeSearchResult res;
  res.n = n;
  res.kind = kind;
  res.nodes = s.nodes;
  res.budget_exhausted = s.exhausted;
  res.survivors = std::move(s.found);
  return res;
}

// ---------------------------------------------------------------------------
// classifying group word pairs against the two arc-label schemes

enum class PairClass { core_type, knot_type, neither, both };

inline std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::core_type: return "core-type";
    case PairClass::knot_type: return "knot-type";
    case PairClass::neither: return "neither";
    default: return "both";
  }
}

struct ClassifyReport {
  std::string pair_id;
  std::string group;
  bool core_ok = true;
  bool knot_ok = true;
  unsigned long long colorings = 0;  // region colorings examined

  PairClass cls() const {
    if (core_ok && knot_ok) return PairClass::both;
    if (core_ok) return PairClass::core_type;
    if (knot_ok) return PairClass::knot_type;
    return PairClass::neither;
  }
};

// Probe diagrams for the classifier: the trefoil and the figure eight.
// One is chiral with all-positive crossings, the other amphichiral with
// mixed signs, so a scheme has to survive both sign patterns.
inline std::vector<Diagram> classification_probes() {
  return {parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
          parse_pd("X(4,2,5,1) X(2,7,3,8) X(8,6,1,5) X(6,3,7,4)")};
}

// A pair is core-type when every region coloring on every probe induces
// well-defined core arc labels satisfying the core crossing relation;
// knot-type likewise for the conjugation scheme.  Both checks run over the
// full coloring list, so a single bad coloring disqualifies a scheme.
inline ClassifyReport classify_group_pair(const std::string& pair_id, const MagmaTable& G,
                                          const std::vector<Diagram>& probes) {
  auto A = from_group_word(G, pair_id, Kind::unoriented);
  ClassifyReport rep;
  rep.pair_id = pair_id;
  rep.group = G.name;
  for (const auto& d : probes) {
    auto sd = shade(d, true);
    auto all = enumerate_colorings(sd, A);
    rep.colorings += all.count;
    for (const auto& col : all.colorings) {
      if (rep.core_ok) {
        auto lab = try_arc_labels(sd, G, col, ArcScheme::core);
        rep.core_ok = lab.well_defined && verify_arc_relations(sd, G, lab, ArcScheme::core);
      }
      if (rep.knot_ok) {
        auto lab = try_arc_labels(sd, G, col, ArcScheme::knot_group);
        rep.knot_ok =
            lab.well_defined && verify_arc_relations(sd, G, lab, ArcScheme::knot_group);
      }
      if (!rep.core_ok && !rep.knot_ok) return rep;
    }
  }
  return rep;
}

inline ClassifyReport classify_group_pair(const std::string& pair_id, const MagmaTable& G) {
  return classify_group_pair(pair_id, G, classification_probes());
}

}  // namespace tknot
