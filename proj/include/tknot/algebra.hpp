#pragma once

// Finite ternary algebras with two operations (W,B) or (C,S), stored as
// flat n^3 tables, plus binary Cayley tables for the groups and loops the
// operators are built from.
//
// Axiom numbering follows the two axiom systems the region relations need:
// unoriented (1)-(8), oriented (1)-(6).  All checks are exhaustive; failed
// axioms carry the lexicographically least witness tuple.

#include <array>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tknot/common.hpp"

namespace tknot {

enum class Kind { unoriented, oriented };

inline std::string kind_name(Kind k) {
  return k == Kind::unoriented ? "unoriented" : "oriented";
}

// ---------------------------------------------------------------------------
// ternary algebras

struct FiniteTernaryAlgebra {
  int n = 0;
  Kind kind = Kind::unoriented;
  std::vector<int> op1;  // W if unoriented, C if oriented
  std::vector<int> op2;  // B if unoriented, S if oriented
  std::string name;

  int at1(int x, int y, int z) const { return op1[(size_t(x) * n + y) * n + z]; }
  int at2(int x, int y, int z) const { return op2[(size_t(x) * n + y) * n + z]; }

  std::string op1_name() const { return kind == Kind::unoriented ? "W" : "C"; }
  std::string op2_name() const { return kind == Kind::unoriented ? "B" : "S"; }

  void validate() const {
    require(n > 0, "algebra: empty carrier");
    require(op1.size() == size_t(n) * n * n && op2.size() == size_t(n) * n * n,
            "algebra '", name, "': table size mismatch");
    for (int v : op1) require(v >= 0 && v < n, "algebra '", name, "': op1 entry out of range");
    for (int v : op2) require(v >= 0 && v < n, "algebra '", name, "': op2 entry out of range");
  }
};

struct AxiomCase {
  int id = 0;
  bool pass = true;
  std::array<int, 4> witness{0, 0, 0, 0};  // a,b,c[,d]; d unused for (1)-(4)
};

struct AxiomReport {
  Kind kind = Kind::unoriented;
  std::vector<AxiomCase> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
  int pass_count() const {
    int k = 0;
    for (const auto& a : axioms) k += a.pass ? 1 : 0;
    return k;
  }
  std::string summary() const {
    std::ostringstream os;
    os << pass_count() << "/" << axioms.size() << " axioms pass";
    return os.str();
  }
};

namespace detail {

// Scans (a,b,c) in lex order; pred returns true when the axiom instance holds.
template <class Pred3>
AxiomCase check3(int id, int n, Pred3 pred) {
  AxiomCase r;
  r.id = id;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!pred(a, b, c)) {
          r.pass = false;
          r.witness = {a, b, c, 0};
          return r;
        }
  return r;
}

template <class Pred4>
AxiomCase check4(int id, int n, Pred4 pred) {
  AxiomCase r;
  r.id = id;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (!pred(a, b, c, d)) {
            r.pass = false;
            r.witness = {a, b, c, d};
            return r;
          }
  return r;
}

}  // namespace detail

inline AxiomReport check_unoriented_axioms(const FiniteTernaryAlgebra& A) {
  require(A.kind == Kind::unoriented, "check_unoriented_axioms: algebra '", A.name,
          "' is oriented");
  A.validate();
  const int n = A.n;
  auto W = [&](int x, int y, int z) { return A.at1(x, y, z); };
  auto B = [&](int x, int y, int z) { return A.at2(x, y, z); };

  AxiomReport rep;
  rep.kind = Kind::unoriented;
  rep.axioms.push_back(detail::check3(1, n, [&](int a, int b, int c) {
    return B(b, B(a, c, b), a) == c;
  }));
  rep.axioms.push_back(detail::check3(2, n, [&](int a, int b, int c) {
    return W(b, W(a, c, b), a) == c;
  }));
  rep.axioms.push_back(detail::check3(3, n, [&](int a, int b, int c) {
    return W(b, a, B(a, b, c)) == c && B(b, a, W(a, b, c)) == c;
  }));
  rep.axioms.push_back(detail::check3(4, n, [&](int a, int b, int c) {
    return W(B(c, a, b), b, a) == c && B(W(c, a, b), b, a) == c;
  }));
  rep.axioms.push_back(detail::check4(5, n, [&](int a, int b, int c, int d) {
    int e = B(b, c, d);
    return B(W(a, b, c), c, d) == B(W(a, b, e), e, d);
  }));
  rep.axioms.push_back(detail::check4(6, n, [&](int a, int b, int c, int d) {
    int e = B(b, c, d);
    int f = W(a, b, c);
    return W(a, b, e) == W(a, f, B(f, c, d));
  }));
  rep.axioms.push_back(detail::check4(7, n, [&](int a, int b, int c, int d) {
    int e = W(b, c, d);
    return W(B(a, b, c), c, d) == W(B(a, b, e), e, d);
  }));
  rep.axioms.push_back(detail::check4(8, n, [&](int a, int b, int c, int d) {
    int e = W(b, c, d);
    int f = B(a, b, c);
    return B(a, b, e) == B(a, f, W(f, c, d));
  }));
  return rep;
}

inline AxiomReport check_oriented_axioms(const FiniteTernaryAlgebra& A) {
  require(A.kind == Kind::oriented, "check_oriented_axioms: algebra '", A.name,
          "' is unoriented");
  A.validate();
  const int n = A.n;
  auto C = [&](int x, int y, int z) { return A.at1(x, y, z); };
  auto S = [&](int x, int y, int z) { return A.at2(x, y, z); };

  AxiomReport rep;
  rep.kind = Kind::oriented;
  rep.axioms.push_back(detail::check3(1, n, [&](int a, int b, int c) {
    return C(b, C(a, c, b), a) == c;
  }));
  rep.axioms.push_back(detail::check3(2, n, [&](int a, int b, int c) {
    return S(b, S(a, c, b), a) == c;
  }));
  rep.axioms.push_back(detail::check3(3, n, [&](int a, int b, int c) {
    return S(b, a, C(a, b, c)) == c && C(b, a, S(a, b, c)) == c;
  }));
  rep.axioms.push_back(detail::check3(4, n, [&](int a, int b, int c) {
    return S(C(c, a, b), b, a) == c && C(S(c, a, b), b, a) == c;
  }));
  rep.axioms.push_back(detail::check4(5, n, [&](int a, int b, int c, int d) {
    int e = C(b, c, d);
    return C(C(a, b, c), c, d) == C(C(a, b, e), e, d);
  }));
  rep.axioms.push_back(detail::check4(6, n, [&](int a, int b, int c, int d) {
    int e = C(b, c, d);
    int f = C(a, b, c);
    return C(a, b, e) == C(a, f, C(f, c, d));
  }));
  return rep;
}

inline AxiomReport check_axioms(const FiniteTernaryAlgebra& A) {
  return A.kind == Kind::unoriented ? check_unoriented_axioms(A) : check_oriented_axioms(A);
}

// Latin cube property: fixing any two arguments of either operation gives a
// bijection in the remaining one.
struct SliceFailure {
  int op = 0;        // 1 or 2
  int position = 0;  // varying argument
  int u = 0, v = 0;  // the two fixed values, in argument order
};

inline std::optional<SliceFailure> latin_cube_check(const FiniteTernaryAlgebra& A) {
  A.validate();
  const int n = A.n;
  for (int op = 1; op <= 2; ++op) {
    auto val = [&](int x, int y, int z) { return op == 1 ? A.at1(x, y, z) : A.at2(x, y, z); };
    for (int pos = 0; pos < 3; ++pos)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          std::vector<char> seen(n, 0);
          for (int t = 0; t < n; ++t) {
            int r = pos == 0 ? val(t, u, v) : pos == 1 ? val(u, t, v) : val(u, v, t);
            seen[r] = 1;
          }
          for (int t = 0; t < n; ++t)
            if (!seen[t]) return SliceFailure{op, pos, u, v};
        }
  }
  return std::nullopt;
}

// op2 is determined by op1 through axiom (3): op2(b,a,-) inverts op1(a,b,-).
inline std::vector<int> derive_op2(const std::vector<int>& op1, int n) {
  std::vector<int> op2(op1.size(), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int y = op1[(size_t(a) * n + b) * n + c];
        op2[(size_t(b) * n + a) * n + y] = c;
      }
  for (int v : op2)
    require(v >= 0, "derive_op2: op1 third-argument slices are not bijective");
  return op2;
}

// ---------------------------------------------------------------------------
// binary Cayley tables

struct MagmaTable {
  int n = 0;
  std::vector<int> mul;  // row x, column y -> x*y
  std::string name;

  int at(int x, int y) const { return mul[size_t(x) * n + y]; }

  void validate() const {
    require(n > 0, "magma: empty carrier");
    require(mul.size() == size_t(n) * n, "magma '", name, "': table size mismatch");
    for (int v : mul) require(v >= 0 && v < n, "magma '", name, "': entry out of range");
  }

  bool is_quasigroup() const {
    for (int x = 0; x < n; ++x) {
      std::vector<char> row(n, 0), col(n, 0);
      for (int y = 0; y < n; ++y) {
        row[at(x, y)] = 1;
        col[at(y, x)] = 1;
      }
      for (int y = 0; y < n; ++y)
        if (!row[y] || !col[y]) return false;
    }
    return true;
  }

  std::optional<int> identity() const {
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = at(x, e) == x && at(e, x) == x;
      if (ok) return e;
    }
    return std::nullopt;
  }

  bool is_loop() const { return is_quasigroup() && identity().has_value(); }

  bool is_associative() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) return false;
    return true;
  }

  bool is_group() const { return is_loop() && is_associative(); }

  // x \ y: the unique z with x*z = y
  int ldiv(int x, int y) const {
    for (int z = 0; z < n; ++z)
      if (at(x, z) == y) return z;
    fail("magma '", name, "': x*z = y unsolvable for x=", x, " y=", y);
  }

  // x / y: the unique z with z*y = x
  int rdiv(int x, int y) const {
    for (int z = 0; z < n; ++z)
      if (at(z, y) == x) return z;
    fail("magma '", name, "': z*y = x unsolvable for x=", x, " y=", y);
  }

  // Two-sided inverse.  Words that use x^-1 require it; a one-sided inverse
  // is reported as an error rather than silently substituted.
  int inv(int x) const {
    auto e = identity();
    require(e.has_value(), "magma '", name, "': no identity, x^-1 undefined");
    int r = ldiv(x, *e);
    require(at(r, x) == *e, "magma '", name, "': element ", x,
            " has one-sided inverse only");
    return r;
  }
};

// ---------------------------------------------------------------------------
// loop identities

struct PropertyResult {
  bool pass = true;
  std::array<int, 3> witness{0, 0, 0};
};

// Exhaustive check of a named identity.  Composite names ("moufang",
// "extra", "conjugacy-closed") require every identity in the family.
inline PropertyResult loop_property(const MagmaTable& L, const std::string& property) {
  L.validate();
  const int n = L.n;
  auto M = [&](int x, int y) { return L.at(x, y); };

  using Id3 = std::function<bool(int, int, int)>;
  auto scan = [&](const Id3& id) {
    PropertyResult r;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!id(x, y, z)) {
            r.pass = false;
            r.witness = {x, y, z};
            return r;
          }
    return r;
  };

  static const std::vector<std::string> moufang_ids = {"moufang-1", "moufang-2", "moufang-3",
                                                       "moufang-4"};
  static const std::vector<std::string> extra_ids = {"extra-1", "extra-2", "extra-3"};
  static const std::vector<std::string> cc_ids = {"conjugacy-closed-1", "conjugacy-closed-2"};

  auto all_of = [&](const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
      PropertyResult r = loop_property(L, id);
      if (!r.pass) return r;
    }
    return PropertyResult{};
  };

  if (property == "moufang") return all_of(moufang_ids);
  if (property == "extra") return all_of(extra_ids);
  if (property == "conjugacy-closed") return all_of(cc_ids);

  // Identities written with x^-1 presuppose two-sided inverses; a loop
  // without them fails the property (witness: the offending element).
  auto inverse_guard = [&]() -> std::optional<PropertyResult> {
    auto e = L.identity();
    if (!e) return PropertyResult{false, {0, 0, 0}};
    for (int x = 0; x < n; ++x) {
      int lft = L.rdiv(*e, x);
      if (L.at(x, lft) != *e) return PropertyResult{false, {x, 0, 0}};
    }
    return std::nullopt;
  };
  if (property == "left-inverse" || property == "right-inverse" ||
      property == "antiautomorphic") {
    if (auto bad = inverse_guard()) return *bad;
  }

  if (property == "quasigroup") {
    PropertyResult r;
    r.pass = L.is_quasigroup();
    return r;
  }
  if (property == "loop") {
    PropertyResult r;
    r.pass = L.is_loop();
    return r;
  }
  if (property == "associative")
    return scan([&](int x, int y, int z) { return M(M(x, y), z) == M(x, M(y, z)); });
  if (property == "flexible")
    return scan([&](int x, int y, int) { return M(x, M(y, x)) == M(M(x, y), x); });
  if (property == "left-alternative")
    return scan([&](int x, int y, int) { return M(x, M(x, y)) == M(M(x, x), y); });
  if (property == "right-alternative")
    return scan([&](int x, int y, int) { return M(x, M(y, y)) == M(M(x, y), y); });
  if (property == "left-inverse")
    return scan([&](int x, int y, int) { return M(L.inv(x), M(x, y)) == y; });
  if (property == "right-inverse")
    return scan([&](int x, int y, int) { return M(M(y, x), L.inv(x)) == y; });
  if (property == "antiautomorphic")
    return scan([&](int x, int y, int) {
      return L.inv(M(x, y)) == M(L.inv(y), L.inv(x));
    });
  if (property == "left-bol")
    return scan([&](int x, int y, int z) {
      return M(x, M(y, M(x, z))) == M(M(x, M(y, x)), z);
    });
  if (property == "moufang-1")
    return scan([&](int x, int y, int z) {
      return M(z, M(x, M(z, y))) == M(M(M(z, x), z), y);
    });
  if (property == "moufang-2")
    return scan([&](int x, int y, int z) {
      return M(x, M(z, M(y, z))) == M(M(M(x, z), y), z);
    });
  if (property == "moufang-3")
    return scan([&](int x, int y, int z) {
      return M(M(z, x), M(y, z)) == M(M(z, M(x, y)), z);
    });
  if (property == "moufang-4")
    return scan([&](int x, int y, int z) {
      return M(M(z, x), M(y, z)) == M(z, M(M(x, y), z));
    });
  if (property == "conjugacy-closed-1")
    return scan([&](int x, int y, int z) {
      return M(M(x, y), z) == M(M(x, z), L.ldiv(z, M(y, z)));
    });
  if (property == "conjugacy-closed-2")
    return scan([&](int x, int y, int z) {
      return M(z, M(y, x)) == M(L.rdiv(M(z, y), z), M(z, x));
    });
  if (property == "extra-1")
    return scan([&](int x, int y, int z) {
      return M(M(x, M(y, z)), y) == M(M(x, y), M(z, y));
    });
  if (property == "extra-2")
    return scan([&](int x, int y, int z) {
      return M(M(y, z), M(y, x)) == M(y, M(M(z, y), x));
    });
  if (property == "extra-3")
    return scan([&](int x, int y, int z) {
      return M(M(M(x, y), z), x) == M(x, M(y, M(z, x)));
    });
  if (property == "c-loop")
    return scan([&](int x, int y, int z) {
      return M(x, M(y, M(y, z))) == M(M(M(x, y), y), z);
    });
  if (property == "lc")
    return scan([&](int x, int y, int z) {
      return M(M(x, x), M(y, z)) == M(M(x, M(x, y)), z);
    });
  if (property == "rc")
    return scan([&](int x, int y, int z) {
      return M(x, M(M(y, z), z)) == M(M(x, y), M(z, z));
    });
  fail("loop_property: unknown property '", property, "'");
}

// ---------------------------------------------------------------------------
// word constructions

// Group words: a product of the three letters a,b,c in some order, each
// optionally inverted.
struct GroupWord {
  std::array<int, 3> var;   // 0=a, 1=b, 2=c
  std::array<bool, 3> inv;
};

inline int eval_group_word(const MagmaTable& G, const GroupWord& w, int a, int b, int c) {
  const int args[3] = {a, b, c};
  int acc = -1;
  for (int i = 0; i < 3; ++i) {
    int x = args[w.var[i]];
    if (w.inv[i]) x = G.inv(x);
    acc = i == 0 ? x : G.at(acc, x);
  }
  return acc;
}

// The nine group-word pairs, stored as (word for op2, word for op1): the
// source list writes each pair as B first, then W.
inline const std::map<std::string, std::pair<GroupWord, GroupWord>>& group_word_pairs() {
  static const std::map<std::string, std::pair<GroupWord, GroupWord>> table = {
      {"g1", {{{0, 1, 2}, {false, true, false}}, {{0, 1, 2}, {false, true, false}}}},
      {"g2", {{{0, 2, 1}, {false, true, false}}, {{0, 2, 1}, {false, true, false}}}},
      {"g3", {{{1, 0, 2}, {false, true, false}}, {{1, 0, 2}, {false, true, false}}}},
      {"g4", {{{1, 2, 0}, {false, true, false}}, {{1, 2, 0}, {false, true, false}}}},
      {"g5", {{{2, 0, 1}, {false, true, false}}, {{2, 0, 1}, {false, true, false}}}},
      {"g6", {{{2, 1, 0}, {false, true, false}}, {{2, 1, 0}, {false, true, false}}}},
      {"g7", {{{0, 2, 1}, {true, false, false}}, {{1, 2, 0}, {false, false, true}}}},
      {"g8", {{{2, 0, 1}, {true, false, false}}, {{1, 0, 2}, {false, false, true}}}},
      {"g9", {{{2, 1, 0}, {true, true, true}}, {{0, 1, 2}, {true, true, true}}}},
  };
  return table;
}

inline FiniteTernaryAlgebra from_group_word(const MagmaTable& G, const std::string& pair_id,
                                            Kind kind) {
  G.validate();
  require(G.is_group(), "from_group_word: '", G.name, "' is not a group");
  auto it = group_word_pairs().find(pair_id);
  require(it != group_word_pairs().end(), "from_group_word: unknown pair '", pair_id, "'");
  const auto& [word_b, word_w] = it->second;

  FiniteTernaryAlgebra A;
  A.n = G.n;
  A.kind = kind;
  A.name = pair_id + ":" + G.name;
  A.op1.resize(size_t(G.n) * G.n * G.n);
  A.op2.resize(A.op1.size());
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      for (int c = 0; c < G.n; ++c) {
        size_t i = (size_t(a) * G.n + b) * G.n + c;
        A.op1[i] = eval_group_word(G, word_w, a, b, c);
        A.op2[i] = eval_group_word(G, word_b, a, b, c);
      }
  return A;
}

// Loop words: evaluated structurally with *, \, /, and the two-sided inverse.
using LoopWordFn = std::function<int(const MagmaTable&, int, int, int)>;

struct LoopWordPair {
  LoopWordFn first;    // becomes op1 (W or C)
  LoopWordFn second;   // becomes op2 (B or S)
  std::string variety; // identity family the words are stated for
  bool oriented_listed;  // appears in the oriented list (not only unoriented)
};

inline const std::map<std::string, LoopWordPair>& loop_word_pairs() {
  auto W = [](LoopWordFn f) { return f; };
  static const std::map<std::string, LoopWordPair> table = [&] {
    std::map<std::string, LoopWordPair> t;
    auto put = [&](const std::string& id, LoopWordFn f, LoopWordFn g,
                   const std::string& variety, bool oriented) {
      t[id] = LoopWordPair{f, g, variety, oriented};
    };
    // Moufang pairs
    LoopWordFn m1 = W([](const MagmaTable& L, int a, int b, int c) {
      return L.at(L.at(b, L.inv(a)), c);
    });
    LoopWordFn m2 = W([](const MagmaTable& L, int a, int b, int c) {
      return L.at(L.at(b, L.inv(c)), a);
    });
    LoopWordFn m3 = W([](const MagmaTable& L, int a, int b, int c) {
      return L.at(a, L.at(L.inv(c), b));
    });
    LoopWordFn m4 = W([](const MagmaTable& L, int a, int b, int c) {
      return L.at(c, L.at(L.inv(a), b));
    });
    put("m1", m1, m1, "moufang", true);
    put("m2", m2, m2, "moufang", true);
    put("m3", m3, m3, "moufang", true);
    put("m4", m4, m4, "moufang", true);
    put("m5",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(a), L.at(c, b));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(b, c), L.inv(a));
        }),
        "moufang", false);
    put("m6",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(c), L.at(a, b));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(b, a), L.inv(c));
        }),
        "moufang", false);

    // Extra-loop pairs: all two-letter quotient words in both association
    // orders, then the four mixed unoriented pairs.
    struct E {
      int x, y, z;      // permutation of a,b,c: word uses args[x], args[y], args[z]
      bool left_assoc;  // (x * y^-1) * z vs x * (y^-1 * z)
    };
    auto eword = [&](int x, int y, int z, bool left) {
      return W([x, y, z, left](const MagmaTable& L, int a, int b, int c) {
        const int args[3] = {a, b, c};
        int u = args[x], v = L.inv(args[y]), w = args[z];
        return left ? L.at(L.at(u, v), w) : L.at(u, L.at(v, w));
      });
    };
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 6; ++i) {
      auto f = eword(perms[i][0], perms[i][1], perms[i][2], true);
      put("e" + std::to_string(i + 1), f, f, "extra", true);
    }
    for (int i = 0; i < 6; ++i) {
      auto f = eword(perms[i][0], perms[i][1], perms[i][2], false);
      put("e" + std::to_string(i + 7), f, f, "extra", true);
    }
    put("e13",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(L.inv(a), c), b);
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(b, L.at(c, L.inv(a)));
        }),
        "extra", false);
    put("e14",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(L.inv(c), a), b);
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(b, L.at(a, L.inv(c)));
        }),
        "extra", false);
    put("e15",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(a), L.at(c, b));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(b, c), L.inv(a));
        }),
        "extra", false);
    put("e16",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(c), L.at(a, b));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(b, a), L.inv(c));
        }),
        "extra", false);
    put("e17",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(L.inv(a), L.inv(b)), L.inv(c));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(c), L.at(L.inv(b), L.inv(a)));
        }),
        "extra", false);
    put("e18",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.inv(a), L.at(L.inv(b), L.inv(c)));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.at(L.inv(c), L.inv(b)), L.inv(a));
        }),
        "extra", false);

    // Left Bol pairs
    put("b1",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, a), c);
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, a), c);
        }),
        "left-bol", true);
    put("b2",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, c), a);
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, c), a);
        }),
        "left-bol", true);
    put("b3",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, L.inv(a)), L.inv(c));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.inv(L.ldiv(L.rdiv(a, L.inv(b)), c));
        }),
        "left-bol", false);
    put("b4",
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.at(L.rdiv(b, L.inv(c)), L.inv(a));
        }),
        W([](const MagmaTable& L, int a, int b, int c) {
          return L.inv(L.ldiv(L.rdiv(c, L.inv(b)), a));
        }),
        "left-bol", false);
    return t;
  }();
  return table;
}

inline FiniteTernaryAlgebra from_loop_word(const MagmaTable& L, const std::string& formula_id,
                                           Kind kind) {
  L.validate();
  require(L.is_loop(), "from_loop_word: '", L.name, "' is not a loop");
  auto it = loop_word_pairs().find(formula_id);
  require(it != loop_word_pairs().end(), "from_loop_word: unknown formula '", formula_id, "'");
  const auto& pair = it->second;
  PropertyResult variety = loop_property(L, pair.variety);
  require(variety.pass, "from_loop_word: '", L.name, "' fails the ", pair.variety,
          " identity required by ", formula_id);

  FiniteTernaryAlgebra A;
  A.n = L.n;
  A.kind = kind;
  A.name = formula_id + ":" + L.name;
  A.op1.resize(size_t(L.n) * L.n * L.n);
  A.op2.resize(A.op1.size());
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      for (int c = 0; c < L.n; ++c) {
        size_t i = (size_t(a) * L.n + b) * L.n + c;
        A.op1[i] = pair.first(L, a, b, c);
        A.op2[i] = pair.second(L, a, b, c);
      }
  return A;
}

// ---------------------------------------------------------------------------
// the doubling construction M(G,2)

// Carrier G x {0,1}, element (g,t) stored as t*|G| + g, identity (e,0).
inline MagmaTable m_construction(const MagmaTable& G) {
  G.validate();
  require(G.is_group(), "m_construction: '", G.name, "' is not a group");
  const int n = G.n;
  MagmaTable L;
  L.n = 2 * n;
  L.name = "m(" + G.name + ",2)";
  L.mul.resize(size_t(L.n) * L.n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      L.mul[size_t(g) * L.n + h] = G.at(g, h);                        // (g,0)*(h,0)=(gh,0)
      L.mul[size_t(g) * L.n + (n + h)] = n + G.at(h, g);              // (g,0)*(h,1)=(hg,1)
      L.mul[size_t(n + g) * L.n + h] = n + G.at(g, G.inv(h));         // (g,1)*(h,0)=(gh^-1,1)
      L.mul[size_t(n + g) * L.n + (n + h)] = G.at(G.inv(h), g);       // (g,1)*(h,1)=(h^-1 g,0)
    }
  return L;
}

// ---------------------------------------------------------------------------
// built-in structures

inline MagmaTable cyclic_group(int n) {
  require(n >= 1, "cyclic_group: order must be positive");
  MagmaTable G;
  G.n = n;
  G.name = "c" + std::to_string(n);
  G.mul.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) G.mul[size_t(x) * n + y] = (x + y) % n;
  return G;
}

// Symmetric group on 3 letters; elements are the permutations of (0,1,2) in
// lexicographic one-line order, composed as (p*q)(i) = p(q(i)).
inline MagmaTable symmetric3() {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  MagmaTable G;
  G.n = 6;
  G.name = "s3";
  G.mul.resize(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      int comp[3];
      for (int i = 0; i < 3; ++i) comp[i] = perms[x][perms[y][i]];
      G.mul[size_t(x) * 6 + y] = find(comp);
    }
  return G;
}

// Dihedral group of order 8: element j*4+i stands for r^i s^j with s r = r^-1 s.
inline MagmaTable dihedral4() {
  MagmaTable G;
  G.n = 8;
  G.name = "d4";
  G.mul.resize(64);
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < 4; ++i2) {
          int i = ((j1 ? i1 - i2 : i1 + i2) % 4 + 4) % 4;
          int j = j1 ^ j2;
          G.mul[size_t(j1 * 4 + i1) * 8 + (j2 * 4 + i2)] = j * 4 + i;
        }
  return G;
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k}, element 2*axis + (sign<0), axes
// ordered 1,i,j,k.
inline MagmaTable quaternion8() {
  // axis multiplication table and the sign it produces
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  MagmaTable G;
  G.n = 8;
  G.name = "q8";
  G.mul.resize(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int a1 = x / 2, s1 = x % 2 ? -1 : 1;
      int a2 = y / 2, s2 = y % 2 ? -1 : 1;
      int a = ax[a1][a2];
      int s = sg[a1][a2] * s1 * s2;
      G.mul[size_t(x) * 8 + y] = 2 * a + (s < 0 ? 1 : 0);
    }
  return G;
}

inline MagmaTable builtin_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'c') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
    if (digits) {
      int n = std::stoi(name.substr(1));
      require(n >= 1 && n <= 8, "builtin_group: cyclic orders 1..8 only, got '", name, "'");
      return cyclic_group(n);
    }
  }
  if (name == "s3") return symmetric3();
  if (name == "d4") return dihedral4();
  if (name == "q8") return quaternion8();
  fail("builtin_group: unknown group '", name, "'");
}

inline MagmaTable builtin_loop(const std::string& name) {
  if (name == "ms3-2") return m_construction(symmetric3());
  if (name == "md4-2") return m_construction(dihedral4());
  fail("builtin_loop: unknown loop '", name, "'");
}

inline MagmaTable builtin_structure(const std::string& name) {
  if (name == "ms3-2" || name == "md4-2") return builtin_loop(name);
  return builtin_group(name);
}

// ---------------------------------------------------------------------------
// the two four-element table algebras

namespace detail {

// Slices as printed: slice[z][x][y], all 1-based values, z = 1..4.
using Slice4 = std::array<std::array<int, 4>, 4>;

inline std::vector<int> cube_from_slices(const std::array<Slice4, 4>& s) {
  std::vector<int> cube(64);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) cube[(size_t(x) * 4 + y) * 4 + z] = s[z][x][y] - 1;
  return cube;
}

}  // namespace detail

inline FiniteTernaryAlgebra paper_unoriented_4() {
  using detail::Slice4;
  static const std::array<Slice4, 4> w = {{
      {{{2, 1, 4, 3}, {4, 3, 1, 2}, {3, 4, 2, 1}, {1, 2, 3, 4}}},
      {{{3, 4, 2, 1}, {2, 1, 4, 3}, {1, 2, 3, 4}, {4, 3, 1, 2}}},
      {{{4, 3, 1, 2}, {1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 2, 1}}},
      {{{1, 2, 3, 4}, {3, 4, 2, 1}, {4, 3, 1, 2}, {2, 1, 4, 3}}},
  }};
  static const std::array<Slice4, 4> b = {{
      {{{4, 3, 2, 1}, {1, 2, 3, 4}, {3, 1, 4, 2}, {2, 4, 1, 3}}},
      {{{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 4, 1, 3}, {3, 1, 4, 2}}},
      {{{2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}, {1, 2, 3, 4}}},
      {{{3, 1, 4, 2}, {2, 4, 1, 3}, {1, 2, 3, 4}, {4, 3, 2, 1}}},
  }};
  FiniteTernaryAlgebra A;
  A.n = 4;
  A.kind = Kind::unoriented;
  A.name = "paper-unoriented-4";
  A.op1 = detail::cube_from_slices(w);
  A.op2 = detail::cube_from_slices(b);
  return A;
}

inline FiniteTernaryAlgebra paper_oriented_4() {
  using detail::Slice4;
  static const std::array<Slice4, 4> c = {{
      {{{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}}},
      {{{4, 1, 2, 3}, {3, 2, 1, 4}, {2, 3, 4, 1}, {1, 4, 3, 2}}},
      {{{3, 4, 1, 2}, {4, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 1}}},
      {{{2, 3, 4, 1}, {1, 4, 3, 2}, {4, 1, 2, 3}, {3, 2, 1, 4}}},
  }};
  static const std::array<Slice4, 4> s = {{
      {{{1, 4, 3, 2}, {2, 3, 4, 1}, {3, 2, 1, 4}, {4, 1, 2, 3}}},
      {{{4, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}}},
      {{{3, 2, 1, 4}, {4, 1, 2, 3}, {1, 4, 3, 2}, {2, 3, 4, 1}}},
      {{{2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}, {1, 2, 3, 4}}},
  }};
  FiniteTernaryAlgebra A;
  A.n = 4;
  A.kind = Kind::oriented;
  A.name = "paper-oriented-4";
  A.op1 = detail::cube_from_slices(c);
  A.op2 = detail::cube_from_slices(s);
  return A;
}

// ---------------------------------------------------------------------------
// algebra bank

// Spec grammar: "paper-unoriented-4" | "paper-oriented-4" |
// "<form>:<structure>[:oriented]" with form in {g1..g9, core, knot,
// m1..m6, e1..e18, b1..b4} and structure a built-in group or loop name.
// "core" and "knot" are aliases for g8 and g1.
inline FiniteTernaryAlgebra builtin_algebra(const std::string& spec) {
  if (spec == "paper-unoriented-4") return paper_unoriented_4();
  if (spec == "paper-oriented-4") return paper_oriented_4();

  auto parts = split_on(spec, ':');
  require(parts.size() == 2 || parts.size() == 3, "builtin_algebra: bad spec '", spec,
          "' (want form:structure[:kind])");
  std::string form = parts[0];
  if (form == "core") form = "g8";
  if (form == "knot") form = "g1";
  Kind kind = Kind::unoriented;
  if (parts.size() == 3) {
    require(parts[2] == "oriented" || parts[2] == "unoriented",
            "builtin_algebra: bad kind '", parts[2], "' in '", spec, "'");
    kind = parts[2] == "oriented" ? Kind::oriented : Kind::unoriented;
  }

  FiniteTernaryAlgebra A;
  if (group_word_pairs().count(form)) {
    A = from_group_word(builtin_group(parts[1]), form, kind);
  } else if (loop_word_pairs().count(form)) {
    A = from_loop_word(builtin_structure(parts[1]), form, kind);
  } else {
    fail("builtin_algebra: unknown form '", form, "'");
  }
  A.name = spec;
  return A;
}

inline std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> names = {"paper-unoriented-4", "paper-oriented-4"};
  for (const auto& [id, _] : group_word_pairs())
    for (const std::string& g : {"c2", "c3", "c4", "c5", "c6", "c7", "c8", "s3", "d4", "q8"})
      names.push_back(id + ":" + g);
  for (const auto& [id, pair] : loop_word_pairs())
    for (const std::string& l : {"ms3-2", "md4-2"}) {
      // only list combinations whose variety requirement is met
      if (pair.variety == "extra" && l == "ms3-2") continue;
      names.push_back(id + ":" + l);
    }
  return names;
}

}  // namespace tknot
