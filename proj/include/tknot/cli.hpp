#pragma once

// Command-line surface.  run() is in-process (the test suite calls it with
// captured streams); tools/tknot_cli.cpp is the thin binary wrapper.
// Exit codes: 0 success, 1 domain error (bad file, failed verification),
// 2 usage error.  All output is deterministic for fixed inputs, including
// across --jobs values.

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tknot/algebra.hpp"
#include "tknot/coloring.hpp"
#include "tknot/common.hpp"
#include "tknot/diagram.hpp"
#include "tknot/io.hpp"
#include "tknot/moves.hpp"
#include "tknot/presentation.hpp"
#include "tknot/search.hpp"

namespace tknot::cli {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline FiniteTernaryAlgebra pick_algebra(const std::string& spec, const std::string& file) {
  if (!spec.empty() && !file.empty())
    throw usage_error("give only one of --algebra and --algebra-file");
  if (!spec.empty()) return builtin_algebra(spec);
  if (!file.empty()) return load_algebra_file(file);
  throw usage_error("an algebra is required (--algebra SPEC or --algebra-file PATH)");
}

inline Kind parse_kind(const std::string& s) {
  return s == "oriented" ? Kind::oriented : Kind::unoriented;
}

inline std::vector<int> parse_coloring(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::vector<int> out;
  for (const auto& tok : split_ws(spaced)) out.push_back(parse_int(tok));
  return out;
}

inline std::vector<MagmaTable> pick_battery(const std::string& names,
                                            const std::vector<std::string>& files) {
  std::vector<MagmaTable> battery;
  if (!names.empty()) {
    std::string spaced = names;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    for (const auto& tok : split_ws(spaced)) battery.push_back(builtin_structure(tok));
  }
  for (const auto& f : files) battery.push_back(load_magma_file(f));
  if (battery.empty())
    throw usage_error("a battery is required (--battery NAMES and/or --battery-file PATH)");
  return battery;
}

inline std::string witness_text(const AxiomCase& ax) {
  std::ostringstream os;
  os << "a=" << ax.witness[0] << " b=" << ax.witness[1] << " c=" << ax.witness[2];
  if (ax.id >= 5) os << " d=" << ax.witness[3];
  return os.str();
}

// The shipped fixture set; the fixtures subcommand checks exactly these.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "unknot0.pd",
      "kink.pd",
      "trefoil.pd",
      "fig8.pd",
      "hopf.pd",
      "trefoil_r1.pd",
      "trefoil_r2.pd",
      "r3a.pd",
      "r3b.pd",
      "paper-unoriented-4.alg.json",
      "paper-oriented-4.alg.json",
      "bol8.loop.json",
  };
  return names;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"region colorings of knot and link diagrams over ternary algebras"};
  app.require_subcommand(1);
  int rc = 0;

  // check-algebra ------------------------------------------------------
  struct {
    std::string builtin, spec, file, format = "human";
  } chk;
  auto* c_chk = app.add_subcommand("check-algebra", "run the axiom suite on an algebra");
  c_chk->add_option("--builtin", chk.builtin, "built-in algebra name or spec");
  c_chk->add_option("--algebra", chk.spec, "algebra spec, e.g. core:c3 or g2:q8:oriented");
  c_chk->add_option("--algebra-file", chk.file, "algebra JSON file");
  c_chk->add_option("--format", chk.format)->check(CLI::IsMember({"human", "machine"}));
  c_chk->callback([&] {
    auto A = detail::pick_algebra(!chk.builtin.empty() ? chk.builtin : chk.spec, chk.file);
    auto rep = check_axioms(A);
    auto latin = latin_cube_check(A);
    if (chk.format == "machine") {
      nlohmann::json j;
      j["name"] = A.name;
      j["size"] = A.n;
      j["kind"] = kind_name(A.kind);
      j["latin"] = !latin.has_value();
      j["summary"] = rep.summary();
      auto list = nlohmann::json::array();
      for (const auto& ax : rep.axioms) {
        nlohmann::json e;
        e["id"] = ax.id;
        e["pass"] = ax.pass;
        if (!ax.pass) e["witness"] = detail::witness_text(ax);
        list.push_back(std::move(e));
      }
      j["axioms"] = std::move(list);
      out << j.dump(2) << "\n";
      return;
    }
    out << rep.summary() << "\n";
    for (const auto& ax : rep.axioms)
      if (!ax.pass) out << "axiom (" << ax.id << ") fails at " << detail::witness_text(ax) << "\n";
    if (latin)
      out << "latin cube fails: op" << latin->op << ", argument " << latin->position
          << ", fixed (" << latin->u << "," << latin->v << ")\n";
  });

  // count / enumerate ---------------------------------------------------
  struct {
    std::string spec, file, diagram, format = "human";
    int jobs = 1;
    bool no_check = false;
  } cnt, enu;
  auto* c_cnt = app.add_subcommand("count", "count region colorings of a diagram");
  auto* c_enu = app.add_subcommand("enumerate", "list region colorings of a diagram");
  for (auto [sub, o] : {std::pair{c_cnt, &cnt}, std::pair{c_enu, &enu}}) {
    sub->add_option("--algebra", o->spec, "algebra spec");
    sub->add_option("--algebra-file", o->file, "algebra JSON file");
    sub->add_option("--diagram", o->diagram, "PD file")->required();
    sub->add_option("--jobs", o->jobs)->check(CLI::Range(1, 256));
    sub->add_flag("--no-axiom-check", o->no_check, "skip the axiom precondition");
    sub->add_option("--format", o->format)->check(CLI::IsMember({"human", "machine"}));
  }
  auto solve_cmd = [&](bool enumerate) {
    auto& o = enumerate ? enu : cnt;
    auto A = detail::pick_algebra(o.spec, o.file);
    auto d = load_diagram(o.diagram);
    auto sd = shade(d, A.kind == Kind::oriented);
    SolveOptions opt;
    opt.check_axioms = !o.no_check;
    opt.jobs = o.jobs;
    opt.enumerate = enumerate;
    auto rep = solve_colorings(sd, A, opt);
    if (o.format == "machine") {
      nlohmann::json j;
      j["algebra"] = rep.algebra;
      j["diagram"] = rep.diagram_fingerprint;
      j["count"] = rep.count;
      if (enumerate) j["colorings"] = rep.colorings;
      out << j.dump(2) << "\n";
      return;
    }
    if (!enumerate) {
      out << rep.count << "\n";
      return;
    }
    for (const auto& col : rep.colorings) {
      for (size_t i = 0; i < col.size(); ++i) out << (i ? " " : "") << col[i];
      out << "\n";
    }
  };
  c_cnt->callback([&] { solve_cmd(false); });
  c_enu->callback([&] { solve_cmd(true); });

  // verify ---------------------------------------------------------------
  struct {
    std::string spec, file, diagram, coloring, format = "human";
  } ver;
  auto* c_ver = app.add_subcommand("verify", "check one region coloring");
  c_ver->add_option("--algebra", ver.spec, "algebra spec");
  c_ver->add_option("--algebra-file", ver.file, "algebra JSON file");
  c_ver->add_option("--diagram", ver.diagram, "PD file")->required();
  c_ver->add_option("--coloring", ver.coloring, "face values, comma separated")->required();
  c_ver->add_option("--format", ver.format)->check(CLI::IsMember({"human", "machine"}));
  c_ver->callback([&] {
    auto A = detail::pick_algebra(ver.spec, ver.file);
    auto d = load_diagram(ver.diagram);
    auto sd = shade(d, A.kind == Kind::oriented);
    auto assign = detail::parse_coloring(ver.coloring);
    auto bad = find_violation(sd, A, assign);
    if (ver.format == "machine") {
      nlohmann::json j;
      j["valid"] = !bad.has_value();
      if (bad) {
        j["crossing"] = bad->crossing;
        j["head_slot"] = bad->head_slot;
      }
      out << j.dump(2) << "\n";
    } else if (bad) {
      out << "violation at crossing " << bad->crossing << ", head slot " << bad->head_slot
          << "\n";
    } else {
      out << "valid\n";
    }
    if (bad) rc = 1;
  });

  // emit -------------------------------------------------------------------
  struct {
    std::string style, diagram, kind = "unoriented", format = "human";
    int head = -1;
  } emt;
  auto* c_emt = app.add_subcommand("emit", "emit a presentation read off a diagram");
  c_emt->add_option("--style", emt.style, "ternary | dehn | wirtinger | core")
      ->required()
      ->check(CLI::IsMember({"ternary", "dehn", "wirtinger", "core"}));
  c_emt->add_option("--diagram", emt.diagram, "PD file")->required();
  c_emt->add_option("--kind", emt.kind, "ternary relation kind")
      ->check(CLI::IsMember({"unoriented", "oriented"}));
  c_emt->add_option("--head", emt.head, "force the head slot (0..3) for ternary relations")
      ->check(CLI::Range(-1, 3));
  c_emt->add_option("--format", emt.format)->check(CLI::IsMember({"human", "machine"}));
  c_emt->callback([&] {
    auto d = load_diagram(emt.diagram);
    Presentation p;
    if (emt.style == "ternary") {
      auto kind = detail::parse_kind(emt.kind);
      p = emit_ternary(shade(d, kind == Kind::oriented), kind, emt.head);
    } else if (emt.style == "dehn") {
      p = emit_dehn(shade(d));
    } else {
      p = emit_arc_presentation(d, emt.style == "core" ? ArcTheory::core
                                                       : ArcTheory::wirtinger);
    }
    if (emt.format == "machine") {
      nlohmann::json j;
      j["style"] = p.style;
      j["gens"] = p.gens;
      j["relations"] = p.relations.size();
      j["text"] = write_presentation(p);
      out << j.dump(2) << "\n";
      return;
    }
    out << write_presentation(p);
  });

  // move ---------------------------------------------------------------------
  struct {
    std::string diagram, script, script_file, format = "human";
  } mov;
  auto* c_mov = app.add_subcommand("move", "apply a move script and print the diagram");
  c_mov->add_option("--diagram", mov.diagram, "PD file")->required();
  c_mov->add_option("--script", mov.script,
                    "moves, ';' or newline separated, e.g. \"r1 4 under-left; r3 2\"");
  c_mov->add_option("--script-file", mov.script_file, "move script file, one move per line");
  c_mov->add_option("--format", mov.format)->check(CLI::IsMember({"human", "machine"}));
  c_mov->callback([&] {
    if (mov.script.empty() == mov.script_file.empty())
      throw usage_error("give exactly one of --script and --script-file");
    std::string text = mov.script;
    if (!mov.script_file.empty()) text = read_text_file(resolve_input_path(mov.script_file));
    std::replace(text.begin(), text.end(), ';', '\n');
    auto moves = parse_move_script(text);
    auto d = load_diagram(mov.diagram);
    auto result = apply_moves(d, moves);
    if (mov.format == "machine") {
      nlohmann::json j;
      j["input"] = diagram_fingerprint(d);
      j["moves"] = moves.size();
      j["output"] = write_pd(result);
      out << j.dump(2) << "\n";
      return;
    }
    out << write_pd(result);
  });

  // search-words ---------------------------------------------------------------
  struct {
    std::string battery, kase = "unoriented", axioms = "full", format = "human";
    std::vector<std::string> files;
  } sw;
  auto* c_sw = app.add_subcommand("search-words", "search word templates over a battery");
  c_sw->add_option("--battery", sw.battery, "built-in structures, comma separated");
  c_sw->add_option("--battery-file", sw.files, "Cayley table JSON file (repeatable)");
  c_sw->add_option("--case", sw.kase)->check(CLI::IsMember({"unoriented", "oriented"}));
  c_sw->add_option("--axioms", sw.axioms)
      ->check(CLI::IsMember({"full", "distributivity-only"}));
  c_sw->add_option("--format", sw.format)->check(CLI::IsMember({"human", "machine"}));
  c_sw->callback([&] {
    auto battery = detail::pick_battery(sw.battery, sw.files);
    auto kind = detail::parse_kind(sw.kase);
    auto filter =
        sw.axioms == "full" ? AxiomFilter::full : AxiomFilter::distributivity_only;
    auto res = search_words(battery, kind, filter);
    std::string n1 = kind == Kind::unoriented ? "W" : "C";
    std::string n2 = kind == Kind::unoriented ? "B" : "S";
    if (sw.format == "machine") {
      nlohmann::json j;
      j["kind"] = kind_name(res.kind);
      j["axioms"] = axiom_filter_name(res.filter);
      j["battery"] = res.battery;
      j["grammar"] = res.grammar_size;
      j["distinct_tables"] = res.distinct_tables;
      j["shape_survivors"] = res.shape_survivors;
      auto list = nlohmann::json::array();
      for (const auto& h : res.pairs) {
        nlohmann::json e;
        e[n1] = h.op1_word;
        e[n2] = h.op2_word;
        e["equal_ops"] = h.op1_key == h.op2_key;
        list.push_back(std::move(e));
      }
      j["pairs"] = std::move(list);
      out << j.dump(2) << "\n";
      return;
    }
    out << "battery:";
    for (const auto& name : res.battery) out << " " << name;
    out << " (" << kind_name(res.kind) << ", " << axiom_filter_name(res.filter) << ")\n";
    out << "templates: " << res.grammar_size << ", distinct tables: " << res.distinct_tables
        << ", single-axiom survivors: " << res.shape_survivors << "\n";
    out << "pairs: " << res.pairs.size() << "\n";
    for (const auto& h : res.pairs)
      out << "  " << n1 << " = " << h.op1_word << "   " << n2 << " = " << h.op2_word << "\n";
  });

  // search-cubes ------------------------------------------------------------
  struct {
    int n = 0;
    std::string kase = "unoriented", format = "human";
    unsigned long long budget = CubeSearchOptions{}.node_budget;
    bool tables = false;
  } sc;
  auto* c_sc = app.add_subcommand("search-cubes", "search raw tables on a small carrier");
  c_sc->add_option("--n", sc.n, "carrier size")->required()->check(CLI::Range(1, 6));
  c_sc->add_option("--case", sc.kase)->check(CLI::IsMember({"unoriented", "oriented"}));
  c_sc->add_option("--budget", sc.budget, "node budget, 0 for unlimited");
  c_sc->add_flag("--tables", sc.tables, "print survivor tables");
  c_sc->add_option("--format", sc.format)->check(CLI::IsMember({"human", "machine"}));
  c_sc->callback([&] {
    CubeSearchOptions opt;
    opt.node_budget = sc.budget;
    auto res = search_cubes(sc.n, detail::parse_kind(sc.kase), opt);
    if (sc.format == "machine") {
      nlohmann::json j;
      j["n"] = res.n;
      j["kind"] = kind_name(res.kind);
      j["nodes"] = res.nodes;
      j["exhaustive"] = !res.budget_exhausted;
      j["count"] = res.survivors.size();
      if (sc.tables) {
        auto list = nlohmann::json::array();
        for (const auto& A : res.survivors) {
          nlohmann::json e;
          e["name"] = A.name;
          e["op1"] = A.op1;
          e["op2"] = A.op2;
          list.push_back(std::move(e));
        }
        j["survivors"] = std::move(list);
      }
      out << j.dump(2) << "\n";
      return;
    }
    out << "survivors: " << res.survivors.size() << " (nodes " << res.nodes << ", "
        << (res.budget_exhausted ? "budget exhausted" : "exhaustive") << ")\n";
    if (sc.tables)
      for (const auto& A : res.survivors) {
        out << A.name << ": op1 =";
        for (int v : A.op1) out << " " << v;
        out << ", op2 =";
        for (int v : A.op2) out << " " << v;
        out << "\n";
      }
  });

  // classify ---------------------------------------------------------------
  struct {
    std::string pair = "all", group = "s3", format = "human";
    std::vector<std::string> probes;
  } cls;
  auto* c_cls = app.add_subcommand("classify", "sort group word pairs by arc-label scheme");
  c_cls->add_option("--pair", cls.pair, "g1..g9 or all");
  c_cls->add_option("--group", cls.group, "built-in group name");
  c_cls->add_option("--probe", cls.probes, "PD file overriding the probe set (repeatable)");
  c_cls->add_option("--format", cls.format)->check(CLI::IsMember({"human", "machine"}));
  c_cls->callback([&] {
    auto G = builtin_structure(cls.group);
    std::vector<Diagram> probes;
    for (const auto& p : cls.probes) probes.push_back(load_diagram(p));
    if (probes.empty()) probes = classification_probes();
    std::vector<std::string> ids;
    if (cls.pair == "all")
      for (const auto& [id, unused] : group_word_pairs()) ids.push_back(id);
    else
      ids.push_back(cls.pair);
    auto list = nlohmann::json::array();
    for (const auto& id : ids) {
      auto rep = classify_group_pair(id, G, probes);
      if (cls.format == "machine") {
        nlohmann::json e;
        e["pair"] = rep.pair_id;
        e["group"] = rep.group;
        e["class"] = pair_class_name(rep.cls());
        e["core_ok"] = rep.core_ok;
        e["knot_ok"] = rep.knot_ok;
        e["colorings"] = rep.colorings;
        list.push_back(std::move(e));
      } else {
        out << rep.pair_id << " over " << rep.group << ": " << pair_class_name(rep.cls())
            << "\n";
      }
    }
    if (cls.format == "machine") out << list.dump(2) << "\n";
  });

  // builtin -------------------------------------------------------------------
  struct {
    std::string format = "human";
  } bli;
  auto* c_bli = app.add_subcommand("builtin", "list built-in structures and algebras");
  c_bli->add_option("--format", bli.format)->check(CLI::IsMember({"human", "machine"}));
  c_bli->callback([&] {
    std::vector<std::string> groups = {"c2", "c3", "c4", "c5", "c6", "c7", "c8",
                                       "s3", "d4", "q8"};
    std::vector<std::string> loops = {"ms3-2", "md4-2"};
    auto algebras = builtin_algebra_names();
    if (bli.format == "machine") {
      nlohmann::json j;
      j["groups"] = groups;
      j["loops"] = loops;
      j["algebras"] = algebras;
      out << j.dump(2) << "\n";
      return;
    }
    out << "groups:";
    for (const auto& g : groups) out << " " << g;
    out << "\nloops:";
    for (const auto& l : loops) out << " " << l;
    out << "\nalgebras:";
    for (const auto& a : algebras) out << " " << a;
    out << "\nalgebra specs: <form>:<structure>[:oriented] with form g1..g9, core, knot, "
           "m1..m6, e1..e18, b1..b4\n";
  });

  // fixtures ---------------------------------------------------------------
  struct {
    std::string dir, format = "human";
  } fix;
  auto* c_fix = app.add_subcommand("fixtures", "validate the shipped fixture files");
  c_fix->add_option("--dir", fix.dir, "fixture directory (default: $TKNOT_FIXTURES or ./fixtures)");
  c_fix->add_option("--format", fix.format)->check(CLI::IsMember({"human", "machine"}));
  c_fix->callback([&] {
    std::string dir = fix.dir;
    if (dir.empty()) {
      const char* env = std::getenv("TKNOT_FIXTURES");
      dir = env && *env ? env : "fixtures";
    }
    auto list = nlohmann::json::array();
    int bad = 0;
    for (const auto& name : detail::fixture_names()) {
      std::string path = dir + "/" + name;
      std::string status = "ok", info;
      try {
        if (name.size() > 3 && name.substr(name.size() - 3) == ".pd") {
          auto d = parse_pd(read_text_file(path));
          auto sd = shade(d);
          std::ostringstream os;
          os << d.crossing_count() << " crossings, " << sd.faces.count << " faces";
          info = os.str();
        } else if (name.find(".alg.json") != std::string::npos) {
          auto A = algebra_from_json(read_text_file(path), name);
          auto rep = check_axioms(A);
          info = rep.summary();
          if (!rep.all_pass()) status = "fail";
        } else {
          auto m = magma_from_json(read_text_file(path), name);
          std::ostringstream os;
          os << (m.is_loop() ? "loop" : "magma") << " of order " << m.n;
          info = os.str();
          if (!m.is_loop()) status = "fail";
        }
      } catch (const std::exception& e) {
        status = "fail";
        info = e.what();
      }
      if (status == "fail") ++bad;
      if (fix.format == "machine") {
        nlohmann::json e;
        e["file"] = name;
        e["status"] = status;
        e["info"] = info;
        list.push_back(std::move(e));
      } else {
        out << status << " " << name << " (" << info << ")\n";
      }
    }
    if (fix.format == "machine")
      out << list.dump(2) << "\n";
    else
      out << (detail::fixture_names().size() - bad) << "/" << detail::fixture_names().size()
          << " fixtures ok\n";
    if (bad) rc = 1;
  });

  // ---------------------------------------------------------------------
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

struct RunResult {
  int code = 0;
  std::string out, err;
};

inline RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  RunResult r;
  r.code = run(args, o, e);
  r.out = o.str();
  r.err = e.str();
  return r;
}

}  // namespace tknot::cli
