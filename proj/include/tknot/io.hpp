#pragma once

// File formats.  Diagrams travel as PD text (parse_pd/write_pd); algebras
// and Cayley tables as small JSON documents:
//
//   algebra:  {"name": ..., "size": n, "kind": "unoriented"|"oriented",
//              "op1": [[[...]]], "op2": [[[...]]]}   (op[x][y][z], 0-based)
//   magma:    {"name": ..., "size": n, "table": [[...]]}  (table[x][y] = x*y)
//
// Relative input paths that do not resolve are retried under the directory
// named by the TKNOT_FIXTURES environment variable.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tknot/algebra.hpp"
#include "tknot/common.hpp"
#include "tknot/diagram.hpp"

namespace tknot {

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open file '", path, "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string resolve_input_path(const std::string& path) {
  if (std::ifstream(path).good()) return path;
  const char* env = std::getenv("TKNOT_FIXTURES");
  if (env && *env && path.find('/') == std::string::npos) {
    std::string alt = std::string(env) + "/" + path;
    if (std::ifstream(alt).good()) return alt;
  }
  return path;
}

namespace detail {

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(origin, ": ", e.what());
  }
}

inline std::vector<int> flatten_cube(const nlohmann::json& j, int n, const std::string& origin,
                                     const std::string& field) {
  require(j.is_array() && int(j.size()) == n, origin, ": '", field, "' must be a ", n, "x", n,
          "x", n, " array");
  std::vector<int> cube;
  cube.reserve(size_t(n) * n * n);
  for (const auto& plane : j) {
    require(plane.is_array() && int(plane.size()) == n, origin, ": ragged '", field, "'");
    for (const auto& row : plane) {
      require(row.is_array() && int(row.size()) == n, origin, ": ragged '", field, "'");
      for (const auto& v : row) {
        require(v.is_number_integer(), origin, ": non-integer entry in '", field, "'");
        cube.push_back(v.get<int>());
      }
    }
  }
  return cube;
}

inline nlohmann::json nest_cube(const std::vector<int>& cube, int n) {
  nlohmann::json out = nlohmann::json::array();
  for (int x = 0; x < n; ++x) {
    nlohmann::json plane = nlohmann::json::array();
    for (int y = 0; y < n; ++y) {
      nlohmann::json row = nlohmann::json::array();
      for (int z = 0; z < n; ++z) row.push_back(cube[(size_t(x) * n + y) * n + z]);
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

}  // namespace detail

inline FiniteTernaryAlgebra algebra_from_json(const std::string& text,
                                              const std::string& origin) {
  auto j = detail::parse_json(text, origin);
  require(j.is_object() && j.contains("size") && j.contains("kind") && j.contains("op1") &&
              j.contains("op2"),
          origin, ": algebra files need size, kind, op1, op2");
  FiniteTernaryAlgebra A;
  A.n = j.at("size").get<int>();
  require(A.n > 0, origin, ": size must be positive");
  std::string kind = j.at("kind").get<std::string>();
  require(kind == "unoriented" || kind == "oriented", origin, ": unknown kind '", kind, "'");
  A.kind = kind == "unoriented" ? Kind::unoriented : Kind::oriented;
  A.op1 = detail::flatten_cube(j.at("op1"), A.n, origin, "op1");
  A.op2 = detail::flatten_cube(j.at("op2"), A.n, origin, "op2");
  A.name = j.value("name", origin);
  A.validate();
  return A;
}

inline std::string algebra_to_json(const FiniteTernaryAlgebra& A) {
  A.validate();
  nlohmann::json j;
  j["name"] = A.name;
  j["size"] = A.n;
  j["kind"] = kind_name(A.kind);
  j["op1"] = detail::nest_cube(A.op1, A.n);
  j["op2"] = detail::nest_cube(A.op2, A.n);
  return j.dump(2) + "\n";
}

inline MagmaTable magma_from_json(const std::string& text, const std::string& origin) {
  auto j = detail::parse_json(text, origin);
  require(j.is_object() && j.contains("size") && j.contains("table"), origin,
          ": magma files need size and table");
  MagmaTable m;
  m.n = j.at("size").get<int>();
  require(m.n > 0, origin, ": size must be positive");
  const auto& t = j.at("table");
  require(t.is_array() && int(t.size()) == m.n, origin, ": 'table' must be ", m.n, " rows");
  for (const auto& row : t) {
    require(row.is_array() && int(row.size()) == m.n, origin, ": ragged 'table'");
    for (const auto& v : row) {
      require(v.is_number_integer(), origin, ": non-integer entry in 'table'");
      m.mul.push_back(v.get<int>());
    }
  }
  m.name = j.value("name", origin);
  m.validate();
  return m;
}

inline std::string magma_to_json(const MagmaTable& m) {
  m.validate();
  nlohmann::json j;
  j["name"] = m.name;
  j["size"] = m.n;
  nlohmann::json t = nlohmann::json::array();
  for (int x = 0; x < m.n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < m.n; ++y) row.push_back(m.at(x, y));
    t.push_back(std::move(row));
  }
  j["table"] = std::move(t);
  return j.dump(2) + "\n";
}

inline Diagram load_diagram(const std::string& path) {
  return parse_pd(read_text_file(resolve_input_path(path)));
}

inline FiniteTernaryAlgebra load_algebra_file(const std::string& path) {
  auto full = resolve_input_path(path);
  return algebra_from_json(read_text_file(full), path);
}

inline MagmaTable load_magma_file(const std::string& path) {
  auto full = resolve_input_path(path);
  return magma_from_json(read_text_file(full), path);
}

}  // namespace tknot
