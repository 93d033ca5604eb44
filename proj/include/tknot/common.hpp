#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tknot {

// All recoverable failures (bad input, broken invariants, misuse of an
// operation outside its precondition) are reported as domain_error.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

template <class... Args>
[[noreturn]] inline void fail(const Args&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw domain_error(os.str());
}

template <class... Args>
inline void require(bool cond, const Args&... parts) {
  if (!cond) fail(parts...);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& s) {
  require(!s.empty(), "expected an integer, got an empty token");
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    fail("bad integer '", s, "'");
  }
  require(pos == s.size(), "bad integer '", s, "'");
  return v;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace tknot
