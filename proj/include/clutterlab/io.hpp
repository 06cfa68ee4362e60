#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<long long> parse_integers(const std::string& text, int line) {
  std::istringstream in(text);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/**
 * Text format: a header line "n d", then one circuit per line as d vertex
 * indices. '#' starts a comment line; blank lines are skipped.
 */
inline Clutter parse_clutter_text(std::istream& in) {
  std::string raw;
  int line = 0;
  bool have_header = false;
  int n = 0;
  int d = 0;
  std::vector<VertexSet> circuits;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto values = detail::parse_integers(text, line);
    if (!have_header) {
      if (values.size() != 2) throw ParseError(line, "header must be 'n d'");
      if (values[0] < 1 || values[1] < 1) throw ParseError(line, "n and d must be positive");
      if (values[0] > max_vertices) throw ParseError(line, "n exceeds the cap of " + std::to_string(max_vertices));
      n = static_cast<int>(values[0]);
      d = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(values.size()) != d) {
      throw ParseError(line, "circuit has " + std::to_string(values.size()) + " vertices, expected " + std::to_string(d));
    }
    if (n < d) throw ParseError(line, "a clutter with n < d has no circuits");
    VertexSet f;
    for (long long v : values) {
      if (v < 1 || v > n) throw ParseError(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (f.contains(static_cast<int>(v))) throw ParseError(line, "repeated vertex " + std::to_string(v));
      f.insert(static_cast<int>(v));
    }
    circuits.push_back(f);
  }
  if (!have_header) throw ParseError(0, "missing 'n d' header");
  return make_clutter(n, d, circuits);
}

inline nlohmann::json to_json(const Clutter& c) {
  nlohmann::json circuits = nlohmann::json::array();
  for (VertexSet f : c.circuits()) circuits.push_back(f.vertices());
  return {{"n", c.n()}, {"d", c.d()}, {"circuits", circuits}};
}

inline Clutter clutter_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const auto lists = j.at("circuits").get<std::vector<std::vector<int>>>();
    return make_clutter(n, d, lists);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed clutter JSON: ") + e.what());
  } catch (const ClutterError& e) {
    throw ParseError(0, e.what());
  }
}

/// Accepts either format; JSON is recognised by a leading '{'.
inline Clutter parse_clutter(const std::string& content) {
  const std::string head = detail::trim(content);
  if (!head.empty() && head.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    // a saved report carries its clutter under "input"
    if (j.is_object() && j.contains("input")) return clutter_from_json(j["input"]);
    return clutter_from_json(j);
  }
  std::istringstream in(content);
  try {
    return parse_clutter_text(in);
  } catch (const ClutterError& e) {
    throw ParseError(0, e.what());
  }
}

inline Clutter read_clutter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_clutter(buffer.str());
}

inline void write_clutter_text(std::ostream& out, const Clutter& c) {
  out << c.n() << ' ' << c.d() << '\n';
  for (VertexSet f : c.circuits()) {
    const auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
}

}  // namespace clutterlab
