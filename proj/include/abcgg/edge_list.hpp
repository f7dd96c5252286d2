#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "abcgg/error.hpp"
#include "abcgg/graph.hpp"

// Edge-list documents:
//
//   # comment
//   p 4
//   0 1
//   1 2
//
// The "p <num_vertices>" header precedes every edge; body lines hold two
// 0-based vertex ids. Blank lines and lines starting with '#' are ignored.

namespace abcgg {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "'" + std::string(token) + "' is not a non-negative integer",
                line_no);
  }
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "p") {
      if (have_header) throw Error(ErrorKind::ParseError, "second 'p' header", line_no);
      if (tokens.size() != 2) {
        throw Error(ErrorKind::ParseError, "header must be 'p <num_vertices>'", line_no);
      }
      n = detail::parse_count(tokens[1], line_no);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw Error(ErrorKind::ParseError, "edge before the 'p <num_vertices>' header", line_no);
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::ParseError, "expected two vertex ids, got " +
                                             std::to_string(tokens.size()) + " fields",
                  line_no);
    }
    const std::size_t u = detail::parse_count(tokens[0], line_no);
    const std::size_t v = detail::parse_count(tokens[1], line_no);
    for (std::size_t w : {u, v}) {
      if (w >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(w) + " with num_vertices " + std::to_string(n),
                    line_no);
      }
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u), line_no);
    const Edge e = Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)}.normalized();
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")", line_no);
    }
    edges.push_back(e);
  }
  if (!have_header) {
    throw Error(ErrorKind::ParseError, "missing 'p <num_vertices>' header", line_no);
  }
  return build_graph(n, edges);
}

// Header, then one edge per line in sorted order.
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

inline Graph read_edge_list(const std::string& path) { return parse_edge_list(read_text_file(path)); }

}  // namespace abcgg
