#include "oddchrome/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace oddchrome {

namespace {

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Splits on runs of spaces/tabs after stripping a trailing carriage return.
std::vector<std::string> fields(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected an integer ") + what +
                                  ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line_no, std::string("expected an integer ") + what +
                                  ", got '" + tok + "'");
  if (value < 0 || value > 100000000)
    throw ParseError(line_no,
                     std::string(what) + " out of range: '" + tok + "'");
  return static_cast<int>(value);
}

}  // namespace

MultiGraph parse_mel(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::vector<std::pair<int, int>> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::string stripped = line;
    if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
    if (!stripped.empty() && stripped[0] == '#') continue;
    std::vector<std::string> f = fields(stripped);
    if (f.empty()) continue;
    if (f[0] == "n") {
      if (have_header)
        throw ParseError(line_no, "duplicate header line");
      if (f.size() != 2)
        throw ParseError(line_no, "header must be 'n <N>'");
      n = parse_int(f[1], line_no, "vertex count");
      have_header = true;
    } else if (f[0] == "e") {
      if (!have_header)
        throw ParseError(line_no, "edge line before 'n <N>' header");
      if (f.size() != 3)
        throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      int u = parse_int(f[1], line_no, "vertex id");
      int v = parse_int(f[2], line_no, "vertex id");
      if (u >= n || v >= n)
        throw ParseError(line_no, "vertex id out of range");
      edge_lines.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unrecognized line '" + stripped + "'");
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n <N>' header");
  MultiGraph g(n);
  for (const auto& [u, v] : edge_lines) g.add_edge(u, v);
  return g;
}

std::string serialize_mel(const MultiGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (EdgeId e = 0; e < g.size(); ++e)
    out << "e " << g.edge(e).u << " " << g.edge(e).v << "\n";
  return out.str();
}

MultiGraph parse_graph6(const std::string& text) {
  // Take the first non-blank line; tolerate the optional ">>graph6<<" header.
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::string data;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    data = line;
    break;
  }
  if (data.empty()) throw ParseError(1, "empty graph6 input");
  const std::string header = ">>graph6<<";
  if (data.rfind(header, 0) == 0) data = data.substr(header.size());
  if (data.empty()) throw ParseError(line_no, "graph6 header without data");
  if (data[0] == ':' || data[0] == ';')
    throw ParseError(line_no,
                     "sparse6 input is not supported (multigraphs cannot be "
                     "carried by this importer)");
  if (data[0] == '&')
    throw ParseError(line_no, "digraph6 input is not supported");

  std::size_t at = 0;
  auto byte = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(data[i]);
    if (c < 63 || c > 126)
      throw ParseError(line_no, "invalid graph6 byte at position " +
                                    std::to_string(i + 1));
    return c - 63;
  };

  long long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    at = 1;
  } else {
    if (data.size() < 4)
      throw ParseError(line_no, "truncated graph6 vertex count");
    if (byte(1) == 63) {
      throw ParseError(line_no, "graph6 input too large");
    }
    n = (static_cast<long long>(byte(1)) << 12) |
        (static_cast<long long>(byte(2)) << 6) | byte(3);
    at = 4;
  }
  if (n > 100000) throw ParseError(line_no, "graph6 input too large");

  long long bits = n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if (static_cast<long long>(data.size()) - static_cast<long long>(at) != need)
    throw ParseError(line_no, "graph6 body has the wrong length");

  MultiGraph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int c = byte(at + bit / 6);
      int b = (c >> (5 - bit % 6)) & 1;
      if (b) g.add_edge(i, j);
    }
  }
  return g;
}

std::string emit_dot(const MultiGraph& g,
                     const std::optional<EdgeColoring>& coloring) {
  if (coloring && static_cast<int>(coloring->color.size()) != g.size())
    throw std::invalid_argument("emit_dot: coloring size mismatch");
  auto color_name = [](int c) -> const char* {
    switch (c) {
      case 1:
        return "red";
      case 2:
        return "blue";
      case 3:
        return "green";
      case 4:
        return "orange";
      default:
        return "gray";
    }
  };
  std::ostringstream out;
  out << "graph oddchrome {\n";
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (coloring) out << " [color=\"" << color_name(coloring->color[e]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace oddchrome
