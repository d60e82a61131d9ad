#ifndef ODDCHROME_IO_HPP
#define ODDCHROME_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "oddchrome/coloring.hpp"
#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// Error in a textual graph description; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Multigraph edge-list text:
//   - lines starting with '#' are comments, blank lines are ignored
//   - the first payload line is `n <N>`
//   - every following payload line is `e <u> <v>` with 0 <= u,v < N
//     (u == v makes a loop); edge ids follow line order.
MultiGraph parse_mel(const std::string& text);
std::string serialize_mel(const MultiGraph& g);

// Standard graph6 (simple graphs).  Sparse6/digraph6 inputs are rejected
// with a clear message since they describe graphs this format cannot carry.
MultiGraph parse_graph6(const std::string& text);

// Undirected DOT output; parallel edges repeated, loops as self-edges.
// Colors map 1->red, 2->blue, 3->green, 4->orange, others gray.
std::string emit_dot(const MultiGraph& g,
                     const std::optional<EdgeColoring>& coloring = std::nullopt);

}  // namespace oddchrome

#endif  // ODDCHROME_IO_HPP
