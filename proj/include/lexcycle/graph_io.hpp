#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph text format:
//   # comment (to end of line)
//   v <name>          declare a vertex
//   <u> <w>           edge; endpoints are declared on first appearance
// Serialization writes one `v` line per vertex in input order, then the
// edges sorted by (min index, max index).

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Whitespace-separated vertex names; must list every vertex exactly once.
Ordering parse_ordering(const Graph& g, std::string_view text);
std::string serialize_ordering(const Graph& g, const Ordering& o);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lexcycle
