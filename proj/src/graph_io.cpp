#include "lexcycle/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace lexcycle {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  GraphBuilder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = tokenize(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (tokens.empty()) continue;
    try {
      if (tokens.size() == 2 && tokens[0] == "v") {
        b.add_vertex(std::string(tokens[1]));
      } else if (tokens.size() == 2) {
        if (tokens[0] == tokens[1]) throw GraphError("self-loop on '" + std::string(tokens[0]) + "'");
        const Vertex u = b.ensure_vertex(tokens[0]);
        b.add_edge(u, b.ensure_vertex(tokens[1]));
      } else {
        throw GraphError("expected 'v <name>' or '<u> <w>', got " + std::to_string(tokens.size()) + " tokens");
      }
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return std::move(b).build();
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& name : g.names()) out << "v " << name << '\n';
  for (auto [u, v] : g.edges()) out << g.name(u) << ' ' << g.name(v) << '\n';
  return out.str();
}

Ordering parse_ordering(const Graph& g, std::string_view text) {
  std::vector<Vertex> seq;
  std::vector<char> seen(g.order(), 0);
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    for (auto token : tokenize(strip_comment(text.substr(start, end - start)))) {
      auto v = g.find(token);
      if (!v) throw ParseError(line_no, "unknown vertex '" + std::string(token) + "'");
      if (seen[static_cast<std::size_t>(*v)]++) throw ParseError(line_no, "vertex '" + std::string(token) + "' repeated");
      seq.push_back(*v);
    }
    start = end + 1;
    ++line_no;
  }
  if (seq.size() != g.order())
    throw ParseError(line_no - 1, "ordering lists " + std::to_string(seq.size()) + " of " +
                                      std::to_string(g.order()) + " vertices");
  return Ordering(std::move(seq));
}

std::string serialize_ordering(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  std::string out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out += ' ';
    out += g.name(o.at(i));
  }
  out += '\n';
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace lexcycle
