#include "lexcycle/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lexcycle/checkers.hpp"
#include "lexcycle/graph_io.hpp"

namespace lexcycle {

namespace {

// Column j lives at bit 63 - j % 64 of word j / 64, so comparing words as
// unsigned integers compares rows lexicographically.
constexpr std::uint64_t bit_of(std::size_t j) { return std::uint64_t{1} << (63 - j % 64); }

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix dimensions must be positive");
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(i, j, rows[i][j] == 1);
    }
  }
  return m;
}

bool BinaryMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return (bits_[i * words_ + j / 64] & bit_of(j)) != 0;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  auto& word = bits_[i * words_ + j / 64];
  word = value ? (word | bit_of(j)) : (word & ~bit_of(j));
}

int BinaryMatrix::compare_rows(std::size_t i, std::size_t k) const {
  const auto* a = row(i);
  const auto* b = row(k);
  for (std::size_t w = 0; w < words_; ++w)
    if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
  return 0;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (bits_[i * words_ + j / 64] & bit_of(j)) t.bits_[j * t.words_ + i / 64] |= bit_of(i);
  return t;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = get(i, j) ? 1 : 0;
  return out;
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t p = 0, q = 0;
  bool have_header = false;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string word;
    std::vector<std::string> words;
    while (tokens >> word) words.push_back(word);
    if (words.empty()) continue;
    if (!have_header) {
      try {
        std::size_t used0 = 0, used1 = 0;
        if (words.size() != 2) throw std::invalid_argument("header");
        p = std::stoul(words[0], &used0);
        q = std::stoul(words[1], &used1);
        if (used0 != words[0].size() || used1 != words[1].size()) throw std::invalid_argument("header");
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected header 'p q'");
      }
      if (p == 0 || q == 0) throw ParseError(line_no, "matrix dimensions must be positive");
      have_header = true;
      continue;
    }
    if (words.size() != 1 || words[0].size() != q) throw ParseError(line_no, "expected a row of " + std::to_string(q) + " digits");
    if (rows.size() == p) throw ParseError(line_no, "more than " + std::to_string(p) + " rows");
    std::vector<int> r;
    for (char c : words[0]) {
      if (c != '0' && c != '1') throw ParseError(line_no, "matrix entries must be 0 or 1");
      r.push_back(c - '0');
    }
    rows.push_back(std::move(r));
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p q'");
  if (rows.size() != p) throw ParseError(line_no, "expected " + std::to_string(p) + " rows");
  return BinaryMatrix::from_rows(rows);
}

std::string serialize_matrix(const BinaryMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += m.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BinaryMatrix sort_rows_lex(const BinaryMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.compare_rows(a, b) < 0; });
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i)
    std::copy_n(m.row(order[i]), m.words_, out.bits_.begin() + static_cast<std::ptrdiff_t>(i * m.words_));
  return out;
}

BinaryMatrix sort_cols_lex(const BinaryMatrix& m) { return sort_rows_lex(m.transpose()).transpose(); }

bool rows_sorted(const BinaryMatrix& m) {
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m.compare_rows(i - 1, i) > 0) return false;
  return true;
}

bool cols_sorted(const BinaryMatrix& m) { return rows_sorted(m.transpose()); }

std::vector<int> potential_vector(const BinaryMatrix& m) {
  std::vector<int> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& r : m.to_rows()) out.insert(out.end(), r.begin(), r.end());
  return out;
}

FixpointReport iterate_to_fixpoint(const BinaryMatrix& m, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
  FixpointReport r{m, 0, {potential_vector(m)}};
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const bool row_pass = step % 2 == 1;
    BinaryMatrix next = row_pass ? sort_rows_lex(r.final_matrix) : sort_cols_lex(r.final_matrix);
    const bool unchanged = next == r.final_matrix;
    r.final_matrix = std::move(next);
    r.steps = step;
    r.potential_trace.push_back(potential_vector(r.final_matrix));
    if (unchanged && (step >= 2 || (row_pass ? cols_sorted(r.final_matrix) : rows_sorted(r.final_matrix)))) return r;
  }
  throw FixpointNotReached("no fixpoint within " + std::to_string(max_steps) + " passes");
}

BinaryMatrix cobipartite_matrix(const Graph& g, const Ordering& o, std::size_t prefix) {
  require_ordering_of(g, o);
  const std::size_t n = o.size();
  if (prefix == 0 || prefix >= n) throw GraphError("both sides of the split must be nonempty");
  std::vector<Vertex> a(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(prefix));
  std::vector<Vertex> b(o.begin() + static_cast<std::ptrdiff_t>(prefix), o.end());
  if (!is_clique(g, a) || !is_clique(g, b)) throw GraphError("ordering is not split into two cliques");
  std::reverse(b.begin(), b.end());
  BinaryMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m.set(i, j, g.adjacent(a[i], b[j]));
  return m;
}

BinaryMatrix cobipartite_matrix(const Graph& g, const Ordering& o) {
  const auto split = clique_split(g, o);
  if (!split || !split->suffix_is_clique || split->prefix >= o.size())
    throw GraphError("ordering is not split into two cliques");
  return cobipartite_matrix(g, o, split->prefix);
}

}  // namespace lexcycle
