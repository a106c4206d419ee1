#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

/// p x q matrix over {0, 1} stored as packed rows. Both dimensions are
/// positive.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument for ragged, empty or non-binary input.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  /// Lexicographic comparison of rows i and k: negative, zero or positive.
  int compare_rows(std::size_t i, std::size_t k) const;

  BinaryMatrix transpose() const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  friend BinaryMatrix sort_rows_lex(const BinaryMatrix& m);

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Text format: "p q" on the first line, then p lines of q characters 0/1.
// Blank lines and '#' comments are skipped. Errors throw ParseError.
BinaryMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BinaryMatrix& m);

/// Stable sort of the rows (resp. columns) into non-decreasing
/// lexicographic order.
BinaryMatrix sort_rows_lex(const BinaryMatrix& m);
BinaryMatrix sort_cols_lex(const BinaryMatrix& m);
bool rows_sorted(const BinaryMatrix& m);
bool cols_sorted(const BinaryMatrix& m);

/// Row-major flattening.
std::vector<int> potential_vector(const BinaryMatrix& m);

struct FixpointReport {
  BinaryMatrix final_matrix;
  /// Sorting passes applied, the closing no-op pass included.
  std::size_t steps = 0;
  /// potential_vector before the first pass and after each pass.
  std::vector<std::vector<int>> potential_trace;
};

class FixpointNotReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alternates row sorts (passes 1, 3, ...) and column sorts (passes 2, 4,
/// ...) until a pass changes nothing and the matrix is sorted both ways.
/// Throws std::invalid_argument for max_steps == 0 and FixpointNotReached
/// when max_steps passes do not suffice.
FixpointReport iterate_to_fixpoint(const BinaryMatrix& m, std::size_t max_steps);

/// Matrix of a cobipartite ordering a_1..a_p, b_q..b_1 where the a's are
/// the first `prefix` vertices of o: entry (i, j) is 1 iff a_i b_j is an
/// edge. Throws GraphError unless both sides are nonempty cliques.
BinaryMatrix cobipartite_matrix(const Graph& g, const Ordering& o, std::size_t prefix);
/// As above with the prefix taken from clique_split.
BinaryMatrix cobipartite_matrix(const Graph& g, const Ordering& o);

}  // namespace lexcycle
