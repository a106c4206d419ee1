#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

/// Dense adjacency indexed by positions in an ordering, one bit row per
/// position.
class PositionAdjacency {
 public:
  PositionAdjacency(const Graph& g, const Ordering& o) : n_(o.size()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
    for (std::size_t p = 0; p < n_; ++p)
      for (Vertex w : g.neighbors(o.at(p))) set(p, o.position(w));
  }

  bool operator()(std::size_t p, std::size_t q) const {
    return (bits_[p * words_ + q / 64] >> (q % 64)) & 1U;
  }

  /// Whether every position in [lo, hi) is adjacent to p or to q.
  bool union_covers(std::size_t p, std::size_t q, std::size_t lo, std::size_t hi) const {
    const std::uint64_t* rp = &bits_[p * words_];
    const std::uint64_t* rq = &bits_[q * words_];
    for (std::size_t w = lo / 64; w * 64 < hi; ++w) {
      std::uint64_t mask = ~std::uint64_t{0};
      if (w == lo / 64) mask &= ~std::uint64_t{0} << (lo % 64);
      if ((w + 1) * 64 > hi) mask &= (std::uint64_t{1} << (hi % 64)) - 1;
      if (((rp[w] | rq[w]) & mask) != mask) return false;
    }
    return true;
  }

 private:
  void set(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace lexcycle
