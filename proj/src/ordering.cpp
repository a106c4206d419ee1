#include "lexcycle/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace lexcycle {

Ordering::Ordering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  position_.assign(sequence_.size(), kUnset);
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const Vertex v = sequence_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= sequence_.size())
      throw GraphError("ordering entry " + std::to_string(v) + " out of range");
    auto& p = position_[static_cast<std::size_t>(v)];
    if (p != kUnset) throw GraphError("vertex " + std::to_string(v) + " appears twice in ordering");
    p = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return Ordering(std::move(seq));
}

Ordering Ordering::dual() const {
  return Ordering(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

Ordering Ordering::restrict_to(std::span<const Vertex> subset) const {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  std::vector<Vertex> local(size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Vertex v = members[k];
    if (v < 0 || static_cast<std::size_t>(v) >= size()) throw GraphError("restriction vertex out of range");
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(k);
  }
  std::vector<Vertex> seq;
  seq.reserve(members.size());
  for (Vertex v : sequence_)
    if (local[static_cast<std::size_t>(v)] >= 0) seq.push_back(local[static_cast<std::size_t>(v)]);
  return Ordering(std::move(seq));
}

std::optional<std::size_t> first_difference(const Ordering& a, const Ordering& b) {
  if (a.size() != b.size()) throw GraphError("orderings of different vertex sets");
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin());
  if (ia == a.end()) return std::nullopt;
  return static_cast<std::size_t>(ia - a.begin());
}

void require_ordering_of(const Graph& g, const Ordering& o) {
  if (o.size() != g.order())
    throw GraphError("ordering has " + std::to_string(o.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

namespace {

std::vector<std::size_t> blocks_by(const ModularPartition& partition, const Ordering& o, bool last) {
  std::vector<std::size_t> key(partition.size(), last ? 0 : o.size());
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (Vertex v : partition.block(i))
      key[i] = last ? std::max(key[i], o.position(v)) : std::min(key[i], o.position(v));
  std::vector<std::size_t> blocks(partition.size());
  std::iota(blocks.begin(), blocks.end(), 0);
  std::sort(blocks.begin(), blocks.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return blocks;
}

}  // namespace

std::vector<std::size_t> blocks_by_first_member(const ModularPartition& partition, const Ordering& o) {
  return blocks_by(partition, o, false);
}

std::vector<std::size_t> blocks_by_last_member(const ModularPartition& partition, const Ordering& o) {
  return blocks_by(partition, o, true);
}

}  // namespace lexcycle
