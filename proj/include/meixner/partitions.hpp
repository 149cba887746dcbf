#ifndef MEIXNER_PARTITIONS_HPP
#define MEIXNER_PARTITIONS_HPP

// Set partitions of {1..n} in restricted-growth-string order, and direct
// generation of the non-crossing ones.  Enumeration caps keep exhaustive
// generation at desk scale (Bell and Catalan numbers grow fast).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace meixner {

struct SetPartition {
  std::vector<std::vector<int>> blocks;  // ordered by least element, elements 1..n

  int n_elements() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }
};

inline constexpr int kMaxSetPartitionN = 12;
inline constexpr int kMaxNonCrossingN = 14;

namespace detail {

template <class F>
void set_partition_rec(int i, int n, std::vector<std::vector<int>>& blocks, F&& visit) {
  if (i > n) {
    visit(const_cast<const std::vector<std::vector<int>>&>(blocks));
    return;
  }
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    blocks[j].push_back(i);
    set_partition_rec(i + 1, n, blocks, visit);
    blocks[j].pop_back();
  }
  blocks.push_back({i});
  set_partition_rec(i + 1, n, blocks, visit);
  blocks.pop_back();
}

// Stack discipline: an element may join any open block, which permanently
// closes every block nested above it, or open a new block.
template <class F>
void noncrossing_rec(int i, int n, std::vector<std::vector<int>>& blocks,
                     std::vector<std::size_t>& open, F&& visit) {
  if (i > n) {
    visit(const_cast<const std::vector<std::vector<int>>&>(blocks));
    return;
  }
  for (std::size_t depth = 0; depth < open.size(); ++depth) {
    std::vector<std::size_t> closed(open.begin() + static_cast<std::ptrdiff_t>(depth) + 1,
                                    open.end());
    open.resize(depth + 1);
    blocks[open[depth]].push_back(i);
    noncrossing_rec(i + 1, n, blocks, open, visit);
    blocks[open[depth]].pop_back();
    open.insert(open.end(), closed.begin(), closed.end());
  }
  blocks.push_back({i});
  open.push_back(blocks.size() - 1);
  noncrossing_rec(i + 1, n, blocks, open, visit);
  open.pop_back();
  blocks.pop_back();
}

}  // namespace detail

// Visits every partition of {1..n}; the reference passed to the visitor is
// reused between calls.
template <class F>
void for_each_set_partition(int n, F&& visit) {
  if (n < 1 || n > kMaxSetPartitionN)
    throw std::invalid_argument("set partitions: n must be in 1.." +
                                std::to_string(kMaxSetPartitionN));
  std::vector<std::vector<int>> blocks;
  detail::set_partition_rec(1, n, blocks, visit);
}

template <class F>
void for_each_noncrossing_partition(int n, F&& visit) {
  if (n < 1 || n > kMaxNonCrossingN)
    throw std::invalid_argument("non-crossing partitions: n must be in 1.." +
                                std::to_string(kMaxNonCrossingN));
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> open;
  detail::noncrossing_rec(1, n, blocks, open, visit);
}

inline std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    out.push_back(SetPartition{blocks});
  });
  return out;
}

inline std::vector<SetPartition> noncrossing_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_noncrossing_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    out.push_back(SetPartition{blocks});
  });
  return out;
}

// Crossing test: two blocks cross iff their merged elements alternate
// A,B,A,B somewhere.
inline bool is_noncrossing(const SetPartition& p) {
  const int n = p.n_elements();
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int e : p.blocks[b]) block_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
      int alternations = 1;
      int last = -1;
      for (int e = 1; e <= n; ++e) {
        const int b = block_of[static_cast<std::size_t>(e)];
        if (b != static_cast<int>(i) && b != static_cast<int>(j)) continue;
        if (last == -1) {
          last = b;
        } else if (b != last) {
          ++alternations;
          last = b;
          if (alternations >= 4) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace meixner

#endif
