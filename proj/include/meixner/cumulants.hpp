#ifndef MEIXNER_CUMULANTS_HPP
#define MEIXNER_CUMULANTS_HPP

// Moment <-> cumulant conversion by the partition recursion
//   m(n) = sum over partitions pi of [n] of prod_{A in pi} c_{|A|},
// with all set partitions classically and non-crossing partitions in the
// free case.  This is the combinatorial oracle for the cumulant series.

#include <stdexcept>
#include <vector>

#include "meixner/params.hpp"
#include "meixner/partitions.hpp"
#include "meixner/scalar.hpp"

namespace meixner {

namespace detail {

template <class T, class F>
void for_each_partition_of(Framework fw, int n, F&& visit) {
  if (fw == Framework::Classical)
    for_each_set_partition(n, visit);
  else
    for_each_noncrossing_partition(n, visit);
}

}  // namespace detail

// c[0] = 0 and c[k] for 1 <= k <= n; the single-block term is isolated:
//   c(k) = m(k) - sum over partitions with >= 2 blocks.
template <class T>
std::vector<T> moments_to_cumulants(Framework fw, const std::vector<T>& m, int n) {
  if (static_cast<int>(m.size()) <= n)
    throw std::invalid_argument("moments_to_cumulants: need moments up to index n");
  const int cap = fw == Framework::Classical ? kMaxSetPartitionN : kMaxNonCrossingN;
  if (n < 1 || n > cap)
    throw std::invalid_argument("moments_to_cumulants: n out of range 1.." + std::to_string(cap));
  std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
  for (int k = 1; k <= n; ++k) {
    T rest(0);
    detail::for_each_partition_of<T>(fw, k, [&](const std::vector<std::vector<int>>& blocks) {
      if (blocks.size() < 2) return;
      T prod(1);
      for (const auto& b : blocks) prod *= c[b.size()];
      rest += prod;
    });
    c[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k)] - rest;
  }
  return c;
}

// Forward direction of the same recursion; exact inverse of the above.
template <class T>
std::vector<T> cumulants_to_moments(Framework fw, const std::vector<T>& c, int n) {
  const int cap = fw == Framework::Classical ? kMaxSetPartitionN : kMaxNonCrossingN;
  if (n < 1 || n > cap)
    throw std::invalid_argument("cumulants_to_moments: n out of range 1.." + std::to_string(cap));
  std::vector<T> m(static_cast<std::size_t>(n) + 1, T(0));
  m[0] = T(1);
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    detail::for_each_partition_of<T>(fw, k, [&](const std::vector<std::vector<int>>& blocks) {
      T prod(1);
      for (const auto& b : blocks) {
        if (b.size() >= c.size()) {
          prod = T(0);
          break;
        }
        prod *= c[b.size()];
      }
      acc += prod;
    });
    m[static_cast<std::size_t>(k)] = acc;
  }
  return m;
}

}  // namespace meixner

#endif
