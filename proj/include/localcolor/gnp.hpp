#ifndef LOCALCOLOR_GNP_HPP
#define LOCALCOLOR_GNP_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "localcolor/graph.hpp"
#include "localcolor/rng.hpp"

namespace localcolor {

// Below this probability, runs of failed coin flips are replaced by one
// geometric jump. Same distribution, not the same bit stream as flipping.
inline constexpr double kSkipThreshold = 0.1;

// Geometric gap to the next success of a p-coin: returns g >= 1 such that
// the next success happens after g-1 failures. Infinite tails are reported
// as a value larger than `horizon`.
inline std::int64_t geometric_gap(RngStream& rng, double p, std::int64_t horizon) {
  const double u = 1.0 - rng.next_unit();  // (0,1]
  const double gap = 1.0 + std::floor(std::log(u) / std::log1p(-p));
  if (!(gap >= 1.0) || gap > static_cast<double>(horizon)) return horizon + 1;
  return static_cast<std::int64_t>(gap);
}

// First success among m p-coins: k in 1..m, or 0 when all fail.
inline int first_success_at_most(RngStream& rng, int m, double p) {
  if (m <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return 1;
  if (p >= kSkipThreshold) {
    for (int k = 1; k <= m; ++k)
      if (rng.bernoulli(p)) return k;
    return 0;
  }
  const std::int64_t gap = geometric_gap(rng, p, m);
  return gap > m ? 0 : static_cast<int>(gap);
}

// Number of successes among m p-coins.
inline int count_successes(RngStream& rng, int m, double p) {
  if (m <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return m;
  int hits = 0;
  if (p >= kSkipThreshold) {
    for (int i = 0; i < m; ++i)
      if (rng.bernoulli(p)) ++hits;
    return hits;
  }
  std::int64_t pos = 0;
  for (;;) {
    pos += geometric_gap(rng, p, m);
    if (pos > m) return hits;
    ++hits;
  }
}

// Visits each success among the C(len,2) vertex pairs of `verts`, enumerated
// lexicographically by index. Dense probabilities flip every pair; sparse
// ones jump between successes.
template <typename Fn>
inline void for_each_success_pair(const std::vector<int>& verts, double p, RngStream& rng, Fn&& fn) {
  const std::int64_t len = static_cast<std::int64_t>(verts.size());
  if (len < 2 || p <= 0.0) return;
  if (p >= 1.0 || p >= kSkipThreshold) {
    for (std::int64_t i = 0; i < len; ++i)
      for (std::int64_t j = i + 1; j < len; ++j)
        if (rng.bernoulli(p)) fn(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
    return;
  }
  const std::int64_t total = len * (len - 1) / 2;
  std::int64_t pos = -1;       // index into the pair sequence
  std::int64_t row = 0;        // first coordinate of the current pair
  std::int64_t row_start = 0;  // index of pair (row, row+1)
  for (;;) {
    pos += geometric_gap(rng, p, total);
    if (pos >= total) return;
    while (row_start + (len - 1 - row) <= pos) {
      row_start += len - 1 - row;
      ++row;
    }
    const std::int64_t col = row + 1 + (pos - row_start);
    fn(verts[static_cast<std::size_t>(row)], verts[static_cast<std::size_t>(col)]);
  }
}

// G(n,p): every unordered pair independently with probability p.
inline Graph sample_gnp(int n, double p, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p outside [0,1]");
  Graph g(n);
  if (n < 2 || p == 0.0) return g;
  if (p >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
  for_each_success_pair(verts, p, rng, [&](int u, int v) { g.add_edge(u, v); });
  return g;
}

}  // namespace localcolor

#endif
