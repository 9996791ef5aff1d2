#pragma once

// Test-only oracles. They work on plain edge lists and machine integers and
// share no code with the library, so agreement is independent evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;
using Mat = std::vector<std::vector<std::int64_t>>;

// Every k-subset of {0..n-1}, lexicographic; stops when visit returns true.
inline bool subsets(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Perfect matchings as sorted edge positions: every n/2-subset of edges that
// touches each vertex once.
inline std::vector<std::vector<int>> perfect_matchings(int n, const Pairs& edges) {
  std::vector<std::vector<int>> out;
  subsets(static_cast<int>(edges.size()), n / 2, [&](const std::vector<int>& pick) {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int i : pick) {
      if (seen[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].first)]++ ||
          seen[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].second)]++)
        return false;
    }
    out.push_back(pick);
    return false;
  });
  return out;
}

// Permanent of a 0/1 biadjacency matrix by Ryser's formula.
inline std::int64_t permanent(const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::int64_t total = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::int64_t prod = 1;
    for (int i = 0; i < n; ++i) {
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j)
        if (s >> j & 1U) row += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      prod *= row;
    }
    const int sign = (n - __builtin_popcount(s)) % 2 == 0 ? 1 : -1;
    total += sign * prod;
  }
  return total;
}

// Fraction-free Gaussian elimination (Bareiss); returns the rank and leaves
// the determinant of a square full-rank input in `det`.
inline int bareiss_rank(Mat m, std::int64_t* det = nullptr) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  __int128 prev = 1;
  int sign = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
      sign = -sign;
    }
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      for (int j = c + 1; j < cols; ++j) {
        const __int128 v = (static_cast<__int128>(p[static_cast<std::size_t>(c)]) * row[static_cast<std::size_t>(j)] -
                            static_cast<__int128>(row[static_cast<std::size_t>(c)]) * p[static_cast<std::size_t>(j)]) /
                           prev;
        row[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(v);
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = p[static_cast<std::size_t>(c)];
    ++rank;
  }
  if (det) *det = rank == rows && rows == cols ? sign * static_cast<std::int64_t>(prev) : 0;
  return rank;
}

inline std::int64_t determinant(const Mat& m) {
  if (m.empty()) return 1;
  std::int64_t d = 0;
  bareiss_rank(m, &d);
  return d;
}

// gcd of all k×k minors (the k-th determinantal divisor). Stops early at 1.
inline std::int64_t minor_gcd(const Mat& m, int k) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::int64_t g = 0;
  subsets(rows, k, [&](const std::vector<int>& rs) {
    return subsets(cols, k, [&](const std::vector<int>& cs) {
      Mat sub;
      for (int r : rs) {
        std::vector<std::int64_t> row;
        for (int c : cs) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        sub.push_back(std::move(row));
      }
      g = std::gcd(g, std::abs(determinant(sub)));
      return g == 1;
    });
  });
  return g;
}

// Invariant factors d_k / d_{k-1} from determinantal divisors.
inline std::vector<std::int64_t> smith_divisors(const Mat& m) {
  const int r = bareiss_rank(m);
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (int k = 1; k <= r; ++k) {
    const std::int64_t dk = minor_gcd(m, k);
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Rows independent and spanning an integrally closed lattice: gcd of the
// maximal minors is 1.
inline bool integral_rows(const Mat& m) {
  return bareiss_rank(m) == static_cast<int>(m.size()) && minor_gcd(m, static_cast<int>(m.size())) == 1;
}

// Number of 5-cycles as vertex sets with a cyclic order, ignoring parallels.
inline int five_cycle_count(int n, const Pairs& edges) {
  std::set<std::pair<int, int>> adj;
  for (auto [u, v] : edges) {
    adj.emplace(u, v);
    adj.emplace(v, u);
  }
  int count = 0;
  std::vector<int> c(5);
  std::function<void(int)> grow = [&](int depth) {
    if (depth == 5) {
      if (adj.count({c[4], c[0]}) && c[1] < c[4]) ++count;
      return;
    }
    for (int v = c[0] + 1; v < n; ++v) {
      if (std::find(c.begin(), c.begin() + depth, v) != c.begin() + depth) continue;
      if (!adj.count({c[static_cast<std::size_t>(depth - 1)], v})) continue;
      c[static_cast<std::size_t>(depth)] = v;
      grow(depth + 1);
    }
  };
  for (int s = 0; s < n; ++s) {
    c[0] = s;
    grow(1);
  }
  return count;
}

}  // namespace oracle
