#pragma once

#include <vector>

#include "matchlat/corpus.hpp"
#include "matchlat/linalg.hpp"
#include "matchlat/matchings.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Pairs pairs_of(const matchlat::MultiGraph& g) {
  oracle::Pairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline oracle::Mat to_mat(const matchlat::IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
  return out;
}

inline matchlat::IntMatrix from_mat(const oracle::Mat& m, std::size_t cols) {
  matchlat::IntMatrix out(0, cols);
  for (const auto& row : m) {
    matchlat::IntVector v;
    for (auto x : row) v.emplace_back(static_cast<long>(x));
    out.append_row(v);
  }
  return out;
}

// Incidence rows of the oracle's matchings (edge positions are edge indices).
inline oracle::Mat matching_rows(const matchlat::MultiGraph& g) {
  oracle::Mat out;
  for (const auto& pick : oracle::perfect_matchings(g.vertex_count(), pairs_of(g))) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(g.edge_count()), 0);
    for (int i : pick) row[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(row));
  }
  return out;
}

inline matchlat::IntMatrix matching_matrix(const std::vector<matchlat::PerfectMatching>& ms, int edges) {
  matchlat::IntMatrix m(0, static_cast<std::size_t>(edges));
  for (const auto& pm : ms) m.append_row(pm.vector());
  return m;
}

}  // namespace support
