/*
 *   Copyright 2026 the tgmod authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGMOD_SSET_HPP
#define TGMOD_SSET_HPP

#include <map>
#include <string>
#include <vector>

#include "tgmod/config.hpp"

namespace tgmod {

/// A finite simplicial set truncated at `trunc`, with opaque simplex indices.
struct SimplicialSet {
  std::string name;
  std::size_t trunc = 0;
  std::vector<std::size_t> level_sizes;  ///< trunc+1 entries
  /// faces[n][i][s]: d_i of simplex s at level n (1 <= n <= trunc, 0 <= i <= n)
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  /// degens[n][i][s]: s_i of simplex s at level n (0 <= n < trunc, 0 <= i <= n)
  std::vector<std::vector<std::vector<std::size_t>>> degens;

  std::size_t face(std::size_t n, std::size_t i, std::size_t s) const {
    return faces[n][i][s];
  }
  std::size_t degen(std::size_t n, std::size_t i, std::size_t s) const {
    return degens[n][i][s];
  }
};

/// All monotone maps [m] -> [d] as value vectors of length m+1, lex order.
inline std::vector<std::vector<int>> monotone_maps(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i < m; ++i)
      if (cur[i] > cur[i + 1]) mono = false;
    if (mono) out.push_back(cur);
    int k = m;
    while (k >= 0 && cur[k] == d) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

/// The standard simplex Delta[d], truncated. Simplex s at level m is the
/// monotone map delta_simplices(d)[m][s].
struct DeltaComplex {
  int dim = 0;
  std::size_t trunc = 0;
  std::vector<std::vector<std::vector<int>>> simplices;  ///< [m][s] = values
  std::vector<std::map<std::vector<int>, std::size_t>> index;

  std::size_t at(std::size_t m, const std::vector<int>& v) const {
    auto it = index[m].find(v);
    if (it == index[m].end())
      throw StructuralError("DeltaComplex: unknown simplex");
    return it->second;
  }
};

inline DeltaComplex delta_complex(int dim, std::size_t trunc) {
  DeltaComplex d;
  d.dim = dim;
  d.trunc = trunc;
  d.simplices.resize(trunc + 1);
  d.index.resize(trunc + 1);
  for (std::size_t m = 0; m <= trunc; ++m) {
    d.simplices[m] = monotone_maps(static_cast<int>(m), dim);
    for (std::size_t s = 0; s < d.simplices[m].size(); ++s)
      d.index[m].emplace(d.simplices[m][s], s);
  }
  return d;
}

/// Value-level face: drop entry i.
inline std::vector<int> drop_entry(const std::vector<int>& v, std::size_t i) {
  std::vector<int> out;
  out.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

/// Value-level degeneracy: duplicate entry i.
inline std::vector<int> dup_entry(const std::vector<int>& v, std::size_t i) {
  std::vector<int> out;
  out.reserve(v.size() + 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(v[k]);
    if (k == i) out.push_back(v[k]);
  }
  return out;
}

inline SimplicialSet sset_delta(int dim, std::size_t trunc) {
  DeltaComplex d = delta_complex(dim, trunc);
  SimplicialSet k;
  k.name = "Delta[" + std::to_string(dim) + "]";
  k.trunc = trunc;
  k.level_sizes.resize(trunc + 1);
  k.faces.resize(trunc + 1);
  k.degens.resize(trunc + 1);
  for (std::size_t m = 0; m <= trunc; ++m) k.level_sizes[m] = d.simplices[m].size();
  for (std::size_t m = 1; m <= trunc; ++m) {
    k.faces[m].resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      k.faces[m][i].resize(d.simplices[m].size());
      for (std::size_t s = 0; s < d.simplices[m].size(); ++s)
        k.faces[m][i][s] = d.at(m - 1, drop_entry(d.simplices[m][s], i));
    }
  }
  for (std::size_t m = 0; m < trunc; ++m) {
    k.degens[m].resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      k.degens[m][i].resize(d.simplices[m].size());
      for (std::size_t s = 0; s < d.simplices[m].size(); ++s)
        k.degens[m][i][s] = d.at(m + 1, dup_entry(d.simplices[m][s], i));
    }
  }
  return k;
}

inline SimplicialSet sset_delta0(std::size_t trunc) { return sset_delta(0, trunc); }
inline SimplicialSet sset_delta1(std::size_t trunc) { return sset_delta(1, trunc); }

/// Discrete simplicial set on `points` vertices: everything above level 0 is
/// degenerate.
inline SimplicialSet sset_discrete(std::size_t points, std::size_t trunc) {
  SimplicialSet k;
  k.name = "discrete[" + std::to_string(points) + "]";
  k.trunc = trunc;
  k.level_sizes.assign(trunc + 1, points);
  k.faces.resize(trunc + 1);
  k.degens.resize(trunc + 1);
  std::vector<std::size_t> id(points);
  for (std::size_t p = 0; p < points; ++p) id[p] = p;
  for (std::size_t m = 1; m <= trunc; ++m) k.faces[m].assign(m + 1, id);
  for (std::size_t m = 0; m < trunc; ++m) k.degens[m].assign(m + 1, id);
  return k;
}

/// Indices of the two constant 1-jump simplices of Delta[1] at each level:
/// endpoint(level, 0) is the all-zeros simplex, endpoint(level, 1) all-ones.
inline std::size_t delta1_endpoint(const DeltaComplex& d1, std::size_t level, int e) {
  std::vector<int> v(level + 1, e);
  return d1.at(level, v);
}

}  // namespace tgmod

#endif  // TGMOD_SSET_HPP
