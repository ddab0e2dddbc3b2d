#include <algorithm>
#include <map>
#include <utility>

#include "helly/engine.hpp"
#include "helly/errors.hpp"

namespace helly {

GridTriangulation::GridTriangulation(int n) : n_(n) {
  if (n < 2) throw ContractViolation("grid size must be >= 2");
  auto vid = [n](int x, int y) { return y * (n + 1) + x; };
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      triangles_.push_back({vid(x, y), vid(x + 1, y), vid(x + 1, y + 1)});
      triangles_.push_back({vid(x, y), vid(x + 1, y + 1), vid(x, y + 1)});
    }
  }
  for (auto& t : triangles_) std::sort(t.begin(), t.end());
  complex_ = build_complex(triangles_, 2);

  std::map<std::pair<int, int>, std::vector<std::uint32_t>> by_edge;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& v = triangles_[t];
    for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}}) {
      by_edge[{a, b}].push_back(static_cast<std::uint32_t>(t));
    }
  }
  neighbors_.resize(triangles_.size());
  for (const auto& [edge, ts] : by_edge) {
    if (ts.size() != 2) continue;
    neighbors_[ts[0]].push_back(ts[1]);
    neighbors_[ts[1]].push_back(ts[0]);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

Subcomplex GridTriangulation::blob_from_triangles(const std::vector<std::size_t>& triangles) const {
  std::vector<std::vector<int>> maximal;
  maximal.reserve(triangles.size());
  for (auto t : triangles) maximal.push_back(triangles_.at(t));
  return Subcomplex::from_maximal(complex_, maximal);
}

Subcomplex GridTriangulation::random_blob(int growth_steps, Rng& rng) const {
  std::vector<std::size_t> blob{static_cast<std::size_t>(uniform_below(rng, triangles_.size()))};
  std::vector<bool> in(triangles_.size(), false);
  in[blob[0]] = true;
  for (int step = 0; step < growth_steps; ++step) {
    const std::size_t from = blob[uniform_below(rng, blob.size())];
    const auto& nb = neighbors_[from];
    const std::size_t to = nb[uniform_below(rng, nb.size())];
    if (!in[to]) {
      in[to] = true;
      blob.push_back(to);
    }
  }
  std::sort(blob.begin(), blob.end());
  return blob_from_triangles(blob);
}

SubcomplexFamily random_family(const GridTriangulation& grid, int m, int growth_steps,
                               std::uint64_t seed) {
  if (m < 1) throw ContractViolation("family size must be >= 1");
  if (growth_steps < 0) throw ContractViolation("growth_steps must be >= 0");
  Rng rng(seed);
  std::vector<Subcomplex> members;
  members.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) members.push_back(grid.random_blob(growth_steps, rng));
  return SubcomplexFamily(grid.complex(), std::move(members));
}

SubcomplexFamily random_family(int grid_n, int m, int growth_steps, std::uint64_t seed) {
  return random_family(GridTriangulation(grid_n), m, growth_steps, seed);
}

}  // namespace helly
