#pragma once

#include <string>
#include <vector>

#include "helly/complex.hpp"
#include "helly/homology.hpp"

namespace known {

using Facets = std::vector<std::vector<int>>;

struct Space {
  std::string name;
  Facets facets;
  // Classical reduced Betti numbers b_0..b_dim.
  std::vector<std::int64_t> gf2;
  std::vector<std::int64_t> q;
};

inline Facets torus7() {
  Facets f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

inline Facets rp2_6() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

inline Facets annulus() {
  // Inner triangle 0,1,2 and outer triangle 3,4,5.
  return {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}};
}

inline std::vector<Space> all() {
  return {
      {"empty", {}, {}, {}},
      {"point", {{0}}, {0}, {0}},
      {"two points", {{0}, {1}}, {1}, {1}},
      {"triangle boundary", {{0, 1}, {1, 2}, {0, 2}}, {0, 1}, {0, 1}},
      {"solid triangle", {{0, 1, 2}}, {0, 0, 0}, {0, 0, 0}},
      {"tetrahedron boundary", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {0, 0, 1}, {0, 0, 1}},
      {"annulus", annulus(), {0, 1, 0}, {0, 1, 0}},
      {"torus", torus7(), {0, 2, 1}, {0, 2, 1}},
      {"projective plane", rp2_6(), {0, 1, 1}, {0, 0, 0}},
  };
}

}  // namespace known
