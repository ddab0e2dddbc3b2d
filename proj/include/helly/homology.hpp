#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "helly/complex.hpp"

namespace helly {

enum class Field { GF2, Rationals };

std::string to_string(Field f);
// Accepts "gf2" and "q" (also "rationals"); MalformedInput otherwise.
Field parse_field(const std::string& tag);

// Reduced homology of a (shared-ambient) space. `nonempty` carries the
// H_{-1} convention: H_{-1}(U) = 0 exactly when U is nonempty, so the empty
// set is the only space with a nonvanishing degree -1 group, and all its
// numeric entries are zero.
struct BettiVector {
  bool nonempty = false;
  // betti[k] = reduced b_k for 0 <= k <= dimension.
  std::vector<std::int64_t> betti;
  Field field = Field::GF2;

  // b_k for any k >= -1; degree -1 is 1 for the empty set and 0 otherwise.
  std::int64_t at(int k) const;
  // True iff \tilde H_k = 0 (degree -1 reads as nonemptiness; below -1 is
  // always zero).
  bool vanishes(int k) const { return at(k) == 0; }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Integer boundary matrix of the augmented chain complex, stored by column.
// For k >= 1 rows are the (k-1)-simplices and columns the k-simplices of the
// space, in canonical order, with alternating-sign incidence. For k = 0 the
// single row is the augmentation (every vertex maps to +1).
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // columns[c] = sorted (row, coefficient) pairs.
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

BoundaryMatrix boundary_matrix(const Subcomplex& space, int k);
BoundaryMatrix boundary_matrix(const SimplicialComplex& space, int k);

// Exact rank over the field: GF2 by bit-packed column elimination,
// Rationals by sparse column elimination over big-integer fractions.
std::size_t rank(const BoundaryMatrix& m, Field field);

BettiVector reduced_betti(const Subcomplex& space, Field field = Field::GF2);
BettiVector reduced_betti(const SimplicialComplex& space, Field field = Field::GF2);

// Nonempty and b_k = 0 for 0 <= k <= n. n = -1 is plain nonemptiness.
bool is_n_acyclic(const BettiVector& b, int n);
bool is_n_acyclic(const Subcomplex& space, int n, Field field = Field::GF2);
// n-acyclic for every n.
bool is_acyclic(const BettiVector& b);

// Sum (-1)^k c_k over the simplices of the space (0 for the empty space).
std::int64_t euler_characteristic(const Subcomplex& space);
// Sum over k >= -1 of (-1)^k b_k: -1 for the empty set.
std::int64_t reduced_euler_characteristic(const BettiVector& b);

struct MvRankCheck {
  int degree = 0;
  std::int64_t union_betti = 0;
  std::int64_t bound = 0;  // b_k(A) + b_k(B) + b_{k-1}(A ∩ B)
  bool holds = true;
};

struct MvReport {
  BettiVector a, b, intersection, united;
  std::int64_t chi_union = 0;
  std::int64_t chi_a = 0;
  std::int64_t chi_b = 0;
  std::int64_t chi_intersection = 0;
  bool euler_identity_holds = false;
  std::vector<MvRankCheck> rank_checks;
  bool rank_inequalities_hold = false;
  bool holds() const { return euler_identity_holds && rank_inequalities_hold; }
};

// Mayer-Vietoris consistency for two subcomplexes of one ambient.
MvReport mv_consistency(const Subcomplex& a, const Subcomplex& b,
                        Field field = Field::GF2);

}  // namespace helly
