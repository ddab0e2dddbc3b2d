#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "helly/complex.hpp"
#include "helly/homology.hpp"
#include "helly/random.hpp"

namespace helly {

enum class Theorem { PropA, ThmB, Helly, Sigma, Breen };

std::string to_string(Theorem t);
// "prop-a", "thm-b", "helly", "sigma", "breen"; ContractViolation otherwise.
Theorem parse_theorem(const std::string& tag);

enum class SetKind { Intersection, Union };
enum class EntryStatus { Pass, Fail, Vacuous };

std::string to_string(SetKind k);
std::string to_string(EntryStatus s);

// One required vanishing H_degree(X) = 0, X the intersection or union of
// the subfamily.
struct LedgerEntry {
  std::vector<int> subfamily;  // 0-based member indices, increasing
  SetKind kind = SetKind::Intersection;
  int degree = 0;
  // Observed b_degree for degree >= 0; unset when vacuous or degree -1.
  std::optional<std::int64_t> observed_betti;
  // Observed nonemptiness, set for degree -1 entries only.
  std::optional<bool> observed_nonempty;
  EntryStatus status = EntryStatus::Vacuous;

  int size() const { return static_cast<int>(subfamily.size()); }
};

struct HypothesisLedger {
  std::vector<LedgerEntry> entries;
  std::optional<int> lambda;
  std::optional<int> d;

  std::size_t failures() const;
};

struct Verdict {
  Theorem theorem = Theorem::Helly;
  HypothesisLedger hypotheses;
  bool hypotheses_hold = false;
  // Always evaluated by the verifiers below, so sweeps can also count
  // failed-hypothesis / failed-conclusion instances.
  std::optional<bool> conclusion_holds;
  // Human-readable form of the conclusion that was checked.
  std::string conclusion;
  // Betti evidence for the conclusion set (⋃F or ⋂F).
  BettiVector witness;

  // Hypotheses satisfied but conclusion false: a counterexample to the
  // statement, i.e. a bug somewhere.
  bool violated() const { return hypotheses_hold && conclusion_holds == false; }
};

Verdict verify_prop_a(const SubcomplexFamily& family, int lambda,
                      Field field = Field::GF2);
Verdict verify_theorem_b(const SubcomplexFamily& family, int lambda,
                         Field field = Field::GF2);
Verdict verify_helly(const SubcomplexFamily& family, int d, Field field = Field::GF2);
Verdict verify_sigma(const SubcomplexFamily& family, Field field = Field::GF2);
Verdict verify_breen(const SubcomplexFamily& family, int d, Field field = Field::GF2);

struct VerifyParams {
  int d = 2;
  int lambda = 0;
  Field field = Field::GF2;
};

Verdict verify(Theorem theorem, const SubcomplexFamily& family, const VerifyParams& p);

// Calls f(indices) for every size-j subset of {0..m-1} in lexicographic order.
void for_each_subset(int m, int j, const std::function<void(const std::vector<int>&)>& f);

// ---------------------------------------------------------------------------
// Instance generator.

// Standard triangulation of the n x n unit-square grid, each square cut along
// its (x,y)-(x+1,y+1) diagonal; vertex (x,y) has id y*(n+1)+x and the
// complex declares embedding_dim 2.
class GridTriangulation {
 public:
  explicit GridTriangulation(int n);

  int n() const { return n_; }
  const ComplexPtr& complex() const { return complex_; }
  std::size_t triangle_count() const { return triangles_.size(); }
  const std::vector<int>& triangle(std::size_t t) const { return triangles_[t]; }
  // Triangles sharing an edge with t.
  const std::vector<std::uint32_t>& neighbors(std::size_t t) const { return neighbors_[t]; }

  // Face closure of a random edge-connected blob: a uniformly random seed
  // triangle, then `growth_steps` accretions, each attaching a random
  // edge-neighbour of a random blob triangle.
  Subcomplex random_blob(int growth_steps, Rng& rng) const;

  Subcomplex blob_from_triangles(const std::vector<std::size_t>& triangles) const;

 private:
  int n_;
  ComplexPtr complex_;
  std::vector<std::vector<int>> triangles_;
  std::vector<std::vector<std::uint32_t>> neighbors_;
};

// Deterministic for fixed seed. grid_n >= 2 and m >= 1, ContractViolation
// otherwise.
SubcomplexFamily random_family(int grid_n, int m, int growth_steps, std::uint64_t seed);
SubcomplexFamily random_family(const GridTriangulation& grid, int m, int growth_steps,
                               std::uint64_t seed);

}  // namespace helly
