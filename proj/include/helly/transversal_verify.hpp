#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helly/polygon.hpp"
#include "helly/transversal.hpp"

namespace helly {

// Plane statements about transversal lines, by CLI tag:
//   lemma-311  one open convex set: T_1 is a circle (G(1,2))
//   lemma-312  two disjoint sets: T_1 is contractible (G(0,1))
//   lemma-313  three sets, first two disjoint: H_1(T_1) = 0
//   thm-321    semipairwise disjoint, m >= 6, local connectivity => T_1 nonempty
enum class PlaneStatement { SingleSet, DisjointPair, TripleWithDisjointPair, Semipairwise };

std::string to_string(PlaneStatement s);
// ContractViolation on an unknown tag.
PlaneStatement parse_plane_statement(const std::string& tag);

// Expected reduced (b0, b1) of the Grassmannian G(n, d) for the cases the
// plane verifiers use: G(1,2) is a circle, G(0,1) a point.
std::optional<std::pair<int, int>> grassmannian_betti(int n, int d);

struct TransversalCheck {
  std::string requirement;     // e.g. "component_count >= 1"
  std::vector<int> subfamily;  // member indices the check was evaluated on
  bool passed = false;
  int component_count = 0;
  bool full_circle = false;
};

struct TransversalVerdict {
  PlaneStatement statement = PlaneStatement::SingleSet;
  std::vector<TransversalCheck> hypotheses;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  std::string conclusion;
  std::optional<std::pair<int, int>> expected_betti;
  ComponentSummary summary;  // T_1 of the whole family

  bool violated() const { return hypotheses_hold && !conclusion_holds; }
};

// Exactly one member.
TransversalVerdict verify_single_set(const PolygonFamily& family);
// Exactly two members; ContractViolation unless their interiors are disjoint.
TransversalVerdict verify_disjoint_pair(const PolygonFamily& family);
// Exactly three members; ContractViolation unless members 0 and 1 are disjoint.
TransversalVerdict verify_triple_with_disjoint_pair(const PolygonFamily& family);
// m >= 6, ContractViolation otherwise. Every hypothesis check is evaluated
// (no short-circuit) so the ledger names each failing subfamily.
TransversalVerdict verify_semipairwise(const PolygonFamily& family);

TransversalVerdict verify(PlaneStatement statement, const PolygonFamily& family);

}  // namespace helly
