#include "helly/transversal_verify.hpp"

#include <numeric>

#include "helly/engine.hpp"
#include "helly/errors.hpp"

namespace helly {

std::string to_string(PlaneStatement s) {
  switch (s) {
    case PlaneStatement::SingleSet: return "lemma-311";
    case PlaneStatement::DisjointPair: return "lemma-312";
    case PlaneStatement::TripleWithDisjointPair: return "lemma-313";
    case PlaneStatement::Semipairwise: return "thm-321";
  }
  return "unknown";
}

PlaneStatement parse_plane_statement(const std::string& tag) {
  if (tag == "lemma-311") return PlaneStatement::SingleSet;
  if (tag == "lemma-312") return PlaneStatement::DisjointPair;
  if (tag == "lemma-313") return PlaneStatement::TripleWithDisjointPair;
  if (tag == "thm-321") return PlaneStatement::Semipairwise;
  throw ContractViolation("unknown plane statement '" + tag + "'");
}

std::optional<std::pair<int, int>> grassmannian_betti(int n, int d) {
  if (n == 1 && d == 2) return std::pair{0, 1};
  if (n == 0 && d == 1) return std::pair{0, 0};
  return std::nullopt;
}

namespace {

void require_size(const PolygonFamily& f, std::size_t m, const char* what) {
  if (f.size() != m) {
    throw ContractViolation(std::string(what) + " needs exactly " + std::to_string(m) +
                            " polygons, got " + std::to_string(f.size()));
  }
}

void require_disjoint(const PolygonFamily& f, std::size_t i, std::size_t j) {
  if (!interiors_disjoint(f, i, j)) {
    throw ContractViolation("members " + f.label(i) + " and " + f.label(j) +
                            " must have disjoint interiors");
  }
}

TransversalCheck disjoint_check(std::vector<int> members) {
  return {"interiors disjoint", std::move(members), true, 0, false};
}

std::vector<int> all_members(const PolygonFamily& f) {
  std::vector<int> v(f.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TransversalVerdict verify_single_set(const PolygonFamily& family) {
  require_size(family, 1, "single-set check");
  TransversalVerdict v;
  v.statement = PlaneStatement::SingleSet;
  v.hypotheses_hold = true;
  v.summary = transversal_components(family);
  v.expected_betti = grassmannian_betti(1, 2);
  v.conclusion = "T_1 is a full circle: (b0, b1) = (0, 1)";
  v.conclusion_holds = v.summary.full_circle && v.summary.b0() == v.expected_betti->first &&
                       v.summary.b1() == v.expected_betti->second;
  return v;
}

TransversalVerdict verify_disjoint_pair(const PolygonFamily& family) {
  require_size(family, 2, "disjoint-pair check");
  require_disjoint(family, 0, 1);
  TransversalVerdict v;
  v.statement = PlaneStatement::DisjointPair;
  v.hypotheses.push_back(disjoint_check({0, 1}));
  v.hypotheses_hold = true;
  v.summary = transversal_components(family);
  v.expected_betti = grassmannian_betti(0, 1);
  v.conclusion = "T_1 is one arc, not the full circle: (b0, b1) = (0, 0)";
  v.conclusion_holds = v.summary.component_count == 1 && !v.summary.full_circle;
  return v;
}

TransversalVerdict verify_triple_with_disjoint_pair(const PolygonFamily& family) {
  require_size(family, 3, "triple check");
  require_disjoint(family, 0, 1);
  TransversalVerdict v;
  v.statement = PlaneStatement::TripleWithDisjointPair;
  v.hypotheses.push_back(disjoint_check({0, 1}));
  v.hypotheses_hold = true;
  v.summary = transversal_components(family);
  v.conclusion = "H_1(T_1) = 0: not the full circle";
  v.conclusion_holds = !v.summary.full_circle;
  return v;
}

TransversalVerdict verify_semipairwise(const PolygonFamily& family) {
  const int m = static_cast<int>(family.size());
  if (m < 6) {
    throw ContractViolation("semipairwise transversal check needs m >= 6, got " +
                            std::to_string(m));
  }
  TransversalVerdict v;
  v.statement = PlaneStatement::Semipairwise;

  TransversalCheck semi;
  semi.requirement = "semipairwise disjoint";
  semi.subfamily = all_members(family);
  semi.passed = disjointness_class(family) != Disjointness::Neither;
  v.hypotheses.push_back(semi);

  const auto check = [&](int j, bool exact_one) {
    for_each_subset(m, j, [&](const std::vector<int>& idx) {
      const ComponentSummary s = transversal_components(family.subfamily(idx));
      TransversalCheck c;
      c.requirement = exact_one ? "component_count == 1" : "component_count >= 1";
      c.subfamily = idx;
      c.component_count = s.component_count;
      c.full_circle = s.full_circle;
      c.passed = exact_one ? s.component_count == 1 : s.component_count >= 1;
      v.hypotheses.push_back(std::move(c));
    });
  };
  check(5, false);
  check(4, true);

  v.hypotheses_hold = true;
  for (const auto& c : v.hypotheses) v.hypotheses_hold = v.hypotheses_hold && c.passed;
  v.summary = transversal_components(family);
  v.conclusion = "T_1 nonempty: component_count >= 1";
  v.conclusion_holds = v.summary.nonempty();
  return v;
}

TransversalVerdict verify(PlaneStatement statement, const PolygonFamily& family) {
  switch (statement) {
    case PlaneStatement::SingleSet: return verify_single_set(family);
    case PlaneStatement::DisjointPair: return verify_disjoint_pair(family);
    case PlaneStatement::TripleWithDisjointPair: return verify_triple_with_disjoint_pair(family);
    case PlaneStatement::Semipairwise: return verify_semipairwise(family);
  }
  throw ContractViolation("unknown plane statement");
}

}  // namespace helly
