#include "helly/engine.hpp"

#include <algorithm>
#include <numeric>

#include "helly/errors.hpp"

namespace helly {

namespace {

// Checks H_degree(space) = 0 and records the entry.
LedgerEntry check(const Subcomplex& space, const std::vector<int>& subfamily, SetKind kind,
                  int degree, Field field) {
  LedgerEntry e;
  e.subfamily = subfamily;
  e.kind = kind;
  e.degree = degree;
  if (degree < -1 || degree > space.parent().dimension()) {
    e.status = EntryStatus::Vacuous;
    return e;
  }
  if (degree == -1) {
    e.observed_nonempty = !space.empty();
    e.status = *e.observed_nonempty ? EntryStatus::Pass : EntryStatus::Fail;
    return e;
  }
  const BettiVector b = reduced_betti(space, field);
  e.observed_betti = b.at(degree);
  e.status = *e.observed_betti == 0 ? EntryStatus::Pass : EntryStatus::Fail;
  return e;
}

// Ledger entries for every subfamily of size j in [j_lo, j_hi], degree
// degree_of(j), over intersections or unions.
template <class DegreeOf>
void check_sizes(const SubcomplexFamily& family, int j_lo, int j_hi, SetKind kind,
                 DegreeOf degree_of, Field field, HypothesisLedger& ledger) {
  const int m = static_cast<int>(family.size());
  for (int j = j_lo; j <= std::min(j_hi, m); ++j) {
    for_each_subset(m, j, [&](const std::vector<int>& idx) {
      const int degree = degree_of(j);
      // Skip the homology work for vacuous degrees.
      if (degree < -1 || degree > family.ambient().dimension()) {
        LedgerEntry e;
        e.subfamily = idx;
        e.kind = kind;
        e.degree = degree;
        ledger.entries.push_back(std::move(e));
        return;
      }
      const Subcomplex space = kind == SetKind::Intersection ? intersect_members(family, idx)
                                                             : union_members(family, idx);
      ledger.entries.push_back(check(space, idx, kind, degree, field));
    });
  }
}

bool all_pass(const HypothesisLedger& ledger) {
  return std::none_of(ledger.entries.begin(), ledger.entries.end(),
                      [](const LedgerEntry& e) { return e.status == EntryStatus::Fail; });
}

std::vector<int> all_indices(const SubcomplexFamily& family) {
  std::vector<int> idx(family.size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

void require_family_size(const SubcomplexFamily& family, std::size_t min, const char* what) {
  if (family.size() < min) {
    throw ContractViolation(std::string(what) + " needs a family of size >= " +
                            std::to_string(min));
  }
}

void require_d(const SubcomplexFamily& family, int d) {
  if (d <= 0) throw ContractViolation("d must be a positive integer");
  if (family.ambient().embedding_dim() > d) {
    throw ContractViolation("ambient declares embedding_dim " +
                            std::to_string(family.ambient().embedding_dim()) +
                            " > d = " + std::to_string(d));
  }
}

void require_lambda(int lambda) {
  if (lambda < 0) throw ContractViolation("lambda must be >= 0");
}

std::string h(int degree, const char* set) {
  return "H_" + std::to_string(degree) + "(" + set + ")=0";
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::PropA: return "prop-a";
    case Theorem::ThmB: return "thm-b";
    case Theorem::Helly: return "helly";
    case Theorem::Sigma: return "sigma";
    case Theorem::Breen: return "breen";
  }
  return "?";
}

Theorem parse_theorem(const std::string& tag) {
  for (Theorem t : {Theorem::PropA, Theorem::ThmB, Theorem::Helly, Theorem::Sigma,
                    Theorem::Breen}) {
    if (to_string(t) == tag) return t;
  }
  throw ContractViolation("unknown theorem tag '" + tag + "'");
}

std::string to_string(SetKind k) { return k == SetKind::Intersection ? "intersection" : "union"; }

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::Pass: return "pass";
    case EntryStatus::Fail: return "fail";
    case EntryStatus::Vacuous: return "vacuous";
  }
  return "?";
}

std::size_t HypothesisLedger::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(),
      [](const LedgerEntry& e) { return e.status == EntryStatus::Fail; }));
}

void for_each_subset(int m, int j, const std::function<void(const std::vector<int>&)>& f) {
  if (j <= 0 || j > m) return;
  std::vector<int> idx(static_cast<std::size_t>(j));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    int i = j - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - j + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < j; ++k) {
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
}

Verdict verify_prop_a(const SubcomplexFamily& family, int lambda, Field field) {
  require_family_size(family, 2, "Proposition A");
  require_lambda(lambda);
  const int m = static_cast<int>(family.size());
  Verdict v;
  v.theorem = Theorem::PropA;
  v.hypotheses.lambda = lambda;
  check_sizes(family, 1, m, SetKind::Intersection,
              [&](int j) { return m - 1 - j + lambda; }, field, v.hypotheses);
  v.hypotheses_hold = all_pass(v.hypotheses);

  const int degree = m - 2 + lambda;
  v.witness = reduced_betti(union_members(family, all_indices(family)), field);
  v.conclusion = h(degree, "union F");
  v.conclusion_holds = v.witness.vanishes(degree);
  return v;
}

Verdict verify_theorem_b(const SubcomplexFamily& family, int lambda, Field field) {
  require_family_size(family, 2, "Theorem B");
  require_lambda(lambda);
  const int m = static_cast<int>(family.size());
  Verdict v;
  v.theorem = Theorem::ThmB;
  v.hypotheses.lambda = lambda;
  const auto all = all_indices(family);
  v.hypotheses.entries.push_back(check(union_members(family, all), all, SetKind::Union,
                                       m - 2 + lambda, field));
  check_sizes(family, 1, m - 1, SetKind::Intersection,
              [&](int j) { return m - 2 - j + lambda; }, field, v.hypotheses);
  v.hypotheses_hold = all_pass(v.hypotheses);

  v.witness = reduced_betti(intersect_members(family, all), field);
  v.conclusion = h(lambda - 1, "intersection F");
  v.conclusion_holds = v.witness.vanishes(lambda - 1);
  return v;
}

Verdict verify_helly(const SubcomplexFamily& family, int d, Field field) {
  require_d(family, d);
  Verdict v;
  v.theorem = Theorem::Helly;
  v.hypotheses.d = d;
  check_sizes(family, 1, d + 1, SetKind::Intersection, [&](int j) { return d - j; }, field,
              v.hypotheses);
  v.hypotheses_hold = all_pass(v.hypotheses);

  v.witness = reduced_betti(intersect_members(family, all_indices(family)), field);
  v.conclusion = "intersection F nonempty and acyclic";
  v.conclusion_holds = is_acyclic(v.witness);
  return v;
}

Verdict verify_sigma(const SubcomplexFamily& family, Field field) {
  require_family_size(family, 2, "Theorem Sigma");
  const int m = static_cast<int>(family.size());
  Verdict v;
  v.theorem = Theorem::Sigma;
  check_sizes(family, 1, m, SetKind::Union, [](int j) { return j - 2; }, field, v.hypotheses);
  v.hypotheses_hold = all_pass(v.hypotheses);

  v.witness = reduced_betti(intersect_members(family, all_indices(family)), field);
  v.conclusion = "intersection F nonempty";
  v.conclusion_holds = v.witness.nonempty;
  return v;
}

Verdict verify_breen(const SubcomplexFamily& family, int d, Field field) {
  require_d(family, d);
  Verdict v;
  v.theorem = Theorem::Breen;
  v.hypotheses.d = d;
  check_sizes(family, 1, d + 1, SetKind::Union, [](int j) { return j - 2; }, field,
              v.hypotheses);
  v.hypotheses_hold = all_pass(v.hypotheses);

  v.witness = reduced_betti(intersect_members(family, all_indices(family)), field);
  v.conclusion = "intersection F nonempty";
  v.conclusion_holds = v.witness.nonempty;
  return v;
}

Verdict verify(Theorem theorem, const SubcomplexFamily& family, const VerifyParams& p) {
  switch (theorem) {
    case Theorem::PropA: return verify_prop_a(family, p.lambda, p.field);
    case Theorem::ThmB: return verify_theorem_b(family, p.lambda, p.field);
    case Theorem::Helly: return verify_helly(family, p.d, p.field);
    case Theorem::Sigma: return verify_sigma(family, p.field);
    case Theorem::Breen: return verify_breen(family, p.d, p.field);
  }
  throw ContractViolation("unknown theorem");
}

}  // namespace helly
