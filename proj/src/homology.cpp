#include "helly/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "helly/errors.hpp"

namespace helly {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Row numbering for the (k-1)-simplices of a space.
struct LocalIndex {
  std::vector<std::uint32_t> local;  // ambient index -> local row
  std::size_t count = 0;
};

template <class Contains>
BoundaryMatrix make_boundary(const SimplicialComplex& ambient, int k, Contains contains) {
  BoundaryMatrix m;
  if (k < 0) return m;
  if (k == 0) {
    m.rows = 1;
    for (std::size_t i = ambient.dim_begin(0); i < ambient.dim_end(0); ++i) {
      if (contains(i)) m.columns.push_back({{0U, 1}});
    }
    m.cols = m.columns.size();
    return m;
  }
  std::unordered_map<std::size_t, std::uint32_t> row_of;
  for (std::size_t i = ambient.dim_begin(k - 1); i < ambient.dim_end(k - 1); ++i) {
    if (contains(i)) row_of.emplace(i, static_cast<std::uint32_t>(m.rows++));
  }
  for (std::size_t i = ambient.dim_begin(k); i < ambient.dim_end(k); ++i) {
    if (!contains(i)) continue;
    std::vector<std::pair<std::uint32_t, int>> col;
    const auto facets = ambient.facets(i);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      col.emplace_back(row_of.at(facets[f]), (f % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  m.cols = m.columns.size();
  return m;
}

std::size_t rank_gf2(const BoundaryMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_col(m.rows);
  std::size_t r = 0;
  std::vector<std::uint64_t> col(words);
  for (const auto& entries : m.columns) {
    std::fill(col.begin(), col.end(), 0);
    for (const auto& [row, coef] : entries) {
      if (coef % 2 != 0) col[row >> 6] ^= std::uint64_t{1} << (row & 63);
    }
    for (;;) {
      std::size_t w = words;
      while (w > 0 && col[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t low = (w - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w - 1]));
      auto& pivot = pivot_col[low];
      if (pivot.empty()) {
        pivot = col;
        ++r;
        break;
      }
      for (std::size_t i = 0; i < w; ++i) col[i] ^= pivot[i];
    }
  }
  return r;
}

using SparseColumn = std::vector<std::pair<std::uint32_t, Rational>>;

// col -= factor * pivot, both sorted by row.
void axpy(SparseColumn& col, const Rational& factor, const SparseColumn& pivot) {
  SparseColumn out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.push_back(std::move(col[i++]));
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = col[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  col = std::move(out);
}

std::size_t rank_rational(const BoundaryMatrix& m) {
  std::vector<SparseColumn> pivot_col(m.rows);
  std::size_t r = 0;
  for (const auto& entries : m.columns) {
    SparseColumn col;
    col.reserve(entries.size());
    for (const auto& [row, coef] : entries) {
      if (coef != 0) col.emplace_back(row, Rational(coef));
    }
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      auto& pivot = pivot_col[low];
      if (pivot.empty()) {
        pivot = std::move(col);
        ++r;
        break;
      }
      const Rational factor = col.back().second / pivot.back().second;
      axpy(col, factor, pivot);
    }
  }
  return r;
}

template <class Contains>
BettiVector betti_of(const SimplicialComplex& ambient, Field field, Contains contains) {
  BettiVector out;
  out.field = field;
  int top = -1;
  std::vector<std::int64_t> counts;
  for (int k = 0; k <= ambient.dimension(); ++k) {
    std::int64_t c = 0;
    for (std::size_t i = ambient.dim_begin(k); i < ambient.dim_end(k); ++i) {
      c += contains(i) ? 1 : 0;
    }
    if (c == 0) break;
    counts.push_back(c);
    top = k;
  }
  out.nonempty = top >= 0;
  if (!out.nonempty) return out;
  // ranks[k] = rank of the boundary d_k : C_k -> C_{k-1}; ranks[top+1] = 0.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int k = 0; k <= top; ++k) {
    ranks[static_cast<std::size_t>(k)] =
        static_cast<std::int64_t>(rank(make_boundary(ambient, k, contains), field));
  }
  out.betti.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out.betti[kk] = counts[kk] - ranks[kk] - ranks[kk + 1];
  }
  return out;
}

}  // namespace

std::string to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

Field parse_field(const std::string& tag) {
  if (tag == "gf2" || tag == "GF2") return Field::GF2;
  if (tag == "q" || tag == "Q" || tag == "rationals") return Field::Rationals;
  throw MalformedInput("unknown coefficient field '" + tag + "' (expected gf2 or q)");
}

std::int64_t BettiVector::at(int k) const {
  if (k < -1) return 0;
  if (k == -1) return nonempty ? 0 : 1;
  if (static_cast<std::size_t>(k) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(k)];
}

BoundaryMatrix boundary_matrix(const Subcomplex& space, int k) {
  return make_boundary(space.parent(), k, [&](std::size_t i) { return space.contains(i); });
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& space, int k) {
  return make_boundary(space, k, [](std::size_t) { return true; });
}

std::size_t rank(const BoundaryMatrix& m, Field field) {
  return field == Field::GF2 ? rank_gf2(m) : rank_rational(m);
}

BettiVector reduced_betti(const Subcomplex& space, Field field) {
  return betti_of(space.parent(), field, [&](std::size_t i) { return space.contains(i); });
}

BettiVector reduced_betti(const SimplicialComplex& space, Field field) {
  return betti_of(space, field, [](std::size_t) { return true; });
}

bool is_n_acyclic(const BettiVector& b, int n) {
  if (!b.nonempty) return false;
  for (int k = 0; k <= n; ++k) {
    if (b.at(k) != 0) return false;
  }
  return true;
}

bool is_n_acyclic(const Subcomplex& space, int n, Field field) {
  return is_n_acyclic(reduced_betti(space, field), n);
}

bool is_acyclic(const BettiVector& b) {
  return is_n_acyclic(b, static_cast<int>(b.betti.size()));
}

std::int64_t euler_characteristic(const Subcomplex& space) {
  std::int64_t chi = 0;
  for (int k = 0; k <= space.parent().dimension(); ++k) {
    const auto c = static_cast<std::int64_t>(space.count(k));
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

std::int64_t reduced_euler_characteristic(const BettiVector& b) {
  std::int64_t chi = -b.at(-1);
  for (std::size_t k = 0; k < b.betti.size(); ++k) {
    chi += (k % 2 == 0) ? b.betti[k] : -b.betti[k];
  }
  return chi;
}

MvReport mv_consistency(const Subcomplex& a, const Subcomplex& b, Field field) {
  if (a.parent_ptr() != b.parent_ptr() && !(a.parent() == b.parent())) {
    throw ContractViolation("mv_consistency needs subcomplexes of one ambient");
  }
  MvReport r;
  const Subcomplex both = a.intersect(b);
  const Subcomplex either = a.unite(b);
  r.a = reduced_betti(a, field);
  r.b = reduced_betti(b, field);
  r.intersection = reduced_betti(both, field);
  r.united = reduced_betti(either, field);
  r.chi_a = reduced_euler_characteristic(r.a);
  r.chi_b = reduced_euler_characteristic(r.b);
  r.chi_intersection = reduced_euler_characteristic(r.intersection);
  r.chi_union = reduced_euler_characteristic(r.united);
  r.euler_identity_holds = r.chi_union == r.chi_a + r.chi_b - r.chi_intersection;

  r.rank_inequalities_hold = true;
  const int top = std::max(a.parent().dimension(), 0) + 1;
  for (int k = 0; k <= top; ++k) {
    MvRankCheck c;
    c.degree = k;
    c.union_betti = r.united.at(k);
    c.bound = r.a.at(k) + r.b.at(k) + r.intersection.at(k - 1);
    c.holds = c.union_betti <= c.bound;
    r.rank_inequalities_hold = r.rank_inequalities_hold && c.holds;
    r.rank_checks.push_back(c);
  }
  return r;
}

}  // namespace helly
