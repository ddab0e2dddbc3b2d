#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace helly {

// A simplex is its strictly increasing list of vertex ids.
class Simplex {
 public:
  // Sorts the ids; throws MalformedInput on empty input, negative ids or
  // repeated vertices.
  explicit Simplex(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

  // Canonical order: by dimension first, then lexicographic.
  friend bool operator<(const Simplex& a, const Simplex& b);
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

  std::string to_string() const;

 private:
  std::vector<int> vertices_;
};

// Finite simplicial complex, stored face-closed and canonically ordered.
// Simplices of dimension k occupy the contiguous index range
// [dim_begin(k), dim_end(k)).
class SimplicialComplex {
 public:
  // Face closure of the given maximal simplices. `embedding_dim` defaults to
  // max(1, dimension()); an explicit value smaller than the dimension is a
  // MalformedInput.
  static SimplicialComplex from_maximal(
      const std::vector<std::vector<int>>& maximal_simplices,
      std::optional<int> embedding_dim = std::nullopt);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(dim_offsets_.size()) - 2; }
  int embedding_dim() const { return embedding_dim_; }

  const Simplex& simplex(std::size_t index) const { return simplices_[index]; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::optional<std::size_t> index_of(const Simplex& s) const;

  std::size_t dim_begin(int k) const;
  std::size_t dim_end(int k) const;
  std::size_t count(int k) const { return dim_end(k) - dim_begin(k); }

  // Indices of the codimension-one faces of simplex `index`, the i-th entry
  // being the face with vertex i removed (sign (-1)^i in the boundary).
  std::span<const std::uint32_t> facets(std::size_t index) const {
    return facets_[index];
  }

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_ && a.embedding_dim_ == b.embedding_dim_;
  }

 private:
  SimplicialComplex() = default;

  std::vector<Simplex> simplices_;
  std::vector<std::size_t> dim_offsets_{0};
  std::vector<std::vector<std::uint32_t>> facets_;
  int embedding_dim_ = 1;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr build_complex(const std::vector<std::vector<int>>& maximal_simplices,
                         std::optional<int> embedding_dim = std::nullopt);

// A face-closed subset of an ambient complex, held as a bitset over the
// ambient's simplex indices. Intersections and unions of face-closed sets are
// face-closed, so both are plain word-wise AND / OR.
class Subcomplex {
 public:
  static Subcomplex empty(ComplexPtr parent);
  static Subcomplex full(ComplexPtr parent);
  // Face closure of the listed simplices; each must belong to the parent
  // (ValidationError naming the first offender otherwise).
  static Subcomplex from_maximal(ComplexPtr parent,
                                 const std::vector<std::vector<int>>& maximal);
  // Exactly the listed simplices; ValidationError unless face-closed.
  static Subcomplex from_simplex_set(ComplexPtr parent,
                                     const std::vector<std::vector<int>>& simplices);

  const SimplicialComplex& parent() const { return *parent_; }
  const ComplexPtr& parent_ptr() const { return parent_; }

  bool contains(std::size_t index) const {
    return (bits_[index >> 6] >> (index & 63)) & 1U;
  }
  bool empty() const;
  std::size_t size() const;
  // Number of member simplices of dimension k.
  std::size_t count(int k) const;
  // -1 when empty.
  int dimension() const;
  std::vector<std::size_t> indices() const;
  // Member simplices, maximal ones only, in canonical order.
  std::vector<Simplex> maximal_simplices() const;

  bool is_subset_of(const Subcomplex& other) const;
  Subcomplex intersect(const Subcomplex& other) const;
  Subcomplex unite(const Subcomplex& other) const;

  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return a.bits_ == b.bits_ && (a.parent_ == b.parent_ || *a.parent_ == *b.parent_);
  }

 private:
  explicit Subcomplex(ComplexPtr parent);
  void set(std::size_t index) { bits_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void require_same_parent(const Subcomplex& other) const;

  ComplexPtr parent_;
  std::vector<std::uint64_t> bits_;
};

// The family F = {A_1, ..., A_m} of labeled subcomplexes of one ambient.
class SubcomplexFamily {
 public:
  // ContractViolation if `members` is empty or the members do not share
  // `ambient`; labels default to A1..Am when `labels` is empty.
  SubcomplexFamily(ComplexPtr ambient, std::vector<Subcomplex> members,
                   std::vector<std::string> labels = {});

  const SimplicialComplex& ambient() const { return *ambient_; }
  const ComplexPtr& ambient_ptr() const { return ambient_; }
  std::size_t size() const { return members_.size(); }
  const Subcomplex& member(std::size_t i) const { return members_[i]; }
  const std::vector<Subcomplex>& members() const { return members_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  // Family with `extra` appended.
  SubcomplexFamily with_member(Subcomplex extra, std::string label) const;

 private:
  ComplexPtr ambient_;
  std::vector<Subcomplex> members_;
  std::vector<std::string> labels_;
};

// Intersection / union of the selected members. ContractViolation on an
// empty or out-of-range index set.
Subcomplex intersect_members(const SubcomplexFamily& family,
                             std::span<const int> indices);
Subcomplex union_members(const SubcomplexFamily& family,
                         std::span<const int> indices);

// Family file (JSON):
//   { "ambient": [[v,...],...], "embedding_dim": d,
//     "members": [ { "label": "...", "simplices": [[v,...],...] }, ... ] }
SubcomplexFamily parse_family(const std::string& text);
SubcomplexFamily load_family(const std::string& path);

}  // namespace helly
