#include "helly/complex.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "helly/errors.hpp"

namespace helly {

namespace {

constexpr std::size_t kMaxSimplexSize = 24;

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void append_faces(const Simplex& s, std::vector<Simplex>& out) {
  const auto& v = s.vertices();
  if (v.size() > kMaxSimplexSize) {
    throw MalformedInput("simplex " + s.to_string() + " is too large to close");
  }
  const std::uint32_t subsets = std::uint32_t{1} << v.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::vector<int> face;
    face.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) face.push_back(v[i]);
    }
    out.emplace_back(std::move(face));
  }
}

std::vector<std::vector<int>> read_simplex_lists(const nlohmann::json& j,
                                                 const std::string& where) {
  if (!j.is_array()) throw MalformedInput(where + ": expected an array of simplices");
  std::vector<std::vector<int>> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw MalformedInput(where + ": simplex must be an array");
    std::vector<int> verts;
    for (const auto& v : s) {
      if (!v.is_number_integer()) {
        throw MalformedInput(where + ": vertex ids must be integers");
      }
      verts.push_back(v.get<int>());
    }
    out.push_back(std::move(verts));
  }
  return out;
}

}  // namespace

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedInput("simplex with no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) throw MalformedInput("negative vertex id in " + to_string());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw MalformedInput("duplicate vertex in simplex " + to_string());
  }
}

bool operator<(const Simplex& a, const Simplex& b) {
  if (a.vertices_.size() != b.vertices_.size()) {
    return a.vertices_.size() < b.vertices_.size();
  }
  return a.vertices_ < b.vertices_;
}

std::string Simplex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices_[i]);
  }
  return out + "]";
}

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<std::vector<int>>& maximal_simplices,
    std::optional<int> embedding_dim) {
  std::vector<Simplex> all;
  for (const auto& verts : maximal_simplices) append_faces(Simplex(verts), all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  SimplicialComplex c;
  c.simplices_ = std::move(all);
  const int top = c.simplices_.empty() ? -1 : c.simplices_.back().dimension();
  c.dim_offsets_.assign(static_cast<std::size_t>(top + 2), c.simplices_.size());
  for (int k = top; k >= 0; --k) {
    auto it = std::partition_point(c.simplices_.begin(), c.simplices_.end(),
                                   [k](const Simplex& s) { return s.dimension() < k; });
    c.dim_offsets_[static_cast<std::size_t>(k)] =
        static_cast<std::size_t>(it - c.simplices_.begin());
  }

  c.facets_.resize(c.simplices_.size());
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) {
    const auto& v = c.simplices_[i].vertices();
    if (v.size() < 2) continue;
    auto& f = c.facets_[i];
    f.reserve(v.size());
    for (std::size_t drop = 0; drop < v.size(); ++drop) {
      std::vector<int> face;
      face.reserve(v.size() - 1);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != drop) face.push_back(v[k]);
      }
      f.push_back(static_cast<std::uint32_t>(*c.index_of(Simplex(std::move(face)))));
    }
  }

  const int dim = c.dimension();
  c.embedding_dim_ = embedding_dim.value_or(std::max(1, dim));
  if (c.embedding_dim_ < 1) throw MalformedInput("embedding_dim must be >= 1");
  if (dim > c.embedding_dim_) {
    throw MalformedInput("complex of dimension " + std::to_string(dim) +
                         " exceeds declared embedding_dim " +
                         std::to_string(c.embedding_dim_));
  }
  return c;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

std::size_t SimplicialComplex::dim_begin(int k) const {
  if (k < 0) return 0;
  if (k + 1 >= static_cast<int>(dim_offsets_.size())) return simplices_.size();
  return dim_offsets_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::dim_end(int k) const {
  if (k < 0) return 0;
  return dim_begin(k + 1);
}

ComplexPtr build_complex(const std::vector<std::vector<int>>& maximal_simplices,
                         std::optional<int> embedding_dim) {
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_maximal(maximal_simplices, embedding_dim));
}

// ---------------------------------------------------------------------------

Subcomplex::Subcomplex(ComplexPtr parent)
    : parent_(std::move(parent)), bits_(word_count(parent_->size()), 0) {}

Subcomplex Subcomplex::empty(ComplexPtr parent) { return Subcomplex(std::move(parent)); }

Subcomplex Subcomplex::full(ComplexPtr parent) {
  Subcomplex s(std::move(parent));
  for (std::size_t i = 0; i < s.parent_->size(); ++i) s.set(i);
  return s;
}

Subcomplex Subcomplex::from_maximal(ComplexPtr parent,
                                    const std::vector<std::vector<int>>& maximal) {
  Subcomplex s(std::move(parent));
  std::vector<std::size_t> stack;
  for (const auto& verts : maximal) {
    Simplex simplex(verts);
    auto idx = s.parent_->index_of(simplex);
    if (!idx) {
      throw ValidationError("member simplex " + simplex.to_string() +
                            " is not in the ambient complex");
    }
    stack.push_back(*idx);
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (s.contains(i)) continue;
    s.set(i);
    for (auto f : s.parent_->facets(i)) stack.push_back(f);
  }
  return s;
}

Subcomplex Subcomplex::from_simplex_set(ComplexPtr parent,
                                        const std::vector<std::vector<int>>& simplices) {
  Subcomplex s(std::move(parent));
  for (const auto& verts : simplices) {
    Simplex simplex(verts);
    auto idx = s.parent_->index_of(simplex);
    if (!idx) {
      throw ValidationError("member simplex " + simplex.to_string() +
                            " is not in the ambient complex");
    }
    s.set(*idx);
  }
  for (std::size_t i = 0; i < s.parent_->size(); ++i) {
    if (!s.contains(i)) continue;
    for (auto f : s.parent_->facets(i)) {
      if (!s.contains(f)) {
        throw ValidationError("member is not face-closed: " +
                              s.parent_->simplex(i).to_string() + " lacks face " +
                              s.parent_->simplex(f).to_string());
      }
    }
  }
  return s;
}

bool Subcomplex::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Subcomplex::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Subcomplex::count(int k) const {
  std::size_t n = 0;
  for (std::size_t i = parent_->dim_begin(k); i < parent_->dim_end(k); ++i) {
    n += contains(i) ? 1 : 0;
  }
  return n;
}

int Subcomplex::dimension() const {
  for (int k = parent_->dimension(); k >= 0; --k) {
    if (count(k) > 0) return k;
  }
  return -1;
}

std::vector<std::size_t> Subcomplex::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent_->size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<Simplex> Subcomplex::maximal_simplices() const {
  std::vector<bool> covered(parent_->size(), false);
  for (std::size_t i = 0; i < parent_->size(); ++i) {
    if (!contains(i)) continue;
    for (auto f : parent_->facets(i)) covered[f] = true;
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < parent_->size(); ++i) {
    if (contains(i) && !covered[i]) out.push_back(parent_->simplex(i));
  }
  return out;
}

void Subcomplex::require_same_parent(const Subcomplex& other) const {
  if (parent_ != other.parent_ && !(*parent_ == *other.parent_)) {
    throw ContractViolation("subcomplexes belong to different ambient complexes");
  }
}

bool Subcomplex::is_subset_of(const Subcomplex& other) const {
  require_same_parent(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

Subcomplex Subcomplex::intersect(const Subcomplex& other) const {
  require_same_parent(other);
  Subcomplex out(parent_);
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] & other.bits_[w];
  return out;
}

Subcomplex Subcomplex::unite(const Subcomplex& other) const {
  require_same_parent(other);
  Subcomplex out(parent_);
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] | other.bits_[w];
  return out;
}

// ---------------------------------------------------------------------------

SubcomplexFamily::SubcomplexFamily(ComplexPtr ambient, std::vector<Subcomplex> members,
                                   std::vector<std::string> labels)
    : ambient_(std::move(ambient)), members_(std::move(members)), labels_(std::move(labels)) {
  if (!ambient_) throw ContractViolation("family without an ambient complex");
  if (members_.empty()) throw ContractViolation("a family needs at least one member");
  for (const auto& m : members_) {
    if (m.parent_ptr() != ambient_ && !(m.parent() == *ambient_)) {
      throw ContractViolation("family members must share the ambient complex");
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      labels_.push_back("A" + std::to_string(i + 1));
    }
  }
  if (labels_.size() != members_.size()) {
    throw ContractViolation("label count does not match member count");
  }
}

std::optional<std::size_t> SubcomplexFamily::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SubcomplexFamily SubcomplexFamily::with_member(Subcomplex extra, std::string label) const {
  auto members = members_;
  auto labels = labels_;
  members.push_back(std::move(extra));
  labels.push_back(std::move(label));
  return SubcomplexFamily(ambient_, std::move(members), std::move(labels));
}

namespace {

template <class Combine>
Subcomplex combine_members(const SubcomplexFamily& family, std::span<const int> indices,
                           Combine combine) {
  if (indices.empty()) throw ContractViolation("empty member index set");
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= family.size()) {
      throw ContractViolation("member index " + std::to_string(i) + " out of range");
    }
  }
  Subcomplex acc = family.member(static_cast<std::size_t>(indices[0]));
  for (std::size_t k = 1; k < indices.size(); ++k) {
    acc = combine(acc, family.member(static_cast<std::size_t>(indices[k])));
  }
  return acc;
}

}  // namespace

Subcomplex intersect_members(const SubcomplexFamily& family, std::span<const int> indices) {
  return combine_members(family, indices,
                         [](const Subcomplex& a, const Subcomplex& b) { return a.intersect(b); });
}

Subcomplex union_members(const SubcomplexFamily& family, std::span<const int> indices) {
  return combine_members(family, indices,
                         [](const Subcomplex& a, const Subcomplex& b) { return a.unite(b); });
}

SubcomplexFamily parse_family(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("family file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ambient") || !doc.contains("members")) {
    throw MalformedInput("family file needs \"ambient\" and \"members\"");
  }
  std::optional<int> dim;
  if (doc.contains("embedding_dim")) {
    if (!doc["embedding_dim"].is_number_integer()) {
      throw MalformedInput("embedding_dim must be an integer");
    }
    dim = doc["embedding_dim"].get<int>();
  }
  auto ambient = build_complex(read_simplex_lists(doc["ambient"], "ambient"), dim);

  const auto& members = doc["members"];
  if (!members.is_array()) throw MalformedInput("\"members\" must be an array");
  if (members.empty()) throw ContractViolation("family file has no members");
  std::vector<Subcomplex> subs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (!m.is_object() || !m.contains("simplices")) {
      throw MalformedInput("member " + std::to_string(i) + " lacks \"simplices\"");
    }
    std::string label = "A" + std::to_string(i + 1);
    if (m.contains("label")) {
      if (!m["label"].is_string()) throw MalformedInput("member label must be a string");
      label = m["label"].get<std::string>();
    }
    subs.push_back(Subcomplex::from_maximal(
        ambient, read_simplex_lists(m["simplices"], "member " + label)));
    labels.push_back(std::move(label));
  }
  return SubcomplexFamily(ambient, std::move(subs), std::move(labels));
}

SubcomplexFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open family file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

}  // namespace helly
