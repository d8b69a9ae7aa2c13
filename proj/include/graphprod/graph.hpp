#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphprod/abelian.hpp"

namespace graphprod {

using VertexIndex = std::size_t;
/// Bit i set <=> vertex i is in the set.
using VertexMask = std::uint64_t;
using VertexSet = std::set<std::string>;

/// Graphs are stored with bitmask adjacency; larger graphs are rejected.
inline constexpr std::size_t kMaxVertices = 64;

inline VertexMask bit(VertexIndex i) { return VertexMask{1} << i; }

/// A finite simplicial graph with a finitely-generated abelian group on each
/// vertex: the presentation of a graph product.
///
/// Vertex order is the order given at construction. The empty graph is a
/// valid value (it presents the trivial group) so that induced subgraphs are
/// total; the file parser rejects it.
class LabeledGraph {
 public:
  struct Vertex {
    std::string name;
    AbelianLabel label;
  };
  using Edge = std::pair<std::string, std::string>;

  LabeledGraph() = default;
  /// Throws std::invalid_argument on duplicate names, self-loops, duplicate
  /// edges, unknown endpoints or more than kMaxVertices vertices.
  LabeledGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::string& name(VertexIndex i) const { return vertices_[i].name; }
  const AbelianLabel& label(VertexIndex i) const { return vertices_[i].label; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  std::optional<VertexIndex> find(std::string_view name) const;
  /// Throws std::invalid_argument naming the vertex if absent.
  VertexIndex index_of(std::string_view name) const;

  bool adjacent(VertexIndex a, VertexIndex b) const {
    return (adjacency_[a] & bit(b)) != 0;
  }
  VertexMask neighbors(VertexIndex i) const { return adjacency_[i]; }
  VertexMask all() const noexcept {
    return size() == kMaxVertices ? ~VertexMask{0} : bit(size()) - 1;
  }

  /// Edges as index pairs (i < j), sorted.
  std::vector<std::pair<VertexIndex, VertexIndex>> edge_indices() const;
  std::size_t edge_count() const;

  /// Throws std::invalid_argument on an unknown name.
  VertexMask mask_of(const VertexSet& names) const;
  VertexSet names_of(VertexMask mask) const;

  /// Same names, isomorphic labels and identical edges, in the same vertex
  /// order.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<VertexMask> adjacency_;
  std::map<std::string, VertexIndex, std::less<>> index_;
};

/// Partition of the vertex set, classes sorted by least member name.
struct VertexPartition {
  std::vector<VertexSet> classes;

  friend bool operator==(const VertexPartition&,
                         const VertexPartition&) = default;
};

/// Induced subgraph, keeping the parent's vertex order. Throws
/// std::invalid_argument on an unknown name.
LabeledGraph full_subgraph(const LabeledGraph& g, const VertexSet& vs);
LabeledGraph full_subgraph(const LabeledGraph& g, VertexMask vs);

bool is_clique(const LabeledGraph& g, VertexMask vs);

/// Inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted
/// ascending as masks.
std::vector<VertexMask> maximal_clique_masks(const LabeledGraph& g);
std::vector<VertexSet> maximal_cliques(const LabeledGraph& g);

/// vs together with every vertex adjacent to all of vs. Throws
/// std::invalid_argument if vs is empty or does not span a clique.
VertexSet star_of(const LabeledGraph& g, const VertexSet& vs);
VertexMask star_mask(const LabeledGraph& g, VertexMask vs);

/// Vertices lying in exactly the same maximal cliques share a class.
VertexPartition t0_classes(const LabeledGraph& g);
std::vector<VertexMask> t0_class_masks(const LabeledGraph& g);
bool is_t0(const LabeledGraph& g);

/// Collapses each class to one vertex named by its least member and
/// labeled by the direct product of the members' groups (invariant-factor
/// form). Classes are adjacent iff their members are.
LabeledGraph t0_quotient(const LabeledGraph& g);

}  // namespace graphprod
