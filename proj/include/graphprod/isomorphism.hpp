#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphprod/graph.hpp"

namespace graphprod {

/// A vertex bijection between two labeled graphs, by name.
struct IsoWitness {
  std::map<std::string, std::string> mapping;

  /// Bijective, adjacency-preserving both ways, and label-preserving up to
  /// group isomorphism.
  bool certifies(const LabeledGraph& from, const LabeledGraph& to) const;

  IsoWitness inverse() const;
  /// x -> next(this(x)).
  IsoWitness then(const IsoWitness& next) const;

  static IsoWitness identity(const LabeledGraph& g);
};

/// Exact labeled-graph isomorphism test: colour refinement on the disjoint
/// union, then backtracking over colour-compatible assignments.
std::optional<IsoWitness> labeled_iso(const LabeledGraph& g1,
                                      const LabeledGraph& g2);

/// Vertex order of the canonical relabeling: result[k] is the vertex of g
/// placed at position k.
std::vector<VertexIndex> canonical_order(const LabeledGraph& g);

/// g relabeled v0..v(n-1) in canonical order. Two graphs have identical
/// canonical forms iff they are isomorphic as labeled graphs.
LabeledGraph canonical_form(const LabeledGraph& g);

/// serialize(canonical_form(g)).
std::string canonical_serialization(const LabeledGraph& g);

}  // namespace graphprod
