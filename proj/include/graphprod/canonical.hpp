#pragma once

#include <optional>
#include <string>

#include "graphprod/graph.hpp"
#include "graphprod/isomorphism.hpp"

namespace graphprod {

enum class DecompositionKind {
  kIndecomposableCyclic,  ///< every label infinite or primary cyclic
  kT0Abelian,             ///< graph is T0, labels in invariant-factor form
};

/// True if g has the shape promised by `kind`.
bool has_kind(const LabeledGraph& g, DecompositionKind kind);

/// Replaces each vertex by a clique of its primary cyclic factors. A vertex
/// with k > 1 factors becomes `<name>.1` ... `<name>.k` (factors in primary
/// order); a vertex that is already indecomposable keeps its name. The new
/// vertices inherit every external edge of the original.
LabeledGraph refine(const LabeledGraph& g);

/// canonical_form(refine(g)).
LabeledGraph canonical_indecomposable(const LabeledGraph& g);

/// canonical_form(t0_quotient(refine(g))).
LabeledGraph canonical_t0_abelian(const LabeledGraph& g);

/// Decides whether the two presentations define isomorphic groups. The
/// witness maps the vertices of refine(g1) onto those of refine(g2).
std::optional<IsoWitness> groups_isomorphic(const LabeledGraph& g1,
                                            const LabeledGraph& g2);

}  // namespace graphprod
