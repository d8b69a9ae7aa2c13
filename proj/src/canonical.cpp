#include "graphprod/canonical.hpp"

#include <set>

namespace graphprod {

bool has_kind(const LabeledGraph& g, DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kIndecomposableCyclic:
      for (const auto& v : g.vertices())
        if (!is_indecomposable(v.label)) return false;
      return true;
    case DecompositionKind::kT0Abelian:
      return is_t0(g);
  }
  return false;
}

LabeledGraph refine(const LabeledGraph& g) {
  std::set<std::string> taken;
  for (const auto& v : g.vertices()) taken.insert(v.name);

  std::vector<LabeledGraph::Vertex> vertices;
  std::vector<std::vector<std::string>> pieces(g.size());
  for (VertexIndex v = 0; v < g.size(); ++v) {
    auto factors = primary_decompose(g.label(v));
    if (factors.size() == 1) {
      pieces[v].push_back(g.name(v));
      vertices.push_back({g.name(v), AbelianLabel::cyclic(factors.front())});
      continue;
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::string name = g.name(v) + "." + std::to_string(k + 1);
      // A user vertex may already be called "<name>.<k>".
      while (taken.count(name)) name += "_";
      taken.insert(name);
      pieces[v].push_back(name);
      vertices.push_back({name, AbelianLabel::cyclic(factors[k])});
    }
  }

  std::vector<LabeledGraph::Edge> edges;
  for (const auto& group : pieces)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        edges.emplace_back(group[a], group[b]);
  for (auto [i, j] : g.edge_indices())
    for (const auto& a : pieces[i])
      for (const auto& b : pieces[j]) edges.emplace_back(a, b);
  return LabeledGraph(std::move(vertices), edges);
}

LabeledGraph canonical_indecomposable(const LabeledGraph& g) {
  return canonical_form(refine(g));
}

LabeledGraph canonical_t0_abelian(const LabeledGraph& g) {
  return canonical_form(t0_quotient(refine(g)));
}

std::optional<IsoWitness> groups_isomorphic(const LabeledGraph& g1,
                                            const LabeledGraph& g2) {
  return labeled_iso(refine(g1), refine(g2));
}

}  // namespace graphprod
