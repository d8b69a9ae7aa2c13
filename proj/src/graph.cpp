#include "graphprod/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace graphprod {

LabeledGraph::LabeledGraph(std::vector<Vertex> vertices,
                           const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size(), 0) {
  if (vertices_.size() > kMaxVertices)
    throw std::invalid_argument("graph has " +
                                std::to_string(vertices_.size()) +
                                " vertices; at most " +
                                std::to_string(kMaxVertices) + " supported");
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    auto [it, inserted] = index_.emplace(vertices_[i].name, i);
    if (!inserted)
      throw std::invalid_argument("duplicate vertex '" + vertices_[i].name +
                                  "'");
  }
  for (const auto& [u, v] : edges) {
    VertexIndex a = index_of(u);
    VertexIndex b = index_of(v);
    if (a == b) throw std::invalid_argument("self-loop at vertex '" + u + "'");
    if (adjacent(a, b))
      throw std::invalid_argument("duplicate edge '" + u + "' -- '" + v + "'");
    adjacency_[a] |= bit(b);
    adjacency_[b] |= bit(a);
  }
}

std::optional<VertexIndex> LabeledGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex LabeledGraph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<VertexIndex, VertexIndex>> LabeledGraph::edge_indices()
    const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex i = 0; i < size(); ++i)
    for (VertexIndex j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask m : adjacency_) twice += std::popcount(m);
  return twice / 2;
}

VertexMask LabeledGraph::mask_of(const VertexSet& names) const {
  VertexMask m = 0;
  for (const auto& n : names) m |= bit(index_of(n));
  return m;
}

VertexSet LabeledGraph::names_of(VertexMask mask) const {
  VertexSet out;
  for (VertexIndex i = 0; i < size(); ++i)
    if (mask & bit(i)) out.insert(name(i));
  return out;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.size() != b.size() || a.adjacency_ != b.adjacency_) return false;
  for (VertexIndex i = 0; i < a.size(); ++i)
    if (a.name(i) != b.name(i) || !(a.label(i) == b.label(i))) return false;
  return true;
}

LabeledGraph full_subgraph(const LabeledGraph& g, const VertexSet& vs) {
  return full_subgraph(g, g.mask_of(vs));
}

LabeledGraph full_subgraph(const LabeledGraph& g, VertexMask vs) {
  std::vector<LabeledGraph::Vertex> vertices;
  std::vector<LabeledGraph::Edge> edges;
  for (VertexIndex i = 0; i < g.size(); ++i)
    if (vs & bit(i)) vertices.push_back(g.vertices()[i]);
  for (auto [i, j] : g.edge_indices())
    if ((vs & bit(i)) && (vs & bit(j))) edges.emplace_back(g.name(i), g.name(j));
  return LabeledGraph(std::move(vertices), edges);
}

bool is_clique(const LabeledGraph& g, VertexMask vs) {
  for (VertexIndex i = 0; i < g.size(); ++i)
    if ((vs & bit(i)) && (vs & ~bit(i) & ~g.neighbors(i)) != 0) return false;
  return true;
}

namespace {

void bron_kerbosch(const LabeledGraph& g, VertexMask r, VertexMask p,
                   VertexMask x, std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p | x with the most neighbours in p.
  VertexIndex pivot = 0;
  int best = -1;
  for (VertexMask px = p | x; px != 0; px &= px - 1) {
    auto u = static_cast<VertexIndex>(std::countr_zero(px));
    int c = std::popcount(p & g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (VertexMask cand = p & ~g.neighbors(pivot); cand != 0; cand &= cand - 1) {
    auto v = static_cast<VertexIndex>(std::countr_zero(cand));
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

std::vector<VertexMask> maximal_clique_masks(const LabeledGraph& g) {
  std::vector<VertexMask> out;
  if (g.empty()) return out;
  bron_kerbosch(g, 0, g.all(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques(const LabeledGraph& g) {
  std::vector<VertexSet> out;
  for (VertexMask m : maximal_clique_masks(g)) out.push_back(g.names_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

VertexMask star_mask(const LabeledGraph& g, VertexMask vs) {
  VertexMask common = g.all();
  for (VertexMask m = vs; m != 0; m &= m - 1)
    common &= g.neighbors(static_cast<VertexIndex>(std::countr_zero(m)));
  return vs | common;
}

VertexSet star_of(const LabeledGraph& g, const VertexSet& vs) {
  if (vs.empty()) throw std::invalid_argument("star of an empty vertex set");
  VertexMask m = g.mask_of(vs);
  if (!is_clique(g, m))
    throw std::invalid_argument("vertex set does not span a clique");
  return g.names_of(star_mask(g, m));
}

std::vector<VertexMask> t0_class_masks(const LabeledGraph& g) {
  auto cliques = maximal_clique_masks(g);
  // Membership signature of each vertex across the clique list.
  std::map<std::vector<bool>, VertexMask> by_signature;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    std::vector<bool> sig;
    sig.reserve(cliques.size());
    for (VertexMask c : cliques) sig.push_back((c & bit(v)) != 0);
    by_signature[sig] |= bit(v);
  }
  std::vector<VertexMask> out;
  for (const auto& [sig, m] : by_signature) out.push_back(m);
  // Order by least member name.
  auto least = [&](VertexMask m) { return *g.names_of(m).begin(); };
  std::sort(out.begin(), out.end(),
            [&](VertexMask a, VertexMask b) { return least(a) < least(b); });
  return out;
}

VertexPartition t0_classes(const LabeledGraph& g) {
  VertexPartition p;
  for (VertexMask m : t0_class_masks(g)) p.classes.push_back(g.names_of(m));
  return p;
}

bool is_t0(const LabeledGraph& g) {
  return t0_class_masks(g).size() == g.size();
}

LabeledGraph t0_quotient(const LabeledGraph& g) {
  auto classes = t0_class_masks(g);
  std::vector<LabeledGraph::Vertex> vertices;
  std::vector<VertexIndex> rep;
  for (VertexMask m : classes) {
    std::optional<AbelianLabel> product;
    for (VertexMask r = m; r != 0; r &= r - 1) {
      const auto& l = g.label(static_cast<VertexIndex>(std::countr_zero(r)));
      product = product ? product->direct_product(l) : l;
    }
    auto canonical = AbelianLabel::from_factors(invariant_factors(*product));
    vertices.push_back({*g.names_of(m).begin(), std::move(canonical)});
    rep.push_back(static_cast<VertexIndex>(std::countr_zero(m)));
  }
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      bool adjacent = g.adjacent(rep[a], rep[b]);
      // Members of two classes lie in the same cliques, so every cross pair
      // must agree with the representatives.
      for (VertexMask x = classes[a]; x != 0; x &= x - 1) {
        VertexMask row = g.neighbors(static_cast<VertexIndex>(std::countr_zero(x)));
        VertexMask hit = row & classes[b];
        if ((adjacent && hit != classes[b]) || (!adjacent && hit != 0))
          throw std::logic_error("inconsistent adjacency between T0 classes");
      }
      if (adjacent) edges.emplace_back(vertices[a].name, vertices[b].name);
    }
  }
  return LabeledGraph(std::move(vertices), edges);
}

}  // namespace graphprod
