#include "graphprod/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphprod/graph_io.hpp"

namespace graphprod {

namespace {

using Colors = std::vector<std::size_t>;
using AdjacencyList = std::vector<std::vector<std::size_t>>;

// Replaces keys by their dense rank in sorted order.
template <typename Key>
std::pair<Colors, std::size_t> rank_keys(const std::vector<Key>& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Colors out(keys.size());
  std::size_t rank = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && keys[idx[k - 1]] < keys[idx[k]]) ++rank;
    out[idx[k]] = rank;
  }
  return {std::move(out), keys.empty() ? 0 : rank + 1};
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// Colour ids are ranks of isomorphism-invariant signatures, so the result
// commutes with relabeling.
Colors refine(const AdjacencyList& adj, Colors colors) {
  auto [current, classes] = rank_keys(colors);
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(
        adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
      sig[v].first = current[v];
      for (std::size_t u : adj[v]) sig[v].second.push_back(current[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto [next, count] = rank_keys(sig);
    current = std::move(next);
    if (count == classes) return current;
    classes = count;
  }
}

AdjacencyList adjacency_list(const LabeledGraph& g, std::size_t offset = 0) {
  AdjacencyList adj(g.size());
  for (VertexIndex v = 0; v < g.size(); ++v)
    for (VertexIndex u = 0; u < g.size(); ++u)
      if (g.adjacent(v, u)) adj[v].push_back(u + offset);
  return adj;
}

std::vector<std::string> label_keys(const LabeledGraph& g) {
  std::vector<std::string> keys;
  for (const auto& v : g.vertices()) keys.push_back(v.label.to_string());
  return keys;
}

struct IsoSearch {
  const LabeledGraph& g1;
  const LabeledGraph& g2;
  Colors color1, color2;
  std::vector<VertexIndex> order;  // g1 vertices in assignment order
  std::vector<VertexIndex> image;  // indexed by g1 vertex
  std::vector<bool> used;          // indexed by g2 vertex

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    VertexIndex v = order[depth];
    for (VertexIndex w = 0; w < g2.size(); ++w) {
      if (used[w] || color2[w] != color1[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        VertexIndex u = order[k];
        consistent = g1.adjacent(v, u) == g2.adjacent(w, image[u]);
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

bool IsoWitness::certifies(const LabeledGraph& from,
                           const LabeledGraph& to) const {
  if (from.size() != to.size() || mapping.size() != from.size()) return false;
  std::vector<VertexIndex> f(from.size());
  std::set<VertexIndex> hit;
  for (VertexIndex i = 0; i < from.size(); ++i) {
    auto it = mapping.find(from.name(i));
    if (it == mapping.end()) return false;
    auto j = to.find(it->second);
    if (!j || !hit.insert(*j).second) return false;
    f[i] = *j;
  }
  for (VertexIndex i = 0; i < from.size(); ++i) {
    if (!(from.label(i) == to.label(f[i]))) return false;
    for (VertexIndex k = i + 1; k < from.size(); ++k)
      if (from.adjacent(i, k) != to.adjacent(f[i], f[k])) return false;
  }
  return true;
}

IsoWitness IsoWitness::inverse() const {
  IsoWitness out;
  for (const auto& [a, b] : mapping) out.mapping.emplace(b, a);
  return out;
}

IsoWitness IsoWitness::then(const IsoWitness& next) const {
  IsoWitness out;
  for (const auto& [a, b] : mapping) out.mapping.emplace(a, next.mapping.at(b));
  return out;
}

IsoWitness IsoWitness::identity(const LabeledGraph& g) {
  IsoWitness out;
  for (const auto& v : g.vertices()) out.mapping.emplace(v.name, v.name);
  return out;
}

std::optional<IsoWitness> labeled_iso(const LabeledGraph& g1,
                                      const LabeledGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  const std::size_t n = g1.size();

  // Refine the disjoint union so colours are comparable across the graphs.
  AdjacencyList adj = adjacency_list(g1);
  AdjacencyList adj2 = adjacency_list(g2, n);
  adj.insert(adj.end(), adj2.begin(), adj2.end());
  auto keys = label_keys(g1);
  auto keys2 = label_keys(g2);
  keys.insert(keys.end(), keys2.begin(), keys2.end());
  Colors colors = refine(adj, rank_keys(keys).first);

  IsoSearch search{g1, g2, Colors(colors.begin(), colors.begin() + n),
                   Colors(colors.begin() + n, colors.end()), {},
                   std::vector<VertexIndex>(n), std::vector<bool>(n)};
  std::vector<std::size_t> count1(2 * n + 1), count2(2 * n + 1);
  for (VertexIndex v = 0; v < n; ++v) {
    ++count1[search.color1[v]];
    ++count2[search.color2[v]];
  }
  if (count1 != count2) return std::nullopt;

  // Assignment order: most neighbours already placed, then smallest colour
  // class, then vertex name.
  std::vector<bool> placed(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<VertexIndex> best;
    std::tuple<int, std::size_t, std::string> best_key;
    for (VertexIndex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (VertexIndex u : search.order) links += g1.adjacent(u, v);
      std::tuple<int, std::size_t, std::string> key{
          -links, count1[search.color1[v]], g1.name(v)};
      if (!best || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[*best] = true;
    search.order.push_back(*best);
  }

  if (!search.extend(0)) return std::nullopt;
  IsoWitness witness;
  for (VertexIndex v = 0; v < n; ++v)
    witness.mapping.emplace(g1.name(v), g2.name(search.image[v]));
  if (!witness.certifies(g1, g2))
    throw std::logic_error("isomorphism search produced an invalid witness");
  return witness;
}

namespace {

struct CanonicalSearch {
  const LabeledGraph& g;
  AdjacencyList adj;
  std::optional<std::string> best_key;
  std::vector<VertexIndex> best_order;

  bool twins(VertexIndex a, VertexIndex b) const {
    return (g.neighbors(a) & ~bit(b)) == (g.neighbors(b) & ~bit(a));
  }

  void leaf(const Colors& colors) {
    std::vector<VertexIndex> order(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) order[colors[v]] = v;
    std::string key;
    key.reserve(g.size() * g.size() / 2);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        key += g.adjacent(order[i], order[j]) ? '1' : '0';
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best_order = std::move(order);
    }
  }

  void run(Colors colors) {
    colors = refine(adj, std::move(colors));
    std::vector<std::size_t> count(g.size());
    for (std::size_t c : colors) ++count[c];
    auto cell_it = std::find_if(count.begin(), count.end(),
                                [](std::size_t k) { return k > 1; });
    if (cell_it == count.end()) {
      leaf(colors);
      return;
    }
    auto cell = static_cast<std::size_t>(cell_it - count.begin());
    std::vector<VertexIndex> tried;
    for (VertexIndex v = 0; v < g.size(); ++v) {
      if (colors[v] != cell) continue;
      // Swapping twins is an automorphism fixing everything individualized
      // so far, so their subtrees produce the same leaves.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](VertexIndex t) { return twins(t, v); }))
        continue;
      tried.push_back(v);
      Colors next(colors.size());
      for (VertexIndex u = 0; u < g.size(); ++u)
        next[u] = 2 * colors[u] + ((colors[u] == cell && u != v) ? 1 : 0);
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<VertexIndex> canonical_order(const LabeledGraph& g) {
  if (g.empty()) return {};
  CanonicalSearch search{g, adjacency_list(g), std::nullopt, {}};
  search.run(rank_keys(label_keys(g)).first);
  return search.best_order;
}

LabeledGraph canonical_form(const LabeledGraph& g) {
  auto order = canonical_order(g);
  std::vector<VertexIndex> position(g.size());
  std::vector<LabeledGraph::Vertex> vertices;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    vertices.push_back(
        {"v" + std::to_string(k),
         AbelianLabel::from_factors(invariant_factors(g.label(order[k])))});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : g.edge_indices())
    pairs.emplace_back(std::min(position[i], position[j]),
                       std::max(position[i], position[j]));
  std::sort(pairs.begin(), pairs.end());
  std::vector<LabeledGraph::Edge> edges;
  for (auto [a, b] : pairs)
    edges.emplace_back(vertices[a].name, vertices[b].name);
  return LabeledGraph(std::move(vertices), edges);
}

std::string canonical_serialization(const LabeledGraph& g) {
  return serialize(canonical_form(g));
}

}  // namespace graphprod
