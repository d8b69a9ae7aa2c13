#pragma once

// Test-only helpers: graph builders, exhaustive and random generators, and
// brute-force oracles that do not go through the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/abelian.hpp"
#include "graphprod/graph.hpp"
#include "graphprod/word.hpp"

namespace graphprod::testing {

/// graph({{"a", "Z"}, {"b", "Z/2"}}, {{"a", "b"}})
inline LabeledGraph graph(
    const std::vector<std::pair<std::string, std::string>>& vertices,
    const std::vector<LabeledGraph::Edge>& edges = {}) {
  std::vector<LabeledGraph::Vertex> vs;
  for (const auto& [name, label] : vertices)
    vs.push_back({name, AbelianLabel::parse(label)});
  return LabeledGraph(std::move(vs), edges);
}

inline std::string vertex_name(std::size_t i) {
  return std::string(1, static_cast<char>('a' + i));
}

/// Every labeled graph on vertices a, b, ... with 1..max_vertices vertices,
/// every edge subset and every label assignment from `labels`.
inline std::vector<LabeledGraph> all_labeled_graphs(
    std::size_t max_vertices, const std::vector<std::string>& labels,
    std::size_t min_vertices = 1) {
  std::vector<LabeledGraph> out;
  for (std::size_t n = min_vertices; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::size_t assignments = 1;
    for (std::size_t i = 0; i < n; ++i) assignments *= labels.size();
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<std::pair<std::string, std::string>> vs;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        vs.emplace_back(vertex_name(i), labels[c % labels.size()]);
        c /= labels.size();
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
           ++mask) {
        std::vector<LabeledGraph::Edge> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
          if (mask >> k & 1)
            edges.emplace_back(vertex_name(slots[k].first),
                               vertex_name(slots[k].second));
        out.push_back(graph(vs, edges));
      }
    }
  }
  return out;
}

inline LabeledGraph random_graph(std::mt19937_64& rng, std::size_t n,
                                 const std::vector<std::string>& labels,
                                 double edge_probability = 0.5) {
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<std::string, std::string>> vs;
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    vs.emplace_back(vertex_name(i), labels[pick(rng)]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(vertex_name(i), vertex_name(j));
  return graph(vs, edges);
}

/// The same graph with vertices renamed and reordered by `perm`
/// (new vertex k is old vertex perm[k], named with `prefix`).
inline LabeledGraph permuted(const LabeledGraph& g,
                             const std::vector<std::size_t>& perm,
                             const std::string& prefix = "x") {
  std::vector<std::size_t> position(g.size());
  std::vector<LabeledGraph::Vertex> vs;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    position[perm[k]] = k;
    vs.push_back({prefix + std::to_string(k), g.label(perm[k])});
  }
  std::vector<LabeledGraph::Edge> edges;
  for (auto [i, j] : g.edge_indices())
    edges.emplace_back(vs[position[i]].name, vs[position[j]].name);
  return LabeledGraph(std::move(vs), edges);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng,
                                                   std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Maximal cliques by checking every vertex subset.
inline std::vector<VertexMask> brute_maximal_cliques(const LabeledGraph& g) {
  const std::size_t n = g.size();
  auto clique = [&](VertexMask m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((m >> i & 1) && (m >> j & 1) && !g.adjacent(i, j)) return false;
    return true;
  };
  std::vector<VertexMask> out;
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
    if (!clique(m)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && clique(m | (VertexMask{1} << v))) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

/// Labeled-graph isomorphism by trying every bijection; labels compared as
/// sorted primary factor orders.
inline bool brute_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const AbelianLabel& l) {
    std::vector<Order> orders;
    for (auto f : primary_decompose(l)) orders.push_back(f.order());
    std::sort(orders.begin(), orders.end());
    return orders;
  };
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      ok = key(a.label(i)) == key(b.label(p[i]));
      for (std::size_t j = i + 1; j < a.size() && ok; ++j)
        ok = a.adjacent(i, j) == b.adjacent(p[i], p[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Words

/// A random word of up to max_syllables syllables, exponents in [-3, 3].
inline Word random_word(std::mt19937_64& rng, const ContextPtr& ctx,
                        std::size_t max_syllables) {
  std::uniform_int_distribution<std::size_t> len(0, max_syllables);
  std::uniform_int_distribution<std::size_t> vertex(0, ctx->size() - 1);
  std::uniform_int_distribution<int> exponent(-3, 3);
  std::vector<Syllable> s;
  for (std::size_t k = len(rng); k > 0; --k) {
    int e = 0;
    while (e == 0) e = exponent(rng);
    s.push_back({vertex(rng), e});
  }
  return Word(ctx, std::move(s));
}

/// Applies up to max_swaps random transpositions of neighbouring syllables
/// whose vertices commute. Independent of the library's normal form.
inline Word random_swaps(std::mt19937_64& rng, const Word& w,
                         std::size_t max_swaps) {
  std::vector<Syllable> s = w.syllables();
  const LabeledGraph& g = w.context().graph();
  std::uniform_int_distribution<std::size_t> count(0, max_swaps);
  for (std::size_t k = count(rng); k > 0 && s.size() > 1; --k) {
    std::vector<std::size_t> legal;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (g.adjacent(s[i].vertex, s[i + 1].vertex)) legal.push_back(i);
    if (legal.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    std::size_t i = legal[pick(rng)];
    std::swap(s[i], s[i + 1]);
  }
  return Word(w.context_ptr(), std::move(s));
}

/// Every word of exactly `length` letters v^{+-1} (as a list of syllables of
/// exponent +-1), for small exhaustive sweeps.
inline void for_each_letter_word(const ContextPtr& ctx, std::size_t length,
                                 const std::function<void(const Word&)>& f) {
  std::vector<Syllable> letters;
  for (VertexIndex v = 0; v < ctx->size(); ++v) {
    letters.push_back({v, 1});
    letters.push_back({v, -1});
  }
  std::vector<std::size_t> digits(length, 0);
  while (true) {
    std::vector<Syllable> s;
    for (std::size_t d : digits) s.push_back(letters[d]);
    f(Word(ctx, std::move(s)));
    std::size_t k = 0;
    while (k < length && ++digits[k] == letters.size()) digits[k++] = 0;
    if (k == length) break;
  }
}

}  // namespace graphprod::testing
