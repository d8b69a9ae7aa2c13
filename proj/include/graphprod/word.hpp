#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphprod/abelian.hpp"
#include "graphprod/graph.hpp"

namespace graphprod {

/// A labeled graph whose vertex groups are all cyclic, prepared for word
/// computations. Shared read-only between the words built over it.
class Context {
 public:
  /// Throws std::invalid_argument if some vertex group is not cyclic.
  static std::shared_ptr<const Context> make(LabeledGraph graph);

  const LabeledGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }

  /// Order of the vertex group; 0 when infinite.
  Order order(VertexIndex v) const { return orders_[v]; }
  bool is_torsion(VertexIndex v) const { return orders_[v] != 0; }
  bool commute(VertexIndex a, VertexIndex b) const {
    return graph_.adjacent(a, b);
  }
  /// Position of the vertex name in lexicographic order.
  std::size_t name_rank(VertexIndex v) const { return name_rank_[v]; }

  /// Exponent reduced into 1..n-1 for finite order n; 0 means identity.
  std::int64_t normalize(VertexIndex v, std::int64_t exponent) const;
  /// Letters from V^{+-1} needed to spell v^k: min(k, n-k) or |k|.
  std::uint64_t letter_length(VertexIndex v, std::int64_t exponent) const;

  /// Compared by value.
  friend bool operator==(const Context& a, const Context& b) {
    return a.graph_ == b.graph_;
  }

 private:
  explicit Context(LabeledGraph graph);

  LabeledGraph graph_;
  std::vector<Order> orders_;
  std::vector<std::size_t> name_rank_;
};

using ContextPtr = std::shared_ptr<const Context>;

struct Syllable {
  VertexIndex vertex;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A sequence of syllables representing an element of the graph product.
/// Exponents are normalized on construction and identity syllables dropped;
/// no other rewriting happens until an operation asks for it.
class Word {
 public:
  /// Throws std::invalid_argument if a syllable names a vertex outside the
  /// context.
  Word(ContextPtr context, std::vector<Syllable> syllables = {});

  static Word letter(ContextPtr context, VertexIndex v, std::int64_t exponent);

  const ContextPtr& context_ptr() const noexcept { return context_; }
  const Context& context() const noexcept { return *context_; }
  const std::vector<Syllable>& syllables() const noexcept {
    return syllables_;
  }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }

  /// Syllables exactly as stored, e.g. "a b^-1 a^3"; "1" for the empty word.
  std::string to_string() const;

  /// Syllable-wise identity (not group equality; see equal()).
  friend bool operator==(const Word& a, const Word& b);

 private:
  ContextPtr context_;
  std::vector<Syllable> syllables_;
};

/// Whitespace-separated tokens `name` or `name^k` (k a non-zero integer).
/// The single token `1` (or empty input) is the identity. Throws ParseError
/// on malformed tokens and std::invalid_argument on unknown vertex names.
Word parse_word(const ContextPtr& context, std::string_view text);

/// Letter length of the word as stored.
std::uint64_t letter_length(const Word& w);
/// Letter length of a shortest spelling of the element.
std::uint64_t geodesic_length(const Word& w);

/// Repeatedly merges same-vertex syllables separated only by syllables that
/// commute with them, dropping syllables that become trivial.
Word reduce(const Word& w);

/// Unique representative: reduce, then emit front-shufflable syllables
/// least vertex name first.
Word normal_form(const Word& w);

/// Throw std::invalid_argument on a context mismatch.
Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
bool equal(const Word& a, const Word& b);

VertexSet support(const Word& w);
VertexMask support_mask(const Word& w);

/// core = conjugator^-1 * w * conjugator, with core cyclically reduced.
struct CyclicReduction {
  Word conjugator;
  Word core;
};
CyclicReduction cyclically_reduce(const Word& w);

VertexSet cyclic_support(const Word& w);

/// Support spans a clique (the empty word included).
bool is_cp(const Word& w);

/// The star subgraph generating the centralizer of a non-trivial CP element.
/// Throws std::invalid_argument for the empty word or a non-CP element.
LabeledGraph centralizer_of_cp(const Word& w);

class ElementOrder {
 public:
  static ElementOrder infinite() { return ElementOrder(std::nullopt); }
  static ElementOrder finite(Order n) { return ElementOrder(n); }

  bool is_infinite() const noexcept { return !value_; }
  /// Throws std::bad_optional_access when infinite.
  Order value() const { return value_.value(); }
  /// Decimal value or "infinite".
  std::string to_string() const;

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  explicit ElementOrder(std::optional<Order> value) : value_(value) {}
  std::optional<Order> value_;
};

ElementOrder element_order(const Word& w);

/// The shortest conjugate of a finite-order element, in normal form. Throws
/// std::invalid_argument for infinite-order input.
Word minimal_conjugacy_rep(const Word& w);

/// Induced subgraphs on finite-order and infinite-order vertices. Throws
/// std::invalid_argument unless every label is indecomposable cyclic.
std::pair<LabeledGraph, LabeledGraph> torsion_artin_split(
    const LabeledGraph& g);

/// Kills torsion generators; the result lives over the infinite-order
/// subgraph.
Word retract_to_artin(const Word& w);

/// Maximal cliques of the torsion subgraph: one representative subgroup per
/// conjugacy class of maximal finite subgroups.
std::vector<VertexSet> maximal_finite_reps(const LabeledGraph& g);

}  // namespace graphprod
