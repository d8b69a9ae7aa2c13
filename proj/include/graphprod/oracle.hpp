#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphprod/graph.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

struct BallOptions {
  std::size_t radius_cap = 6;
  /// Enumeration stops with an error rather than exceed this many elements.
  std::size_t max_elements = 1'000'000;
};

/// All elements of geodesic letter length <= radius, found by breadth-first
/// search over the generators v^{+-1} and deduplicated by normal form.
class Ball {
 public:
  const ContextPtr& context() const noexcept { return context_; }
  std::size_t radius() const noexcept { return radius_; }

  /// Normal forms in breadth-first order; elements()[0] is the identity.
  const std::vector<Word>& elements() const noexcept { return elements_; }
  /// BFS distance of elements()[i] from the identity.
  std::size_t distance(std::size_t i) const { return distance_[i]; }
  /// sizes()[k] = number of elements at distance <= k.
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

  /// Distance of the element w represents, if it lies in the ball.
  std::optional<std::size_t> distance_of(const Word& w) const;

 private:
  friend Ball enumerate_ball(const ContextPtr&, std::size_t,
                             const BallOptions&);

  ContextPtr context_;
  std::size_t radius_ = 0;
  std::vector<Word> elements_;
  std::vector<std::size_t> distance_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Throws std::out_of_range if radius exceeds options.radius_cap or the
/// ball outgrows options.max_elements, and std::invalid_argument if some
/// vertex group is not directly-indecomposable cyclic.
Ball enumerate_ball(const ContextPtr& context, std::size_t radius,
                    const BallOptions& options = {});
Ball enumerate_ball(const LabeledGraph& g, std::size_t radius,
                    const BallOptions& options = {});

/// min over x in the ball of geodesic_length(x^-1 w x). An upper bound on
/// the shortest conjugate of w; exact when some shortest conjugator lies in
/// the ball.
std::size_t conjugacy_min_length(const Ball& ball, const Word& w);
std::size_t conjugacy_min_length(const LabeledGraph& g, const Word& w,
                                 std::size_t radius,
                                 const BallOptions& options = {});

/// Ball elements x with xu = ux, in ball order.
std::vector<Word> commutation_table(const Ball& ball, const Word& u);
std::vector<Word> commutation_table(const LabeledGraph& g, const Word& u,
                                    std::size_t radius,
                                    const BallOptions& options = {});

/// Compact, context-relative key of the element's normal form.
std::string element_key(const Word& w);

}  // namespace graphprod
