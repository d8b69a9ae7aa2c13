#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphprod {

using Order = std::uint64_t;

/// A cyclic group, either infinite or of finite order n >= 2.
class CyclicFactor {
 public:
  static CyclicFactor infinite() noexcept { return CyclicFactor(0); }
  /// Throws std::invalid_argument if n < 2.
  static CyclicFactor finite(Order n);

  bool is_infinite() const noexcept { return order_ == 0; }
  /// Finite order; 0 for the infinite cyclic group.
  Order order() const noexcept { return order_; }

  /// Infinite, or of prime-power order.
  bool is_indecomposable() const;

  /// "Z" or "Z/n".
  std::string to_string() const;

  friend bool operator==(CyclicFactor, CyclicFactor) = default;

 private:
  explicit CyclicFactor(Order order) noexcept : order_(order) {}
  Order order_;
};

/// Ordering used for primary factor lists: finite factors by (prime,
/// exponent), infinite factors last. Only meaningful on indecomposable
/// factors; composite orders fall back to comparing by smallest prime, then
/// by order.
bool canonical_less(CyclicFactor a, CyclicFactor b);

/// A finitely-generated abelian group Z^r x Z/n1 x ... x Z/nk.
///
/// The torsion orders are kept exactly as given; equality compares the
/// groups up to isomorphism (via invariant factors).
class AbelianLabel {
 public:
  /// Throws std::invalid_argument on an order < 2 or on the trivial group.
  AbelianLabel(std::size_t free_rank, std::vector<Order> torsion_orders);

  static AbelianLabel cyclic(CyclicFactor factor);
  static AbelianLabel from_factors(const std::vector<CyclicFactor>& factors);

  /// Grammar: factors joined by 'x'; factor ::= Z | Z^k (k >= 1) | Z/n
  /// (n >= 2). Throws ParseError with a 1-based column.
  static AbelianLabel parse(std::string_view text);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Order>& torsion_orders() const noexcept {
    return torsion_;
  }

  /// Isomorphic to a single cyclic group.
  bool is_cyclic() const;
  /// The cyclic group this label presents; throws std::invalid_argument if
  /// the label is not cyclic.
  CyclicFactor as_cyclic() const;

  AbelianLabel direct_product(const AbelianLabel& other) const;

  /// Invariant-factor text, e.g. "Z/2xZ/4xZ^2". Equal strings iff
  /// isomorphic groups.
  std::string to_string() const;

  friend bool operator==(const AbelianLabel& a, const AbelianLabel& b);

 private:
  std::size_t free_rank_;
  std::vector<Order> torsion_;
};

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Order, unsigned>> factorize(Order n);

bool is_prime_power(Order n);

/// Decomposition into directly-indecomposable cyclic factors, sorted by
/// canonical_less (so infinite factors come last).
std::vector<CyclicFactor> primary_decompose(const AbelianLabel& label);

/// d1 | d2 | ... | dk followed by free_rank infinite factors. Throws
/// std::overflow_error if some d_i does not fit in an Order.
std::vector<CyclicFactor> invariant_factors(const AbelianLabel& label);

/// A single infinite cyclic or primary cyclic factor.
bool is_indecomposable(const AbelianLabel& label);

}  // namespace graphprod
