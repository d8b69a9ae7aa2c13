#include "graphprod/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "checked.hpp"
#include "graphprod/error.hpp"

namespace graphprod {

CyclicFactor CyclicFactor::finite(Order n) {
  if (n < 2)
    throw std::invalid_argument("cyclic factor order must be >= 2, got " +
                                std::to_string(n));
  return CyclicFactor(n);
}

bool CyclicFactor::is_indecomposable() const {
  return is_infinite() || is_prime_power(order_);
}

std::string CyclicFactor::to_string() const {
  return is_infinite() ? "Z" : "Z/" + std::to_string(order_);
}

bool canonical_less(CyclicFactor a, CyclicFactor b) {
  if (a.is_infinite() || b.is_infinite())
    return !a.is_infinite() && b.is_infinite();
  Order pa = factorize(a.order()).front().first;
  Order pb = factorize(b.order()).front().first;
  if (pa != pb) return pa < pb;
  return a.order() < b.order();
}

std::vector<std::pair<Order, unsigned>> factorize(Order n) {
  std::vector<std::pair<Order, unsigned>> out;
  for (Order p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(Order n) { return n >= 2 && factorize(n).size() == 1; }

AbelianLabel::AbelianLabel(std::size_t free_rank,
                           std::vector<Order> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  for (Order n : torsion_)
    if (n < 2)
      throw std::invalid_argument("torsion order must be >= 2, got " +
                                  std::to_string(n));
  if (free_rank_ == 0 && torsion_.empty())
    throw std::invalid_argument("vertex group must be non-trivial");
}

AbelianLabel AbelianLabel::cyclic(CyclicFactor factor) {
  if (factor.is_infinite()) return AbelianLabel(1, {});
  return AbelianLabel(0, {factor.order()});
}

AbelianLabel AbelianLabel::from_factors(
    const std::vector<CyclicFactor>& factors) {
  std::size_t rank = 0;
  std::vector<Order> torsion;
  for (CyclicFactor f : factors) {
    if (f.is_infinite())
      ++rank;
    else
      torsion.push_back(f.order());
  }
  return AbelianLabel(rank, std::move(torsion));
}

namespace {

// Parses a positive decimal at text[pos...]; advances pos.
Order parse_number(std::string_view text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  Order value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ptr == begin) throw ParseError("expected a number", 1, pos + 1);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("number out of range", 1, pos + 1);
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

AbelianLabel AbelianLabel::parse(std::string_view text) {
  // Errors are raised with line 1 and a column into `text`; callers
  // relocate them into their own coordinates.
  std::size_t rank = 0;
  std::vector<Order> torsion;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty group label", 1, 1);
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z')
      throw ParseError("expected 'Z'", 1, pos + 1);
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t at = ++pos;
      Order k = parse_number(text, pos);
      if (k < 1) throw ParseError("free rank must be >= 1", 1, at + 1);
      rank += k;
    } else if (pos < text.size() && text[pos] == '/') {
      std::size_t at = ++pos;
      Order n = parse_number(text, pos);
      if (n < 2) throw ParseError("cyclic order must be >= 2", 1, at + 1);
      torsion.push_back(n);
    } else {
      ++rank;
    }
    if (pos == text.size()) break;
    if (text[pos] != 'x')
      throw ParseError(std::string("unexpected character '") + text[pos] +
                           "'",
                       1, pos + 1);
    ++pos;
  }
  return AbelianLabel(rank, std::move(torsion));
}

bool AbelianLabel::is_cyclic() const {
  auto factors = invariant_factors(*this);
  return factors.size() == 1;
}

CyclicFactor AbelianLabel::as_cyclic() const {
  auto factors = invariant_factors(*this);
  if (factors.size() != 1)
    throw std::invalid_argument("group " + to_string() + " is not cyclic");
  return factors.front();
}

AbelianLabel AbelianLabel::direct_product(const AbelianLabel& other) const {
  std::vector<Order> torsion = torsion_;
  torsion.insert(torsion.end(), other.torsion_.begin(), other.torsion_.end());
  return AbelianLabel(free_rank_ + other.free_rank_, std::move(torsion));
}

std::string AbelianLabel::to_string() const {
  std::string out;
  for (CyclicFactor f : invariant_factors(*this)) {
    if (f.is_infinite()) break;
    if (!out.empty()) out += 'x';
    out += f.to_string();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += 'x';
    out += free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  }
  return out;
}

bool operator==(const AbelianLabel& a, const AbelianLabel& b) {
  return a.free_rank_ == b.free_rank_ &&
         primary_decompose(a) == primary_decompose(b);
}

std::vector<CyclicFactor> primary_decompose(const AbelianLabel& label) {
  std::vector<CyclicFactor> out;
  for (Order n : label.torsion_orders()) {
    for (auto [p, e] : factorize(n)) {
      Order q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      out.push_back(CyclicFactor::finite(q));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.insert(out.end(), label.free_rank(), CyclicFactor::infinite());
  return out;
}

std::vector<CyclicFactor> invariant_factors(const AbelianLabel& label) {
  // Elementary divisors grouped by prime, each list largest first.
  std::map<Order, std::vector<Order>> by_prime;
  std::size_t chain = 0;
  for (CyclicFactor f : primary_decompose(label)) {
    if (f.is_infinite()) continue;
    Order p = factorize(f.order()).front().first;
    by_prime[p].push_back(f.order());
  }
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.rbegin(), powers.rend());
    chain = std::max(chain, powers.size());
  }
  // chain[0] is the largest invariant factor.
  std::vector<Order> d(chain, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i)
      d[i] = detail::checked_mul(d[i], powers[i]);

  std::vector<CyclicFactor> out;
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    out.push_back(CyclicFactor::finite(*it));
  out.insert(out.end(), label.free_rank(), CyclicFactor::infinite());
  return out;
}

bool is_indecomposable(const AbelianLabel& label) {
  auto factors = primary_decompose(label);
  return factors.size() == 1;
}

}  // namespace graphprod
