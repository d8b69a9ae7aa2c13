#pragma once

#include <numeric>
#include <stdexcept>

#include "graphprod/abelian.hpp"

namespace graphprod::detail {

inline Order checked_mul(Order a, Order b) {
  Order out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("order arithmetic overflows 64 bits");
  return out;
}

inline Order checked_lcm(Order a, Order b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace graphprod::detail
