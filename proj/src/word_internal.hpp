#pragma once

#include <cstdint>
#include <vector>

#include "graphprod/word.hpp"

// Syllable-vector algorithms shared by the word and oracle modules. They
// skip Word's validation and work on already-normalized exponents.
namespace graphprod::detail {

using Syllables = std::vector<Syllable>;

std::int64_t add_exponents(std::int64_t a, std::int64_t b);

/// Appends s to a reduced syllable list, merging it into the last syllable
/// of the same vertex it can be shuffled onto.
void push_reduced(const Context& ctx, Syllables& out, Syllable s);

Syllables reduced(const Context& ctx, const Syllables& in);
/// Reorders a reduced list into normal form.
Syllables lex_order(const Context& ctx, Syllables rest);
Syllables normal_syllables(const Context& ctx, const Syllables& in);
Syllables inverse_syllables(const Context& ctx, const Syllables& in);
std::uint64_t letter_length(const Context& ctx, const Syllables& in);

}  // namespace graphprod::detail
