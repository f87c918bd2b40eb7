#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace alterlda {

/// Unit-cost edit distance over Unicode scalar values (UTF-8 input).
std::size_t levenshtein(std::string_view a, std::string_view b);

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Edit distance if it is <= `bound`, otherwise any value > `bound`.
/// Stops as soon as every cell of a row exceeds the bound.
std::size_t bounded_levenshtein(std::u32string_view a, std::u32string_view b, std::size_t bound);

}  // namespace alterlda
