#pragma once

#include <span>
#include <string>
#include <vector>

namespace deltaft {

/// Word in a free group on generators numbered 1, 2, ...; a letter +g is
/// the generator g and -g its inverse. Zero never occurs.
using FreeWord = std::vector<int>;

/// Cancels adjacent g, -g pairs until none remain.
FreeWord free_reduce(std::span<const int> w);

FreeWord free_invert(std::span<const int> w);

/// Concatenates and freely reduces.
FreeWord free_concat(std::span<const int> a, std::span<const int> b);

bool is_freely_reduced(std::span<const int> w);

/// Replaces every generator g by images[g - 1] (inverses by inverted images)
/// and freely reduces the result.
FreeWord free_substitute(std::span<const int> w,
                         const std::vector<FreeWord>& images);

/// Signed number of occurrences of generator g.
long exponent_sum(std::span<const int> w, int g);

/// Text form "a b -a -b"; generators are written with the given prefix.
std::string free_to_string(std::span<const int> w, const std::string& prefix = "x");

}  // namespace deltaft
