#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fusionkit {

/// A permutation of {0, ..., n-1} stored as its image tuple.
using Permutation = std::vector<std::uint32_t>;

namespace perm {

Permutation identity(std::size_t degree);

/// Right-action product: the result maps x to b[a[x]] ("first a, then b").
Permutation compose(Permutation const& a, Permutation const& b);

Permutation inverse(Permutation const& a);

bool is_valid(Permutation const& a);

/// Builds a permutation of the given degree from 1-based disjoint cycles.
/// Throws ParseError on out-of-range or repeated points.
Permutation from_cycles(std::size_t degree,
                        std::vector<std::vector<std::uint32_t>> const& cycles);

/// Extends a permutation to a larger degree by fixing the new points.
Permutation extend(Permutation const& a, std::size_t degree);

/// Moves every point by `offset`, acting trivially on the first `offset`
/// points of the result.
Permutation shift(Permutation const& a, std::size_t offset,
                  std::size_t degree);

/// 1-based cycle notation, "()" for the identity.
std::string to_cycle_string(Permutation const& a);

struct Hash {
  std::size_t operator()(Permutation const& a) const noexcept;
};

}  // namespace perm
}  // namespace fusionkit
