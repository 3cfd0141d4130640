#pragma once

#include <cstddef>

namespace kacmult {

/// Size guards shared by the enumerators. All of them are soft limits: when a
/// computation would exceed one, a CapExceeded error is raised instead.
struct Limits {
  /// Maximum number of weights returned by an interval enumeration.
  std::size_t window = 200'000;
  /// Maximum dimension of a g0 irreducible expanded by pattern enumeration.
  std::size_t patterns = 2'000'000;
  /// Maximum support size of the odd factor prod (1 + e^{-beta}).
  std::size_t odd_support = 1'000'000;
  /// Maximum number of distinct root sets visited by the exhaustive
  /// Delta-set search.
  std::size_t oracle_states = 4'000'000;
};

/// Upper bound on m*n accepted by Superalgebra unless overridden.
inline constexpr int kDefaultMaxOddRoots = 30;

}  // namespace kacmult
