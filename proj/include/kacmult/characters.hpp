#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kacmult/limits.hpp"
#include "kacmult/weight.hpp"

namespace kacmult {

using WeightCounts = std::map<Weight, std::int64_t, LexLess>;

/// Finite character sum dim V(nu) e^nu with its exactness guarantee: either
/// exact everywhere (a finite-dimensional character computed in full) or
/// exact only on the order interval [lo, hi].
class CharacterMap {
 public:
  struct Region {
    Weight lo;
    Weight hi;
  };

  /// Exact everywhere. Multiplicities must be positive.
  static CharacterMap exact(WeightCounts terms);
  /// Exact on [lo, hi]; every support weight must lie in it.
  static CharacterMap on_region(WeightCounts terms, Region region);

  const WeightCounts& terms() const { return terms_; }
  bool exact_everywhere() const { return !region_; }
  const std::optional<Region>& region() const { return region_; }

  std::int64_t multiplicity(const Weight& w) const;
  std::int64_t total_mass() const;
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const CharacterMap&, const CharacterMap&);

 private:
  CharacterMap(WeightCounts terms, std::optional<Region> region);

  WeightCounts terms_;
  std::optional<Region> region_;
};

/// Product of formal sums.
WeightCounts convolve(const WeightCounts& a, const WeightCounts& b);

/// Product of characters; both factors must be exact everywhere (a product
/// with a character known only on a region has no useful region of its own).
CharacterMap product(const CharacterMap& a, const CharacterMap& b);

/// Restriction to [lo, hi]; the result is exact on that region. An input that
/// is itself only exact on a region must contain [lo, hi] in it.
CharacterMap restricted(const CharacterMap& chi, const CharacterMap::Region& region);

/// Character of the gl(k) irreducible with highest weight `hw` (weakly
/// decreasing) by Gelfand-Tsetlin pattern enumeration.
using BlockCounts = std::map<std::vector<int>, std::int64_t>;
BlockCounts gl_character(const Eigen::VectorXi& hw, const Limits& limits = {});

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i) / (j - i).
std::int64_t weyl_dimension(const Eigen::VectorXi& hw);

/// Character of L_lambda(g0) = L(gl(m)) x L(gl(n)).
CharacterMap char_g0(const Weight& lambda, const Limits& limits = {});

/// prod over odd positive roots of (1 + e^{-beta}).
CharacterMap odd_factor(const Superalgebra& alg, const Limits& limits = {});

/// Kac module character: odd_factor * char_g0(lambda).
CharacterMap char_kac(const Weight& lambda, const Limits& limits = {});

/// Simple module character sum_nu b_{mu,nu} ch V_nu, evaluated on the window
/// [antidominant(mu) - 2 rho_1, mu] which contains every weight of L_mu.
/// Throws ConjectureFalsified if a multiplicity comes out negative.
CharacterMap char_simple(const Weight& mu, const Limits& limits = {});

/// g0 constituents by repeatedly stripping the character of a maximal weight.
WeightCounts decompose_g0(const CharacterMap& chi, const Limits& limits = {});

struct KacDecompositionReport {
  Weight lambda;
  /// mu -> a_{lambda,mu}
  WeightCounts multiplicities;
  /// Weights where sum a ch L and ch V differ, with (lhs, rhs).
  std::vector<std::pair<Weight, std::pair<std::int64_t, std::int64_t>>> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Checks ch V_lambda = sum_mu a_{lambda,mu} ch L_mu exactly.
KacDecompositionReport verify_kac_decomposition(const Weight& lambda, const Limits& limits = {});

}  // namespace kacmult
