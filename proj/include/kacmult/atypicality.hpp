#pragma once

#include <vector>

#include <Eigen/Core>

#include "kacmult/limits.hpp"
#include "kacmult/weight.hpp"

namespace kacmult {

/// Atypicality data of one dominant weight mu.
struct AtypicalityProfile {
  Weight mu;
  /// Atypical roots gamma_1 < ... < gamma_r.
  std::vector<OddRoot> gamma;
  /// Delta(gamma_i), each in insertion order; Delta(gamma_1) > ... > Delta(gamma_r).
  std::vector<std::vector<OddRoot>> delta_sets;
  /// Nabla(gamma_i) = Delta(gamma_i) \ Delta(gamma_{i+1}), Nabla(gamma_r) = Delta(gamma_r).
  std::vector<std::vector<OddRoot>> nabla_sets;
  /// k_i = #Nabla(gamma_i).
  std::vector<int> k;
  Weight mu_zero;

  int degree() const { return static_cast<int>(gamma.size()); }
};

/// Entry (i, j) is (mu + rho, beta_{ij}).
Eigen::MatrixXi atypicality_matrix(const Weight& mu);

/// Number of zero entries of the atypicality matrix.
int atypicality_degree(const Weight& mu);

/// Zeros of the atypicality matrix, increasing in the root order. Throws
/// InternalError if they do not form a chain.
std::vector<OddRoot> gamma_chain(const Weight& mu);

/// Deterministic construction of Delta(gamma): grow the chain by the admissible
/// candidate with the largest row index, ties broken by the smallest column
/// index. No dominance check; see delta_set.
std::vector<OddRoot> delta_set_by_rule(const Weight& mu, OddRoot gamma);

/// Delta(gamma) via delta_set_by_rule, verified: if mu + (sum of the set) is
/// not dominant the exhaustive search is used instead.
std::vector<OddRoot> delta_set(const Weight& mu, OddRoot gamma, const Limits& limits = {});

/// Exhaustive search over all admissible insertion sequences; returns the
/// maximum-cardinality terminal set sorted row-major. Throws InternalError if
/// two different maximum sets exist, CapExceeded past limits.oracle_states.
std::vector<OddRoot> delta_set_oracle(const Weight& mu, OddRoot gamma, const Limits& limits = {});

AtypicalityProfile nabla_profile(const Weight& mu, const Limits& limits = {});

/// r x r symmetric relation; (i, j) set iff some roots of Nabla(gamma_i) and
/// Nabla(gamma_j) pair nontrivially. The diagonal is set.
Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> connectedness(const AtypicalityProfile& profile);

/// mu - (sum of odd positive roots outside Delta(gamma_1)).
Weight mu_zero(const Weight& mu, const Limits& limits = {});

struct ReflectionStep {
  OddRoot root;
  int pairing = 0;       // (lambda_c + rho_c, root) before the step
  bool subtracted = false;
  Weight weight_after;
};

struct ReflectionWalk {
  Weight final_weight;
  Weight final_rho;
  std::vector<ReflectionStep> steps;
};

/// Odd reflections through beta_{m,1..n}, beta_{m-1,1..n}, ..., beta_{1,1..n},
/// tracking the highest weight of L_mu and the rho of the current Borel.
ReflectionWalk odd_reflection_walk(const Weight& mu);

}  // namespace kacmult
