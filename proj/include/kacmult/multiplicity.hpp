#pragma once

#include <map>
#include <vector>

#include "kacmult/atypicality.hpp"
#include "kacmult/poly.hpp"

namespace kacmult {

struct ColumnEntry {
  std::vector<int> theta;
  Weight mu_theta;      // mu + sum theta_i k_i gamma_i
  Weight lambda_theta;  // dot-dominant image of mu_theta
  QPolynomial coeff;
};

/// Conjectured composition-factor column of mu: the 2^r weights lambda with
/// [V_lambda : L_mu] != 0, in theta_table_order.
struct MultiplicityColumn {
  Weight mu;
  AtypicalityProfile profile;
  std::vector<ColumnEntry> entries;
};

/// mu + sum theta_i k_i gamma_i, using the k-vector from `profile`.
Weight mu_theta(const AtypicalityProfile& profile, const std::vector<int>& theta);

/// lambda_theta = dot_dominant(mu_theta). Throws ConjectureFalsified when the
/// dot-dominant map is undefined or the result is not dominant.
Weight lambda_theta(const AtypicalityProfile& profile, const std::vector<int>& theta);
Weight lambda_theta(const Weight& mu, const std::vector<int>& theta, const Limits& limits = {});

/// All theta in {0,1}^r in table order: by |theta|, then by the reversed
/// binary reading, i.e. (0,0,0), (1,0,0), (0,1,0), (0,0,1), (1,1,0), ...
std::vector<std::vector<int>> theta_table_order(int r);

/// Column with numeric multiplicities (every coefficient the constant 1).
MultiplicityColumn column(const Weight& mu, const Limits& limits = {});
/// Column with coefficients (-q)^{|theta|}.
MultiplicityColumn column_q(const Weight& mu, const Limits& limits = {});
/// Same, from a precomputed (possibly altered) profile.
MultiplicityColumn column_q(const AtypicalityProfile& profile);

using WeightPolyMap = std::map<Weight, QPolynomial, LexLess>;

/// Row lambda of A_q: every dominant mu in [antidominant(lambda) - 2 rho_1,
/// lambda] whose column contains lambda, with its coefficient.
WeightPolyMap row(const Weight& lambda, const Limits& limits = {});

}  // namespace kacmult
