#include "kacmult/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kacmult {

namespace {

std::string format_theta(const std::vector<int>& theta) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < theta.size(); ++i) os << (i ? "," : "") << theta[i];
  os << ')';
  return os.str();
}

}  // namespace

Weight mu_theta(const AtypicalityProfile& profile, const std::vector<int>& theta) {
  if (theta.size() != profile.gamma.size())
    throw PreconditionError("theta has length " + std::to_string(theta.size()) + ", expected r = " +
                            std::to_string(profile.gamma.size()));
  Weight w = profile.mu;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] != 0 && theta[i] != 1) throw PreconditionError("theta entries must be 0 or 1");
    if (!theta[i]) continue;
    const OddRoot g = profile.gamma[i];
    w.eps(g.i - 1) += profile.k[i];
    w.delta(g.j - 1) -= profile.k[i];
  }
  return w;
}

Weight lambda_theta(const AtypicalityProfile& profile, const std::vector<int>& theta) {
  const Weight shifted = mu_theta(profile, theta);
  const std::optional<Weight> lam = dot_dominant(shifted);
  const std::string payload =
      "mu=" + format_weight(profile.mu) + " theta=" + format_theta(theta) + " mu_theta=" + format_weight(shifted);
  if (!lam) throw ConjectureFalsified("dot-dominant map undefined on mu_theta", payload);
  if (!is_dominant(*lam)) throw ConjectureFalsified("lambda_theta is not dominant", payload);
  return *lam;
}

Weight lambda_theta(const Weight& mu, const std::vector<int>& theta, const Limits& limits) {
  return lambda_theta(nabla_profile(mu, limits), theta);
}

std::vector<std::vector<int>> theta_table_order(int r) {
  std::vector<std::vector<int>> out;
  for (unsigned bits = 0; bits < (1u << r); ++bits) {
    std::vector<int> t(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int pa = std::accumulate(a.begin(), a.end(), 0);
    const int pb = std::accumulate(b.begin(), b.end(), 0);
    if (pa != pb) return pa < pb;
    return a > b;
  });
  return out;
}

MultiplicityColumn column_q(const AtypicalityProfile& profile) {
  MultiplicityColumn col{profile.mu, profile, {}};
  std::set<Weight, LexLess> seen;
  for (auto& theta : theta_table_order(profile.degree())) {
    ColumnEntry e;
    e.mu_theta = mu_theta(profile, theta);
    e.lambda_theta = lambda_theta(profile, theta);
    e.coeff = QPolynomial::neg_q_power(std::accumulate(theta.begin(), theta.end(), 0));
    if (!seen.insert(e.lambda_theta).second)
      throw ConjectureFalsified("two theta give the same lambda_theta",
                                "mu=" + format_weight(profile.mu) + " lambda=" + format_weight(e.lambda_theta));
    e.theta = std::move(theta);
    col.entries.push_back(std::move(e));
  }
  return col;
}

MultiplicityColumn column_q(const Weight& mu, const Limits& limits) {
  return column_q(nabla_profile(mu, limits));
}

MultiplicityColumn column(const Weight& mu, const Limits& limits) {
  MultiplicityColumn col = column_q(mu, limits);
  for (auto& e : col.entries) e.coeff = QPolynomial(1);
  return col;
}

WeightPolyMap row(const Weight& lambda, const Limits& limits) {
  if (!is_dominant(lambda))
    throw PreconditionError("row: weight " + format_weight(lambda) + " is not dominant");
  const Superalgebra alg{lambda.m(), lambda.n(), lambda.m() * lambda.n()};
  const Weight lo = antidominant_rep(lambda) - two_rho_one(alg);
  WeightPolyMap out;
  for (const Weight& mu : enumerate_interval(lo, lambda, true, limits)) {
    for (const ColumnEntry& e : column_q(mu, limits).entries)
      if (e.lambda_theta == lambda) out.emplace(mu, e.coeff);
  }
  return out;
}

}  // namespace kacmult
