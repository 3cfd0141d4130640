#include "kacmult/atypicality.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace kacmult {

namespace {

Superalgebra algebra_of(const Weight& w) { return {w.m(), w.n(), w.m() * w.n()}; }

void require_dominant(const Weight& mu, const char* where) {
  if (!is_dominant(mu))
    throw PreconditionError(std::string(where) + ": weight " + format_weight(mu) + " is not dominant");
}

void require_atypical_root(const Weight& mu, OddRoot gamma, const char* where) {
  const Weight shifted = mu + rho_tilde(algebra_of(mu));
  if (gamma.i < 1 || gamma.i > mu.m() || gamma.j < 1 || gamma.j > mu.n() || pair_odd(shifted, gamma) != 0)
    throw PreconditionError(std::string(where) + ": " + format_root(gamma) +
                            " is not an atypical root of " + format_weight(mu));
}

Weight add_roots(Weight w, const std::vector<OddRoot>& roots) {
  for (OddRoot r : roots) {
    w.eps(r.i - 1) += 1;
    w.delta(r.j - 1) -= 1;
  }
  return w;
}

bool contains(const std::vector<OddRoot>& set, OddRoot r) {
  return std::find(set.begin(), set.end(), r) != set.end();
}

}  // namespace

Eigen::MatrixXi atypicality_matrix(const Weight& mu) {
  require_dominant(mu, "atypicality_matrix");
  const Weight s = mu + rho_tilde(algebra_of(mu));
  return s.eps.replicate(1, mu.n()) + s.delta.transpose().replicate(mu.m(), 1);
}

int atypicality_degree(const Weight& mu) {
  return static_cast<int>((atypicality_matrix(mu).array() == 0).count());
}

std::vector<OddRoot> gamma_chain(const Weight& mu) {
  const Eigen::MatrixXi a = atypicality_matrix(mu);
  std::vector<OddRoot> zeros;
  for (int i = a.rows(); i >= 1; --i)
    for (int j = 1; j <= a.cols(); ++j)
      if (a(i - 1, j - 1) == 0) zeros.push_back({i, j});
  // Rows scanned bottom-up; within a dominant weight each row and column holds
  // at most one zero, so this is already increasing if it is a chain at all.
  for (std::size_t k = 1; k < zeros.size(); ++k)
    if (!root_less(zeros[k - 1], zeros[k]))
      throw InternalError("atypical roots of " + format_weight(mu) + " do not form a chain");
  return zeros;
}

std::vector<OddRoot> delta_set_by_rule(const Weight& mu, OddRoot gamma) {
  require_dominant(mu, "delta_set");
  require_atypical_root(mu, gamma, "delta_set");
  const Superalgebra alg = algebra_of(mu);
  Weight shifted = mu + rho_tilde(alg);
  std::vector<OddRoot> chosen{gamma};
  shifted.eps(gamma.i - 1) += 1;
  shifted.delta(gamma.j - 1) -= 1;
  while (true) {
    std::optional<OddRoot> pick;
    // Largest row first, then smallest column.
    for (int i = gamma.i; i >= 1 && !pick; --i)
      for (int j = gamma.j; j <= alg.n; ++j) {
        const OddRoot cand{i, j};
        if (cand == gamma || contains(chosen, cand)) continue;
        if (pair_odd(shifted, cand) == 0) {
          pick = cand;
          break;
        }
      }
    if (!pick) break;
    chosen.push_back(*pick);
    shifted.eps(pick->i - 1) += 1;
    shifted.delta(pick->j - 1) -= 1;
  }
  return chosen;
}

std::vector<OddRoot> delta_set_oracle(const Weight& mu, OddRoot gamma, const Limits& limits) {
  require_dominant(mu, "delta_set_oracle");
  require_atypical_root(mu, gamma, "delta_set_oracle");
  const Superalgebra alg = algebra_of(mu);
  if (alg.m * alg.n > 64) throw CapExceeded("delta_set_oracle supports at most 64 odd roots");

  // Bit (i-1)*n + (j-1) encodes beta_{ij}; a chosen set determines the current weight.
  std::vector<OddRoot> above;
  for (OddRoot r : odd_positive_roots(alg))
    if (root_less(gamma, r)) above.push_back(r);
  auto bit = [&](OddRoot r) { return std::uint64_t{1} << ((r.i - 1) * alg.n + (r.j - 1)); };

  const Weight base = mu + rho_tilde(alg);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> stack{bit(gamma)};
  int best_size = 0;
  std::set<std::uint64_t> best;

  while (!stack.empty()) {
    const std::uint64_t mask = stack.back();
    stack.pop_back();
    if (!seen.insert(mask).second) continue;
    if (seen.size() > limits.oracle_states)
      throw CapExceeded("delta_set_oracle: search exceeded " + std::to_string(limits.oracle_states) + " states");
    Weight w = base;
    for (OddRoot r : odd_positive_roots(alg))
      if (mask & bit(r)) {
        w.eps(r.i - 1) += 1;
        w.delta(r.j - 1) -= 1;
      }
    bool terminal = true;
    for (OddRoot r : above) {
      if ((mask & bit(r)) || pair_odd(w, r) != 0) continue;
      terminal = false;
      stack.push_back(mask | bit(r));
    }
    if (!terminal) continue;
    const int size = std::popcount(mask);
    if (size > best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.insert(mask);
  }

  if (best.size() != 1)
    throw InternalError("delta_set_oracle: maximal set for " + format_root(gamma) + " at " +
                        format_weight(mu) + " is not unique");
  std::vector<OddRoot> out;
  for (OddRoot r : odd_positive_roots(alg))
    if (*best.begin() & bit(r)) out.push_back(r);
  return out;
}

std::vector<OddRoot> delta_set(const Weight& mu, OddRoot gamma, const Limits& limits) {
  std::vector<OddRoot> set = delta_set_by_rule(mu, gamma);
  if (is_dominant(add_roots(mu, set))) return set;
  set = delta_set_oracle(mu, gamma, limits);
  if (!is_dominant(add_roots(mu, set)))
    throw InternalError("delta_set: no dominant maximal set for " + format_root(gamma) + " at " +
                        format_weight(mu));
  return set;
}

AtypicalityProfile nabla_profile(const Weight& mu, const Limits& limits) {
  AtypicalityProfile p;
  p.mu = mu;
  p.gamma = gamma_chain(mu);
  for (OddRoot g : p.gamma) p.delta_sets.push_back(delta_set(mu, g, limits));

  const std::size_t r = p.gamma.size();
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<OddRoot> nabla;
    for (OddRoot a : p.delta_sets[i])
      if (i + 1 == r || !contains(p.delta_sets[i + 1], a)) nabla.push_back(a);
    if (i + 1 < r) {
      for (OddRoot a : p.delta_sets[i + 1])
        if (!contains(p.delta_sets[i], a))
          throw InternalError("Delta sets of " + format_weight(mu) + " are not nested");
    }
    if (nabla.empty())
      throw InternalError("empty Nabla set for " + format_root(p.gamma[i]) + " at " + format_weight(mu));
    p.k.push_back(static_cast<int>(nabla.size()));
    p.nabla_sets.push_back(std::move(nabla));
  }

  const Superalgebra alg = algebra_of(mu);
  p.mu_zero = mu;
  for (OddRoot a : odd_positive_roots(alg))
    if (r == 0 || !contains(p.delta_sets.front(), a)) {
      p.mu_zero.eps(a.i - 1) -= 1;
      p.mu_zero.delta(a.j - 1) += 1;
    }
  return p;
}

Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> connectedness(const AtypicalityProfile& profile) {
  const int r = profile.degree();
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> rel =
      Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(r, r, false);
  // (beta_ij, beta_kl) = [i == k] - [j == l]
  auto pairs_nontrivially = [](OddRoot a, OddRoot b) { return (a.i == b.i) != (a.j == b.j); };
  for (int x = 0; x < r; ++x) {
    rel(x, x) = true;
    for (int y = x + 1; y < r; ++y) {
      bool linked = false;
      for (OddRoot a : profile.nabla_sets[x])
        for (OddRoot b : profile.nabla_sets[y]) linked = linked || pairs_nontrivially(a, b);
      rel(x, y) = rel(y, x) = linked;
    }
  }
  return rel;
}

Weight mu_zero(const Weight& mu, const Limits& limits) { return nabla_profile(mu, limits).mu_zero; }

ReflectionWalk odd_reflection_walk(const Weight& mu) {
  require_dominant(mu, "odd_reflection_walk");
  const Superalgebra alg = algebra_of(mu);
  ReflectionWalk walk{mu, rho_tilde(alg), {}};
  for (int i = alg.m; i >= 1; --i)
    for (int j = 1; j <= alg.n; ++j) {
      const OddRoot alpha{i, j};
      const Weight a = odd_root_vector(alg, alpha);
      ReflectionStep step{alpha, pair_odd(walk.final_weight + walk.final_rho, alpha), false, {}};
      if (step.pairing != 0) {
        walk.final_weight -= a;
        step.subtracted = true;
      }
      walk.final_rho += a;
      step.weight_after = walk.final_weight;
      walk.steps.push_back(std::move(step));
    }
  return walk;
}

}  // namespace kacmult
