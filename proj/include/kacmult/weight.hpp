#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "kacmult/errors.hpp"
#include "kacmult/limits.hpp"

namespace kacmult {

/// gl(m|n): even part gl(m) + gl(n), odd positive roots eps_i - delta_j.
struct Superalgebra {
  int m = 1;
  int n = 1;

  Superalgebra() = default;
  Superalgebra(int m, int n, int max_odd_roots = kDefaultMaxOddRoots);

  int rank() const { return m + n; }
  int odd_root_count() const { return m * n; }

  friend bool operator==(const Superalgebra&, const Superalgebra&) = default;
};

/// An integral weight (lambda_1..lambda_m | lambda'_1..lambda'_n) in the
/// standard eps/delta basis. Also used for roots and rho vectors, which live
/// in the same lattice.
struct Weight {
  Eigen::VectorXi eps;
  Eigen::VectorXi delta;

  Weight() = default;
  Weight(Eigen::VectorXi e, Eigen::VectorXi d) : eps(std::move(e)), delta(std::move(d)) {}
  Weight(std::initializer_list<int> e, std::initializer_list<int> d);

  static Weight zero(const Superalgebra& alg);

  int m() const { return static_cast<int>(eps.size()); }
  int n() const { return static_cast<int>(delta.size()); }
  bool fits(const Superalgebra& alg) const { return m() == alg.m && n() == alg.n; }

  /// Coordinates in the order eps_1..eps_m, delta_1..delta_n.
  std::vector<int> coords() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
};

Weight operator+(Weight a, const Weight& b);
Weight operator-(Weight a, const Weight& b);
Weight operator-(Weight a);
Weight operator*(int k, Weight w);
bool operator==(const Weight& a, const Weight& b);

/// Total order used for map keys and deterministic output; unrelated to the
/// root partial order.
struct LexLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

/// Odd positive root beta_{ij} = eps_i - delta_j, 1-based indices.
struct OddRoot {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const OddRoot&, const OddRoot&) = default;
};

/// Any root of gl(m|n). Even roots eps_a - eps_b / delta_a - delta_b with
/// a != b, odd roots +-(eps_a - delta_b).
struct Root {
  enum class Kind { even_eps, even_delta, odd };
  Kind kind = Kind::odd;
  int a = 1;
  int b = 1;
  bool negative = false;  // only meaningful for odd roots

  friend bool operator==(const Root&, const Root&) = default;
};

Weight root_vector(const Superalgebra& alg, const Root& r);
Weight odd_root_vector(const Superalgebra& alg, OddRoot r);

/// All roots of gl(m|n), positive and negative.
std::vector<Root> all_roots(const Superalgebra& alg);
/// Delta_{1,+} in row-major order beta_{11}, beta_{12}, ..., beta_{mn}.
std::vector<OddRoot> odd_positive_roots(const Superalgebra& alg);

/// Root order on odd positive roots: beta_{kl} >= beta_{ij} iff k <= i and l >= j.
bool root_leq(OddRoot lower, OddRoot upper);
bool root_less(OddRoot lower, OddRoot upper);

/// (x, y) = sum eps_i eps'_i - sum delta_j delta'_j.
int bilinear_form(const Weight& x, const Weight& y);

/// Pairing (w, beta_{ij}) = w.eps(i) + w.delta(j), the hot path of the
/// atypicality code.
inline int pair_odd(const Weight& w, OddRoot r) {
  return w.eps(r.i - 1) + w.delta(r.j - 1);
}

/// Integral rho shift (m-1, ..., 0 | 0, -1, ..., 1-n). Differs from
/// rho0 - rho1 by a multiple of (sum eps - sum delta), which is orthogonal to
/// every root and Weyl-invariant.
Weight rho_tilde(const Superalgebra& alg);
/// Sum of all odd positive roots: (n, ..., n | -m, ..., -m).
Weight two_rho_one(const Superalgebra& alg);

bool is_dominant(const Weight& w);

/// Coefficients of (hi - lo) on the simple roots eps_1-eps_2, ...,
/// eps_m-delta_1, ..., delta_{n-1}-delta_n. Returns nullopt when the
/// coordinate sum of the difference is nonzero (not in the root lattice).
std::optional<std::vector<long>> simple_root_coefficients(const Weight& lo, const Weight& hi);

/// lo <= hi in the partial order generated by positive roots.
bool partial_leq(const Weight& lo, const Weight& hi);

/// Linear functional taking the value 1 on every simple root:
/// sum over combined positions p = 1..m+n of (m+n-p) * w_p. Strictly
/// increasing along the partial order, so height(hi) - height(lo) is the sum
/// of the simple-root coefficients of hi - lo.
long height(const Weight& w);

/// Dominant element of the S_m x S_n orbit (both blocks sorted descending).
Weight dominant_rep(const Weight& w);
/// Lowest element of the orbit (both blocks sorted ascending).
Weight antidominant_rep(const Weight& w);

/// d(w + rho) - rho, or nullopt when w + rho has a repeated entry in either
/// block (w + rho on a wall, so the result is not dominant).
std::optional<Weight> dot_dominant(const Weight& w);

/// All weights nu with lo <= nu <= hi, optionally only the dominant ones, in
/// the canonical linear extension (see sort_linear_extension).
std::vector<Weight> enumerate_interval(const Weight& lo, const Weight& hi, bool dominant_only,
                                       const Limits& limits = {});

/// Canonical linear extension, largest first: decreasing height (equivalently
/// increasing distance below any common upper bound), ties broken
/// lexicographically.
void sort_linear_extension(std::vector<Weight>& ws);

/// Parses "i1,...,im|j1,...,jn", optional surrounding parentheses and
/// whitespace; ';' is accepted in place of '|'.
Weight parse_weight(std::string_view text, const Superalgebra& alg);
/// Canonical text "(i1,...,im|j1,...,jn)".
std::string format_weight(const Weight& w);
std::string format_root(OddRoot r);

}  // namespace kacmult
