#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kacmult/multiplicity.hpp"
#include "kacmult/poly.hpp"
#include "kacmult/weight.hpp"

namespace kacmult {

/// A finite, order-convex set of dominant weights in the canonical linear
/// extension (largest first). Triangular inversion is exact on such sets.
class Window {
 public:
  /// All dominant weights in [lo, hi].
  static Window interval(const Weight& lo, const Weight& hi, const Limits& limits = {});
  /// Validates dominance and order-convexity of an arbitrary list.
  static Window from_weights(std::vector<Weight> weights, const Limits& limits = {});

  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(const Weight& w) const;
  bool contains(const Weight& w) const { return index_of(w).has_value(); }

 private:
  explicit Window(std::vector<Weight> weights);

  std::vector<Weight> weights_;
  std::map<Weight, std::size_t, LexLess> index_;
};

/// Lower-triangular q-matrix on a window: entry (lambda, mu) can be nonzero
/// only when mu <= lambda. Rows and columns are indexed by window position, so
/// nonzero entries sit at (i, j) with i <= j.
class TriangularQMatrix {
 public:
  explicit TriangularQMatrix(Window window);

  static TriangularQMatrix identity(Window window);

  const Window& window() const { return window_; }
  std::size_t size() const { return window_.size(); }

  const QPolynomial& at(std::size_t row, std::size_t col) const;
  QPolynomial entry(const Weight& row, const Weight& col) const;
  /// Sets (row, col); throws PreconditionError unless window[col] <= window[row].
  void set(std::size_t row, std::size_t col, QPolynomial value);

  const std::map<std::size_t, QPolynomial>& row_entries(std::size_t row) const { return rows_[row]; }
  std::size_t nonzeros() const;

  /// Columns whose conjectured support lies entirely inside the window. Only
  /// populated by assemble_aq; empty otherwise.
  const std::vector<bool>& complete_columns() const { return complete_; }
  void set_complete_columns(std::vector<bool> c) { complete_ = std::move(c); }

  friend bool operator==(const TriangularQMatrix& a, const TriangularQMatrix& b);

 private:
  Window window_;
  std::vector<std::map<std::size_t, QPolynomial>> rows_;
  std::vector<bool> complete_;
};

/// A_q on a window: column mu holds (-q)^{|theta|} at every lambda_theta that
/// lies in the window.
TriangularQMatrix assemble_aq(const Window& window, const Limits& limits = {});

/// Exact inverse of a unitriangular matrix by forward substitution, one
/// column at a time.
TriangularQMatrix invert_unitriangular(const TriangularQMatrix& m);

/// Product on a common window.
TriangularQMatrix multiply(const TriangularQMatrix& a, const TriangularQMatrix& b);
bool is_identity(const TriangularQMatrix& m);

/// Entrywise evaluation at q = value, as a dense matrix in window order.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> specialize(const TriangularQMatrix& m,
                                                                       std::int64_t value);

/// g0 highest weights of Sym^i(g_{-1}): one per partition sigma of i with at
/// most min(m, n) parts. For m <= n these are
/// (-sigma_m, ..., -sigma_1 | sigma_1, ..., sigma_m, 0, ..., 0); for m > n
/// the gl(n|m) answer is transported by w -> (-rev(delta) | -rev(eps)).
std::vector<Weight> sym_decomposition(const Superalgebra& alg, int i);

/// q^{|sigma|} when mu is one of the Sym weights, 0 otherwise.
QPolynomial kl_zero_closed_form(const Weight& mu);

/// Transpose symmetry gl(m|n) -> gl(n|m): (eps | delta) -> (-rev(delta) | -rev(eps)).
Weight transpose_weight(const Weight& w);

/// Partitions of i into at most `parts` parts, weakly decreasing, zero padded.
std::vector<std::vector<int>> partitions(int i, int parts);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  /// Negative KL coefficients; recorded, not failures.
  std::vector<std::string> falsification_events;
  std::int64_t min_coefficient = 0;
  std::int64_t max_coefficient = 0;
  TriangularQMatrix aq;
  TriangularQMatrix kq;

  bool all_passed() const;
};

/// Consistency checks on a window: A_q K_q = K_q A_q = I, full column sums
/// (1-q)^{#mu}, block structure by atypicality degree, K_{0,mu} against the
/// closed form when 0 is in the window, and truncated partial sums of
/// sum_lambda K_{lambda,mu} against (1-q)^{-#mu} through the degree the
/// window guarantees (see guaranteed_series_degree).
IdentityReport verify_identities(const Window& window, const Limits& limits = {});

/// Largest D such that every lambda reachable from column `col` in at most D
/// steps of A_q lies in the window; nullopt when the reachable set never
/// leaves it. Terms of q-degree <= D of sum_lambda K_{lambda,mu} only involve
/// such lambda, so the window's partial sum is exact through degree D.
std::optional<int> guaranteed_series_degree(const TriangularQMatrix& aq, std::size_t col);

/// Coefficients of (1-q)^{-r} through degree d: C(k + r - 1, r - 1).
QPolynomial inverse_power_series(int r, int d);

}  // namespace kacmult
