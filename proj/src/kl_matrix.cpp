#include "kacmult/kl_matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "kacmult/atypicality.hpp"

namespace kacmult {

namespace {

const QPolynomial kZero{};

}  // namespace

Window::Window(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!index_.emplace(weights_[i], i).second)
      throw PreconditionError("window lists " + format_weight(weights_[i]) + " twice");
}

Window Window::interval(const Weight& lo, const Weight& hi, const Limits& limits) {
  return Window(enumerate_interval(lo, hi, true, limits));
}

Window Window::from_weights(std::vector<Weight> weights, const Limits& limits) {
  for (const Weight& w : weights)
    if (!is_dominant(w)) throw PreconditionError("window weight " + format_weight(w) + " is not dominant");
  sort_linear_extension(weights);
  Window win(std::move(weights));
  for (std::size_t a = 0; a < win.size(); ++a)
    for (std::size_t b = a + 1; b < win.size(); ++b) {
      if (!partial_leq(win[b], win[a])) continue;
      for (const Weight& between : enumerate_interval(win[b], win[a], true, limits))
        if (!win.contains(between))
          throw PreconditionError("window is not order-convex: missing " + format_weight(between) +
                                  " between " + format_weight(win[b]) + " and " + format_weight(win[a]));
    }
  return win;
}

std::optional<std::size_t> Window::index_of(const Weight& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TriangularQMatrix::TriangularQMatrix(Window window)
    : window_(std::move(window)), rows_(window_.size()) {}

TriangularQMatrix TriangularQMatrix::identity(Window window) {
  TriangularQMatrix m(std::move(window));
  for (std::size_t i = 0; i < m.size(); ++i) m.rows_[i].emplace(i, QPolynomial(1));
  return m;
}

const QPolynomial& TriangularQMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  const auto it = r.find(col);
  return it == r.end() ? kZero : it->second;
}

QPolynomial TriangularQMatrix::entry(const Weight& row, const Weight& col) const {
  const auto i = window_.index_of(row);
  const auto j = window_.index_of(col);
  if (!i || !j) throw PreconditionError("entry: weight outside the window");
  return at(*i, *j);
}

void TriangularQMatrix::set(std::size_t row, std::size_t col, QPolynomial value) {
  if (value.is_zero()) {
    rows_.at(row).erase(col);
    return;
  }
  if (row > col || !partial_leq(window_[col], window_[row]))
    throw PreconditionError("entry (" + format_weight(window_[row]) + ", " + format_weight(window_[col]) +
                            ") violates triangularity");
  rows_.at(row)[col] = std::move(value);
}

std::size_t TriangularQMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool operator==(const TriangularQMatrix& a, const TriangularQMatrix& b) {
  return a.window_.weights() == b.window_.weights() && a.rows_ == b.rows_;
}

TriangularQMatrix assemble_aq(const Window& window, const Limits& limits) {
  TriangularQMatrix m(window);
  std::vector<bool> complete(window.size(), true);
  for (std::size_t j = 0; j < window.size(); ++j) {
    const MultiplicityColumn col = column_q(window[j], limits);
    for (const ColumnEntry& e : col.entries) {
      const auto i = window.index_of(e.lambda_theta);
      if (!i) {
        complete[j] = false;
        continue;
      }
      // A_q entries have degree |theta| <= r <= mn.
      if (e.coeff.degree() > window[j].m() * window[j].n())
        throw InternalError("A_q entry exceeds degree m*n");
      m.set(*i, j, e.coeff);
    }
    if (!m.at(j, j).is_one()) throw InternalError("A_q diagonal entry is not 1 at " + format_weight(window[j]));
  }
  m.set_complete_columns(std::move(complete));
  return m;
}

TriangularQMatrix invert_unitriangular(const TriangularQMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.at(i, i).is_one())
      throw PreconditionError("invert_unitriangular: diagonal entry at " + format_weight(m.window()[i]) +
                              " is not 1");
    if (!m.row_entries(i).empty() && m.row_entries(i).begin()->first < i)
      throw PreconditionError("invert_unitriangular: matrix is not triangular");
  }
  TriangularQMatrix inv(m.window());
  std::vector<QPolynomial> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Solve m * x = e_j from the bottom (row j) up.
    std::fill(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(j) + 1, QPolynomial{});
    col[j] = QPolynomial(1);
    for (std::size_t i = j; i-- > 0;) {
      QPolynomial acc;
      for (const auto& [l, v] : m.row_entries(i)) {
        if (l <= i) continue;
        if (l > j) break;
        if (!col[l].is_zero()) acc += v * col[l];
      }
      col[i] = -acc;
    }
    for (std::size_t i = 0; i <= j; ++i)
      if (!col[i].is_zero()) inv.set(i, j, col[i]);
  }
  return inv;
}

TriangularQMatrix multiply(const TriangularQMatrix& a, const TriangularQMatrix& b) {
  if (a.window().weights() != b.window().weights()) throw ShapeError("multiply: windows differ");
  TriangularQMatrix out(a.window());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::map<std::size_t, QPolynomial> acc;
    for (const auto& [l, av] : a.row_entries(i))
      for (const auto& [j, bv] : b.row_entries(l)) acc[j] += av * bv;
    for (auto& [j, v] : acc)
      if (!v.is_zero()) out.set(i, j, std::move(v));
  }
  return out;
}

bool is_identity(const TriangularQMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& r = m.row_entries(i);
    if (r.size() != 1 || r.begin()->first != i || !r.begin()->second.is_one()) return false;
  }
  return true;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> specialize(const TriangularQMatrix& m,
                                                                       std::int64_t value) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& [j, v] : m.row_entries(i))
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.evaluate(value);
  return out;
}

std::vector<std::vector<int>> partitions(int i, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (static_cast<int>(cur.size()) == parts) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 0; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (i >= 0 && parts >= 0) rec(rec, i, i);
  return out;
}

Weight transpose_weight(const Weight& w) {
  Weight t{-w.delta.reverse(), -w.eps.reverse()};
  return t;
}

std::vector<Weight> sym_decomposition(const Superalgebra& alg, int i) {
  if (alg.m > alg.n) {
    std::vector<Weight> out;
    for (const Weight& w : sym_decomposition(Superalgebra{alg.n, alg.m, alg.m * alg.n}, i))
      out.push_back(transpose_weight(w));
    return out;
  }
  std::vector<Weight> out;
  for (const auto& sigma : partitions(i, alg.m)) {
    Weight w = Weight::zero(alg);
    for (int k = 0; k < alg.m; ++k) {
      w.eps(alg.m - 1 - k) = -sigma[static_cast<std::size_t>(k)];
      w.delta(k) = sigma[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(w));
  }
  return out;
}

QPolynomial kl_zero_closed_form(const Weight& mu) {
  if (mu.m() > mu.n()) return kl_zero_closed_form(transpose_weight(mu));
  const int m = mu.m();
  for (int j = m; j < mu.n(); ++j)
    if (mu.delta(j) != 0) return {};
  int total = 0;
  for (int k = 0; k < m; ++k) {
    const int s = mu.delta(k);
    if (s < 0 || (k > 0 && s > mu.delta(k - 1)) || mu.eps(m - 1 - k) != -s) return {};
    total += s;
  }
  return QPolynomial::monomial(1, total);
}

QPolynomial inverse_power_series(int r, int d) {
  if (r == 0) return QPolynomial(1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1);
  // C(k + r - 1, r - 1) by the recurrence C(k) = C(k-1) * (k + r - 1) / k.
  std::int64_t v = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) v = v * (k + r - 1) / k;
    c[static_cast<std::size_t>(k)] = v;
  }
  return QPolynomial(std::move(c));
}

std::optional<int> guaranteed_series_degree(const TriangularQMatrix& aq, std::size_t col) {
  const auto& complete = aq.complete_columns();
  if (complete.size() != aq.size())
    throw PreconditionError("guaranteed_series_degree needs a matrix built by assemble_aq");
  // Column j of A_q lists rows i < j; walk upwards breadth first.
  std::vector<int> dist(aq.size(), -1);
  std::deque<std::size_t> queue{col};
  dist[col] = 0;
  std::optional<int> best;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!complete[v]) {
      best = best ? std::min(*best, dist[v]) : dist[v];
      continue;
    }
    for (std::size_t i = 0; i < v; ++i)
      if (dist[i] < 0 && !aq.at(i, v).is_zero()) {
        dist[i] = dist[v] + 1;
        queue.push_back(i);
      }
  }
  return best;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_identities(const Window& window, const Limits& limits) {
  IdentityReport rep{{}, {}, 0, 0, assemble_aq(window, limits), TriangularQMatrix(window)};
  rep.kq = invert_unitriangular(rep.aq);

  rep.checks.push_back({"A_q K_q = I", is_identity(multiply(rep.aq, rep.kq)), ""});
  rep.checks.push_back({"K_q A_q = I", is_identity(multiply(rep.kq, rep.aq)), ""});

  std::vector<int> degree(window.size());
  for (std::size_t j = 0; j < window.size(); ++j) degree[j] = atypicality_degree(window[j]);

  IdentityCheck sums{"column sums of A_q equal (1-q)^#mu", true, ""};
  const QPolynomial one_minus_q{1, -1};
  for (std::size_t j = 0; j < window.size(); ++j) {
    QPolynomial total;
    for (const ColumnEntry& e : column_q(window[j], limits).entries) total += e.coeff;
    if (total != pow(one_minus_q, degree[j])) {
      sums.passed = false;
      sums.detail += format_weight(window[j]) + " ";
    }
  }
  rep.checks.push_back(sums);

  IdentityCheck blocks{"no entries across atypicality degrees", true, ""};
  for (const TriangularQMatrix* mat : {&rep.aq, &rep.kq})
    for (std::size_t i = 0; i < window.size(); ++i)
      for (const auto& [j, v] : mat->row_entries(i))
        if (degree[i] != degree[j]) {
          blocks.passed = false;
          blocks.detail += format_weight(window[i]) + "," + format_weight(window[j]) + " ";
        }
  rep.checks.push_back(blocks);

  if (window.size() == 0) return rep;
  const Superalgebra alg{window[0].m(), window[0].n(), window[0].m() * window[0].n()};
  if (const auto zero = window.index_of(Weight::zero(alg))) {
    IdentityCheck closed{"K_{0,mu} matches the Sym closed form", true, ""};
    for (std::size_t j = 0; j < window.size(); ++j)
      if (rep.kq.at(*zero, j) != kl_zero_closed_form(window[j])) {
        closed.passed = false;
        closed.detail += format_weight(window[j]) + " ";
      }
    rep.checks.push_back(closed);
  }

  IdentityCheck series{"partial sums of K columns match (1-q)^-#mu", true, ""};
  for (std::size_t j = 0; j < window.size(); ++j) {
    QPolynomial partial;
    for (std::size_t i = 0; i <= j; ++i) partial += rep.kq.at(i, j);
    const std::optional<int> d = guaranteed_series_degree(rep.aq, j);
    const bool ok = d ? partial.truncated(*d + 1) == inverse_power_series(degree[j], *d)
                      : (degree[j] == 0 && partial.is_one());
    if (!ok) {
      series.passed = false;
      series.detail += format_weight(window[j]) + " ";
    }
  }
  rep.checks.push_back(series);

  bool first = true;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (const auto& [j, v] : rep.kq.row_entries(i))
      for (std::int64_t c : v.coefficients()) {
        if (first) rep.min_coefficient = rep.max_coefficient = c;
        first = false;
        rep.min_coefficient = std::min(rep.min_coefficient, c);
        rep.max_coefficient = std::max(rep.max_coefficient, c);
        if (c < 0)
          rep.falsification_events.push_back("negative coefficient in K(" + format_weight(window[i]) + ", " +
                                             format_weight(window[j]) + ") = " + v.to_string());
      }
  return rep;
}

}  // namespace kacmult
