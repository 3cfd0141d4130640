#include "kacmult/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace kacmult {

namespace {

void require_same_shape(const Weight& a, const Weight& b, const char* where) {
  if (a.m() != b.m() || a.n() != b.n()) {
    std::ostringstream os;
    os << where << ": shape mismatch gl(" << a.m() << "|" << a.n() << ") vs gl(" << b.m() << "|"
       << b.n() << ")";
    throw ShapeError(os.str());
  }
}

bool strictly_decreasing(const Eigen::VectorXi& v) {
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (v(i) >= v(i - 1)) return false;
  return true;
}

bool weakly_decreasing(const Eigen::VectorXi& v) {
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (v(i) > v(i - 1)) return false;
  return true;
}

void sort_desc(Eigen::VectorXi& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

Superalgebra::Superalgebra(int m_, int n_, int max_odd_roots) : m(m_), n(n_) {
  if (m < 1 || n < 1)
    throw PreconditionError("gl(m|n) requires m >= 1 and n >= 1");
  if (m * n > max_odd_roots)
    throw CapExceeded("gl(" + std::to_string(m) + "|" + std::to_string(n) +
                      ") exceeds the m*n guard of " + std::to_string(max_odd_roots));
}

Weight::Weight(std::initializer_list<int> e, std::initializer_list<int> d)
    : eps(static_cast<Eigen::Index>(e.size())), delta(static_cast<Eigen::Index>(d.size())) {
  std::copy(e.begin(), e.end(), eps.begin());
  std::copy(d.begin(), d.end(), delta.begin());
}

Weight Weight::zero(const Superalgebra& alg) {
  return {Eigen::VectorXi::Zero(alg.m), Eigen::VectorXi::Zero(alg.n)};
}

std::vector<int> Weight::coords() const {
  std::vector<int> out(eps.begin(), eps.end());
  out.insert(out.end(), delta.begin(), delta.end());
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_shape(*this, o, "weight addition");
  eps += o.eps;
  delta += o.delta;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_shape(*this, o, "weight subtraction");
  eps -= o.eps;
  delta -= o.delta;
  return *this;
}

Weight operator+(Weight a, const Weight& b) { return a += b; }
Weight operator-(Weight a, const Weight& b) { return a -= b; }
Weight operator-(Weight a) {
  a.eps = -a.eps;
  a.delta = -a.delta;
  return a;
}
Weight operator*(int k, Weight w) {
  w.eps *= k;
  w.delta *= k;
  return w;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.m() == b.m() && a.n() == b.n() && a.eps == b.eps && a.delta == b.delta;
}

bool LexLess::operator()(const Weight& a, const Weight& b) const {
  if (a.m() != b.m()) return a.m() < b.m();
  if (a.n() != b.n()) return a.n() < b.n();
  auto ca = std::lexicographical_compare_three_way(a.eps.begin(), a.eps.end(), b.eps.begin(),
                                                   b.eps.end());
  if (ca != 0) return ca < 0;
  return std::lexicographical_compare(a.delta.begin(), a.delta.end(), b.delta.begin(),
                                      b.delta.end());
}

Weight root_vector(const Superalgebra& alg, const Root& r) {
  Weight w = Weight::zero(alg);
  switch (r.kind) {
    case Root::Kind::even_eps:
      w.eps(r.a - 1) += 1;
      w.eps(r.b - 1) -= 1;
      break;
    case Root::Kind::even_delta:
      w.delta(r.a - 1) += 1;
      w.delta(r.b - 1) -= 1;
      break;
    case Root::Kind::odd:
      w.eps(r.a - 1) += r.negative ? -1 : 1;
      w.delta(r.b - 1) -= r.negative ? -1 : 1;
      break;
  }
  return w;
}

Weight odd_root_vector(const Superalgebra& alg, OddRoot r) {
  if (r.i < 1 || r.i > alg.m || r.j < 1 || r.j > alg.n)
    throw PreconditionError("odd root index out of range: " + format_root(r));
  return root_vector(alg, Root{Root::Kind::odd, r.i, r.j, false});
}

std::vector<Root> all_roots(const Superalgebra& alg) {
  std::vector<Root> out;
  for (int a = 1; a <= alg.m; ++a)
    for (int b = 1; b <= alg.m; ++b)
      if (a != b) out.push_back({Root::Kind::even_eps, a, b, false});
  for (int a = 1; a <= alg.n; ++a)
    for (int b = 1; b <= alg.n; ++b)
      if (a != b) out.push_back({Root::Kind::even_delta, a, b, false});
  for (int a = 1; a <= alg.m; ++a)
    for (int b = 1; b <= alg.n; ++b) {
      out.push_back({Root::Kind::odd, a, b, false});
      out.push_back({Root::Kind::odd, a, b, true});
    }
  return out;
}

std::vector<OddRoot> odd_positive_roots(const Superalgebra& alg) {
  std::vector<OddRoot> out;
  out.reserve(static_cast<std::size_t>(alg.m * alg.n));
  for (int i = 1; i <= alg.m; ++i)
    for (int j = 1; j <= alg.n; ++j) out.push_back({i, j});
  return out;
}

bool root_leq(OddRoot lower, OddRoot upper) { return upper.i <= lower.i && upper.j >= lower.j; }
bool root_less(OddRoot lower, OddRoot upper) { return lower != upper && root_leq(lower, upper); }

int bilinear_form(const Weight& x, const Weight& y) {
  require_same_shape(x, y, "bilinear_form");
  return x.eps.dot(y.eps) - x.delta.dot(y.delta);
}

Weight rho_tilde(const Superalgebra& alg) {
  Weight r = Weight::zero(alg);
  for (int i = 0; i < alg.m; ++i) r.eps(i) = alg.m - 1 - i;
  for (int j = 0; j < alg.n; ++j) r.delta(j) = -j;
  return r;
}

Weight two_rho_one(const Superalgebra& alg) {
  return {Eigen::VectorXi::Constant(alg.m, alg.n), Eigen::VectorXi::Constant(alg.n, -alg.m)};
}

bool is_dominant(const Weight& w) { return weakly_decreasing(w.eps) && weakly_decreasing(w.delta); }

std::optional<std::vector<long>> simple_root_coefficients(const Weight& lo, const Weight& hi) {
  require_same_shape(lo, hi, "partial order");
  const Weight d = hi - lo;
  const std::vector<int> c = d.coords();
  std::vector<long> out(c.size() - 1);
  long acc = 0;
  for (std::size_t p = 0; p + 1 < c.size(); ++p) {
    acc += c[p];
    out[p] = acc;
  }
  acc += c.back();
  if (acc != 0) return std::nullopt;
  return out;
}

bool partial_leq(const Weight& lo, const Weight& hi) {
  const auto c = simple_root_coefficients(lo, hi);
  return c && std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
}

long height(const Weight& w) {
  const std::vector<int> c = w.coords();
  const long positions = static_cast<long>(c.size());
  long h = 0;
  for (long p = 0; p < positions; ++p) h += (positions - 1 - p) * c[static_cast<std::size_t>(p)];
  return h;
}

Weight dominant_rep(const Weight& w) {
  Weight out = w;
  sort_desc(out.eps);
  sort_desc(out.delta);
  return out;
}

Weight antidominant_rep(const Weight& w) {
  Weight out = w;
  std::sort(out.eps.begin(), out.eps.end());
  std::sort(out.delta.begin(), out.delta.end());
  return out;
}

std::optional<Weight> dot_dominant(const Weight& w) {
  const Superalgebra alg{w.m(), w.n(), w.m() * w.n()};
  const Weight rho = rho_tilde(alg);
  Weight shifted = dominant_rep(w + rho);
  if (!strictly_decreasing(shifted.eps) || !strictly_decreasing(shifted.delta)) return std::nullopt;
  return shifted - rho;
}

void sort_linear_extension(std::vector<Weight>& ws) {
  std::vector<std::pair<long, std::size_t>> keys(ws.size());
  for (std::size_t k = 0; k < ws.size(); ++k) keys[k] = {-height(ws[k]), k};
  std::vector<std::size_t> order(ws.size());
  std::iota(order.begin(), order.end(), 0);
  LexLess lex;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].first != keys[b].first) return keys[a].first < keys[b].first;
    return lex(ws[a], ws[b]);
  });
  std::vector<Weight> sorted;
  sorted.reserve(ws.size());
  for (std::size_t k : order) sorted.push_back(std::move(ws[k]));
  ws = std::move(sorted);
}

std::vector<Weight> enumerate_interval(const Weight& lo, const Weight& hi, bool dominant_only,
                                       const Limits& limits) {
  const auto bounds = simple_root_coefficients(lo, hi);
  if (!bounds || std::any_of(bounds->begin(), bounds->end(), [](long x) { return x < 0; }))
    throw PreconditionError("enumerate_interval: " + format_weight(lo) + " is not below " +
                            format_weight(hi));

  const int m = lo.m();
  const std::vector<int> base = lo.coords();
  const std::size_t positions = base.size();
  std::vector<long> coef(positions, 0);  // coef[p] for p < positions - 1; last stays 0
  std::vector<int> coord(positions, 0);
  std::vector<Weight> out;
  std::size_t nodes = 0;
  const std::size_t node_cap = limits.window * 64 + 1024;

  auto block_ok = [&](std::size_t p) {
    if (!dominant_only) return true;
    const bool block_start = p == 0 || p == static_cast<std::size_t>(m);
    return block_start || coord[p] <= coord[p - 1];
  };

  std::function<void(std::size_t)> descend = [&](std::size_t p) {
    if (++nodes > node_cap)
      throw CapExceeded("enumerate_interval: search exceeded node cap");
    const long prev = p == 0 ? 0 : coef[p - 1];
    if (p + 1 == positions) {
      coord[p] = static_cast<int>(base[p] - prev);
      if (!block_ok(p)) return;
      Weight w = lo;
      for (std::size_t q = 0; q < positions; ++q) {
        if (q < static_cast<std::size_t>(m))
          w.eps(static_cast<Eigen::Index>(q)) = coord[q];
        else
          w.delta(static_cast<Eigen::Index>(q - m)) = coord[q];
      }
      out.push_back(std::move(w));
      if (out.size() > limits.window)
        throw CapExceeded("enumerate_interval: window exceeds cap of " +
                          std::to_string(limits.window) + " weights");
      return;
    }
    for (long c = 0; c <= (*bounds)[p]; ++c) {
      coef[p] = c;
      coord[p] = static_cast<int>(base[p] + c - prev);
      if (block_ok(p)) descend(p + 1);
    }
  };
  descend(0);
  sort_linear_extension(out);
  return out;
}

Weight parse_weight(std::string_view text, const Superalgebra& alg) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parenthesis in weight '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  const auto bar = s.find_first_of("|;");
  if (bar == std::string::npos || s.find_first_of("|;", bar + 1) != std::string::npos)
    throw ParseError("weight '" + std::string(text) + "' must contain exactly one '|'");

  auto parse_block = [&](std::string_view block, int expected, const char* name) {
    std::vector<int> vals;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = block.find(',', pos);
      const std::string_view tok = block.substr(pos, comma == std::string_view::npos ? block.npos : comma - pos);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("malformed integer '" + std::string(tok) + "' in weight '" +
                         std::string(text) + "'");
      vals.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(vals.size()) != expected)
      throw ParseError(std::string(name) + " block of '" + std::string(text) + "' has " +
                       std::to_string(vals.size()) + " entries, expected " + std::to_string(expected));
    Eigen::VectorXi v(expected);
    std::copy(vals.begin(), vals.end(), v.begin());
    return v;
  };

  const std::string_view sv(s);
  return {parse_block(sv.substr(0, bar), alg.m, "eps"), parse_block(sv.substr(bar + 1), alg.n, "delta")};
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < w.eps.size(); ++i) os << (i ? "," : "") << w.eps(i);
  os << '|';
  for (Eigen::Index j = 0; j < w.delta.size(); ++j) os << (j ? "," : "") << w.delta(j);
  os << ')';
  return os.str();
}

std::string format_root(OddRoot r) {
  return "b(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

}  // namespace kacmult
