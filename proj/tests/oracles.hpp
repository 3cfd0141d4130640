#pragma once

// Brute-force reference computations, written independently of the library
// code they check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kacmult/weight.hpp"

namespace oracle {

using kacmult::Weight;

inline std::vector<int> flat(const Weight& w) { return w.coords(); }

inline Weight unflat(const std::vector<int>& c, int m) {
  Eigen::VectorXi e(m), d(static_cast<int>(c.size()) - m);
  for (int i = 0; i < m; ++i) e(i) = c[static_cast<std::size_t>(i)];
  for (int j = 0; j < d.size(); ++j) d(j) = c[static_cast<std::size_t>(m + j)];
  return {e, d};
}

// lo <= hi: hi - lo is a nonnegative integer combination of the simple roots
// e_p - e_{p+1} of the combined coordinate list, i.e. every prefix sum of the
// difference is >= 0 and the total is 0.
inline bool leq(const Weight& lo, const Weight& hi) {
  const auto a = flat(lo), b = flat(hi);
  long s = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    s += b[p] - a[p];
    if (s < 0) return false;
  }
  return s == 0;
}

inline bool dominant(const Weight& w) {
  return std::is_sorted(w.eps.begin(), w.eps.end(), std::greater<>()) &&
         std::is_sorted(w.delta.begin(), w.delta.end(), std::greater<>());
}

// Every weight nu with lo <= nu <= hi, by scanning a coordinate box that
// provably contains the interval.
inline std::vector<Weight> interval(const Weight& lo, const Weight& hi, bool dominant_only) {
  const auto a = flat(lo), b = flat(hi);
  const std::size_t len = a.size();
  std::vector<long> prefix(len, 0);
  long s = 0;
  for (std::size_t p = 0; p < len; ++p) prefix[p] = (s += b[p] - a[p]);
  std::vector<int> from(len), to(len);
  for (std::size_t p = 0; p < len; ++p) {
    const long before = p ? prefix[p - 1] : 0;
    from[p] = static_cast<int>(b[p] - prefix[p]);
    to[p] = static_cast<int>(b[p] + before);
  }
  std::vector<Weight> out;
  std::vector<int> c = from;
  while (true) {
    const Weight w = unflat(c, lo.m());
    if (leq(lo, w) && leq(w, hi) && (!dominant_only || dominant(w))) out.push_back(w);
    std::size_t p = 0;
    while (p < len && c[p] == to[p]) {
      c[p] = from[p];
      ++p;
    }
    if (p == len) break;
    ++c[p];
  }
  return out;
}

inline Weight random_dominant(std::mt19937_64& rng, int m, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Eigen::VectorXi e(m), f(n);
  for (auto& x : e) x = d(rng);
  for (auto& x : f) x = d(rng);
  std::sort(e.begin(), e.end(), std::greater<>());
  std::sort(f.begin(), f.end(), std::greater<>());
  return {e, f};
}

// Weight multiplicities of the gl(k) irreducible with highest weight `hw` by
// listing all semistandard tableaux of the shifted shape.
inline std::map<std::vector<int>, long> ssyt_character(std::vector<int> hw) {
  const int k = static_cast<int>(hw.size());
  const int shift = hw.empty() ? 0 : hw.back();
  for (int& x : hw) x -= shift;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < hw[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  std::map<std::vector<int>, long> out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> content(static_cast<std::size_t>(k), shift);
      for (const auto& [cell, v] : fill) ++content[static_cast<std::size_t>(v)];
      ++out[content];
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 0;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v < k; ++v) {
      fill[{r, c}] = v;
      rec(idx + 1);
    }
    fill.erase({r, c});
  };
  rec(0);
  return out;
}

// Hook-content formula for the number of semistandard tableaux.
inline long hook_content_dimension(std::vector<int> hw) {
  const int k = static_cast<int>(hw.size());
  if (k == 0) return 1;
  const int shift = hw.back();
  for (int& x : hw) x -= shift;
  std::vector<int> conj(static_cast<std::size_t>(hw.empty() ? 0 : hw[0]), 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < hw[static_cast<std::size_t>(r)]; ++c) ++conj[static_cast<std::size_t>(c)];
  long double num = 1, den = 1;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < hw[static_cast<std::size_t>(r)]; ++c) {
      num *= k + c - r;
      den *= (hw[static_cast<std::size_t>(r)] - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
    }
  return static_cast<long>(num / den + 0.5L);
}

}  // namespace oracle
