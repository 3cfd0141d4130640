#include <doctest.h>

#include "kacmult/weight.hpp"
#include "oracles.hpp"

using namespace kacmult;

TEST_CASE("parse and format round trip") {
  const Superalgebra alg(4, 5);
  const Weight w = parse_weight("(2,1,0,0;0,-2,-2,-2,-2)", alg);
  CHECK(w == Weight{{2, 1, 0, 0}, {0, -2, -2, -2, -2}});
  CHECK(format_weight(w) == "(2,1,0,0|0,-2,-2,-2,-2)");
  CHECK(parse_weight(format_weight(w), alg) == w);
  CHECK(parse_weight(" 2 , 1,0,0 | 0,-2,-2,-2,-2 ", alg) == w);
}

TEST_CASE("malformed weights") {
  const Superalgebra alg(2, 2);
  CHECK_THROWS_AS(parse_weight("1,2|3", alg), ParseError);
  CHECK_THROWS_AS(parse_weight("1,2,3|3,4", alg), ParseError);
  CHECK_THROWS_AS(parse_weight("1,x|3,4", alg), ParseError);
  CHECK_THROWS_AS(parse_weight("1,2,3,4", alg), ParseError);
  CHECK_THROWS_AS(parse_weight("(1,2|3,4", alg), ParseError);
  CHECK_THROWS_AS(parse_weight("1,2|3|4", alg), ParseError);
}

TEST_CASE("algebra guard") {
  CHECK_THROWS_AS(Superalgebra(0, 2), PreconditionError);
  CHECK_THROWS_AS(Superalgebra(6, 6), CapExceeded);
  CHECK_NOTHROW(Superalgebra(6, 6, 36));
}

TEST_CASE("shape mismatch") {
  CHECK_THROWS_AS(Weight({1, 0}, {0}) + Weight({1}, {0, 0}), ShapeError);
}

TEST_CASE("rho vectors") {
  const Superalgebra alg(4, 5);
  CHECK(rho_tilde(alg) == Weight{{3, 2, 1, 0}, {0, -1, -2, -3, -4}});
  CHECK(two_rho_one(alg) == Weight{{5, 5, 5, 5}, {-4, -4, -4, -4, -4}});
}

TEST_CASE("integral rho differs from rho0 - rho1 by a root-orthogonal vector") {
  // Doubled coordinates keep the half-integer rho integral.
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const Superalgebra alg(m, n);
      Weight two_rho = Weight::zero(alg);
      for (int i = 1; i <= m; ++i) two_rho.eps(i - 1) = (m - 2 * i + 1) - n;
      for (int j = 1; j <= n; ++j) two_rho.delta(j - 1) = (n - 2 * j + 1) + m;
      const Weight diff = 2 * rho_tilde(alg) - two_rho;
      for (const Root& r : all_roots(alg)) CHECK(bilinear_form(diff, root_vector(alg, r)) == 0);
      // The same difference leaves the pairing with every odd root unchanged.
      for (OddRoot b : odd_positive_roots(alg)) CHECK(pair_odd(diff, b) == 0);
    }
}

TEST_CASE("bilinear form on odd roots") {
  const Superalgebra alg(3, 3);
  for (OddRoot a : odd_positive_roots(alg))
    for (OddRoot b : odd_positive_roots(alg))
      CHECK(bilinear_form(odd_root_vector(alg, a), odd_root_vector(alg, b)) == int(a.i == b.i) - int(a.j == b.j));
}

TEST_CASE("root order") {
  CHECK(root_less({4, 1}, {2, 2}));
  CHECK(root_less({2, 2}, {1, 4}));
  CHECK(root_leq({2, 2}, {2, 2}));
  CHECK_FALSE(root_leq({1, 1}, {2, 2}));
  CHECK_FALSE(root_leq({2, 2}, {1, 1}));
}

TEST_CASE("partial order agrees with the prefix-sum oracle and is a partial order") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    std::vector<Weight> ws;
    for (int t = 0; t < 40; ++t) {
      Eigen::VectorXi e(m), d(n);
      for (auto& x : e) x = coord(rng);
      for (auto& x : d) x = coord(rng);
      // Fix the coordinate sum so that comparable pairs are common.
      d(n - 1) -= e.sum() + d.sum();
      ws.emplace_back(e, d);
    }
    for (const Weight& a : ws) {
      CHECK(partial_leq(a, a));
      for (const Weight& b : ws) {
        CHECK(partial_leq(a, b) == oracle::leq(a, b));
        if (partial_leq(a, b) && partial_leq(b, a)) CHECK(a == b);
        if (partial_leq(a, b) && !(a == b)) CHECK(height(a) < height(b));
        for (const Weight& c : ws)
          if (partial_leq(a, b) && partial_leq(b, c)) CHECK(partial_leq(a, c));
      }
    }
  }
}

TEST_CASE("height is 1 on simple roots") {
  const Superalgebra alg(3, 2);
  const Weight z = Weight::zero(alg);
  for (int p = 0; p < alg.rank() - 1; ++p) {
    std::vector<int> c(static_cast<std::size_t>(alg.rank()), 0);
    c[static_cast<std::size_t>(p)] = 1;
    c[static_cast<std::size_t>(p + 1)] = -1;
    CHECK(height(oracle::unflat(c, 3)) - height(z) == 1);
  }
}

TEST_CASE("interval enumeration matches the box scan") {
  const std::vector<std::pair<Weight, Weight>> cases = {
      {{{-3, -3}, {3, 3}}, {{0, 0}, {0, 0}}},
      {{{-2, -2}, {2, 2}}, {{2, 1}, {-1, -2}}},
      {{{-1, -1, -2}, {2, 2}}, {{1, 0, 0}, {0, -1}}},
      {{{-2}, {1, 1}}, {{1}, {-1, 0}}},
  };
  for (const auto& [lo, hi] : cases)
    for (bool dom : {false, true}) {
      auto got = enumerate_interval(lo, hi, dom);
      auto want = oracle::interval(lo, hi, dom);
      std::sort(want.begin(), want.end(), LexLess{});
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end(), LexLess{});
      CHECK(sorted == want);
      // Output order is a linear extension, largest first.
      for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = i + 1; j < got.size(); ++j) CHECK_FALSE(partial_leq(got[i], got[j]));
    }
}

TEST_CASE("interval is closed under betweenness") {
  const Weight lo{{-2, -3}, {3, 2}}, hi{{2, 1}, {-1, -2}};
  const auto ws = enumerate_interval(lo, hi, false);
  std::set<Weight, LexLess> in(ws.begin(), ws.end());
  for (const Weight& a : ws)
    for (const Weight& b : oracle::interval(lo, hi, false))
      if (partial_leq(a, b) || partial_leq(b, a)) CHECK(in.count(b) == 1);
}

TEST_CASE("interval errors and caps") {
  CHECK_THROWS_AS(enumerate_interval(Weight{{1}, {0}}, Weight{{0}, {0}}, false), PreconditionError);
  Limits tiny;
  tiny.window = 3;
  CHECK_THROWS_AS(enumerate_interval(Weight{{-3, -3}, {3, 3}}, Weight{{0, 0}, {0, 0}}, true, tiny), CapExceeded);
}

TEST_CASE("dot-dominant map") {
  // w + rho = (7,8,1,2|-2,-8,-4,-7,-6) in the gl(4|5) worked example.
  const auto d = dot_dominant(Weight{{4, 6, 0, 2}, {-2, -7, -2, -4, -2}});
  REQUIRE(d.has_value());
  CHECK(*d == Weight{{5, 5, 1, 1}, {-2, -3, -4, -4, -4}});
  CHECK(dot_dominant(Weight{{0, 1}, {0, 0}}) == std::nullopt);
  CHECK(dot_dominant(Weight{{3, 1}, {0, 0}}) == Weight{{3, 1}, {0, 0}});
}

TEST_CASE("orbit representatives") {
  const Weight w{{0, 3, 1}, {2, -1}};
  CHECK(dominant_rep(w) == Weight{{3, 1, 0}, {2, -1}});
  CHECK(antidominant_rep(w) == Weight{{0, 1, 3}, {-1, 2}});
  CHECK(is_dominant(dominant_rep(w)));
  CHECK_FALSE(is_dominant(w));
}
