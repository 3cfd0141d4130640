#include "kacmult/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "kacmult/atypicality.hpp"
#include "kacmult/characters.hpp"
#include "kacmult/multiplicity.hpp"

namespace kacmult {

namespace {

constexpr std::size_t kMaxReported = 5;

json sorted_roots(std::vector<OddRoot> rs) {
  std::sort(rs.begin(), rs.end());
  json a = json::array();
  for (OddRoot r : rs) a.push_back(to_json(r));
  return a;
}

json roots(std::initializer_list<std::pair<int, int>> rs) {
  std::vector<OddRoot> v;
  for (auto [i, j] : rs) v.push_back({i, j});
  return sorted_roots(v);
}

CriterionOutcome compare(json expected, json actual) {
  CriterionOutcome out;
  out.status = expected == actual ? CheckStatus::pass : CheckStatus::fail;
  out.expected = std::move(expected);
  out.actual = std::move(actual);
  return out;
}

// Counts failures over a suite and keeps the first few descriptions.
struct FailureLog {
  std::size_t count = 0;
  std::vector<std::string> first;

  void add(std::string what) {
    ++count;
    if (first.size() < kMaxReported) first.push_back(std::move(what));
  }
  json to_json() const { return {{"failures", count}, {"first", first}}; }
};

CriterionOutcome from_log(const FailureLog& log, json extra_actual = json::object()) {
  CriterionOutcome out;
  out.status = log.count == 0 ? CheckStatus::pass : CheckStatus::fail;
  out.expected = {{"failures", 0}};
  out.actual = log.to_json();
  out.actual.update(extra_actual);
  return out;
}

json poly_map_json(const WeightPolyMap& m) {
  json o = json::object();
  for (const auto& [w, p] : m)
    if (!p.is_zero()) o[format_weight(w)] = to_json(p);
  return o;
}

// ---------------------------------------------------------------------------

CriterionOutcome example_atypicality(const VerifyOptions& opt) {
  const Weight mu{{2, 1, 0, 0}, {0, -2, -2, -2, -2}};
  const json expected = {
      {"matrix", {{5, 2, 1, 0, -1}, {3, 0, -1, -2, -3}, {1, -2, -3, -4, -5}, {0, -3, -4, -5, -6}}},
      {"gamma", {{4, 1}, {2, 2}, {1, 4}}},
      {"delta",
       {roots({{4, 1}, {3, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 3}, {1, 4}, {1, 5}}),
        roots({{2, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 3}, {1, 4}, {1, 5}}), roots({{1, 4}, {1, 5}})}},
      {"nabla", {roots({{4, 1}, {3, 1}}), roots({{2, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 3}}), roots({{1, 4}, {1, 5}})}},
      {"k", {2, 5, 2}},
      {"connected", {{true, false, false}, {false, true, true}, {false, true, true}}},
      {"mu_zero", format_weight(Weight{{0, 0, -4, -4}, {2, 1, 0, 0, 0}})},
      {"mu_plus_k_gamma", format_weight(Weight{{4, 6, 0, 2}, {-2, -7, -2, -4, -2}})},
      {"dot_dominant", format_weight(Weight{{5, 5, 1, 1}, {-2, -3, -4, -4, -4}})},
  };

  const AtypicalityProfile p = nabla_profile(mu, opt.limits);
  json delta = json::array();
  json nabla = json::array();
  for (const auto& d : p.delta_sets) delta.push_back(sorted_roots(d));
  for (const auto& d : p.nabla_sets) nabla.push_back(sorted_roots(d));
  const auto conn = connectedness(p);
  json connected = json::array();
  for (Eigen::Index i = 0; i < conn.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < conn.cols(); ++j) r.push_back(static_cast<bool>(conn(i, j)));
    connected.push_back(r);
  }
  Weight shifted = mu;
  for (std::size_t i = 0; i < p.gamma.size(); ++i)
    shifted += p.k[i] * odd_root_vector(Superalgebra(mu.m(), mu.n()), p.gamma[i]);
  const auto dd = dot_dominant(shifted);
  json gamma = json::array();
  for (OddRoot g : p.gamma) gamma.push_back(to_json(g));

  const json actual = {
      {"matrix", to_json(atypicality_matrix(mu))},
      {"gamma", gamma},
      {"delta", delta},
      {"nabla", nabla},
      {"k", p.k},
      {"connected", connected},
      {"mu_zero", format_weight(p.mu_zero)},
      {"mu_plus_k_gamma", format_weight(shifted)},
      {"dot_dominant", dd ? format_weight(*dd) : std::string("undefined")},
  };
  return compare(expected, actual);
}

CriterionOutcome example_theta_table(const VerifyOptions& opt) {
  const Weight mu{{2, 1, 0, 0}, {0, -2, -2, -2, -2}};
  // theta, mu_theta, lambda_theta
  const std::vector<std::array<std::string, 3>> table = {
      {"(0,0,0)", "(2,1,0,0|0,-2,-2,-2,-2)", "(2,1,0,0|0,-2,-2,-2,-2)"},
      {"(1,0,0)", "(2,1,0,2|-2,-2,-2,-2,-2)", "(2,1,1,1|-2,-2,-2,-2,-2)"},
      {"(0,1,0)", "(2,6,0,0|0,-7,-2,-2,-2)", "(5,3,0,0|0,-3,-3,-3,-4)"},
      {"(0,0,1)", "(4,1,0,0|0,-2,-2,-4,-2)", "(4,1,0,0|0,-2,-2,-3,-3)"},
      {"(1,1,0)", "(2,6,0,2|-2,-7,-2,-2,-2)", "(5,3,1,1|-2,-3,-3,-3,-4)"},
      {"(1,0,1)", "(4,1,0,2|-2,-2,-2,-4,-2)", "(4,1,1,1|-2,-2,-2,-3,-3)"},
      {"(0,1,1)", "(4,6,0,0|0,-7,-2,-4,-2)", "(5,5,0,0|0,-3,-4,-4,-4)"},
      {"(1,1,1)", "(4,6,0,2|-2,-7,-2,-4,-2)", "(5,5,1,1|-2,-3,-4,-4,-4)"},
  };
  json expected = json::array();
  for (const auto& row : table) expected.push_back({row[0], row[1], row[2]});

  json actual = json::array();
  for (const auto& e : column_q(mu, opt.limits).entries) {
    std::string theta = "(";
    for (std::size_t i = 0; i < e.theta.size(); ++i) theta += (i ? "," : "") + std::to_string(e.theta[i]);
    theta += ")";
    actual.push_back({theta, format_weight(e.mu_theta), format_weight(e.lambda_theta)});
  }
  return compare(expected, actual);
}

// The three case lists for rows (x,y|-y,-x) of the gl(2|2) q-multiplicity matrix.
WeightPolyMap gl22_case_list(int x, int y) {
  auto w = [](int a, int b) { return Weight{{a, b}, {-b, -a}}; };
  const QPolynomial one(1), mq = QPolynomial::monomial(-1, 1), q2 = QPolynomial::monomial(1, 2);
  WeightPolyMap out{{w(x, y), one}};
  if (x == y) {
    out[w(x, y - 1)] = mq;
    out[w(x - 2, y - 2)] = q2;
  } else if (x == y + 1) {
    out[w(x, y - 1)] = mq;
    out[w(x - 1, y)] = mq;
    out[w(x - 2, y - 1)] = mq;
    out[w(x - 1, y - 1)] = q2;
  } else {
    out[w(x - 1, y)] = mq;
    out[w(x, y - 1)] = mq;
    out[w(x - 1, y - 1)] = q2;
  }
  return out;
}

CriterionOutcome gl22_rows(const VerifyOptions& opt) {
  json expected = json::object();
  json actual = json::object();
  for (auto [x, y] : std::vector<std::pair<int, int>>{{3, 3}, {3, 2}, {4, 1}, {1, 0}, {2, 1}, {2, 2}}) {
    const Weight lambda{{x, y}, {-y, -x}};
    expected[format_weight(lambda)] = poly_map_json(gl22_case_list(x, y));
    actual[format_weight(lambda)] = poly_map_json(row(lambda, opt.limits));
  }
  return compare(expected, actual);
}

CriterionOutcome kl_zero_row(const VerifyOptions& opt) {
  const Weight lo{{-3, -3}, {3, 3}};
  const Weight zero{{0, 0}, {0, 0}};
  const CachedWindow cw = compute_window(lo, zero, opt.limits, opt.cache);
  const Window& window = cw.kq.window();

  CriterionOutcome out;
  FailureLog missing;
  for (int x = 0; x <= 6; ++x)
    for (int y = x; x + y <= 6; ++y)
      if (!window.contains(Weight{{-x, -y}, {y, x}}))
        missing.add("window lacks " + format_weight(Weight{{-x, -y}, {y, x}}));

  json expected = json::object();
  json actual = json::object();
  const std::size_t top = *window.index_of(zero);
  std::vector<std::string> negative;
  for (std::size_t j = 0; j < window.size(); ++j) {
    const Weight& mu = window[j];
    const bool on_list = mu.eps(0) <= 0 && mu.eps(0) >= mu.eps(1) && mu.delta(0) == -mu.eps(1) &&
                         mu.delta(1) == -mu.eps(0);
    const QPolynomial want = on_list ? QPolynomial::monomial(1, -mu.eps(0) - mu.eps(1)) : QPolynomial();
    const QPolynomial got = cw.kq.at(top, j);
    expected[format_weight(mu)] = to_json(want);
    actual[format_weight(mu)] = to_json(got);
    for (std::int64_t c : got.coefficients())
      if (c < 0) negative.push_back(format_weight(mu));
  }
  out.status = (expected == actual && missing.count == 0) ? CheckStatus::pass : CheckStatus::fail;
  out.expected = std::move(expected);
  out.actual = std::move(actual);
  out.detail = "window of " + std::to_string(window.size()) + " weights";
  for (const auto& s : missing.first) out.detail += "; " + s;
  if (out.status == CheckStatus::pass && !negative.empty()) {
    out.status = CheckStatus::falsification_candidate;
    out.detail += "; negative coefficient at " + negative.front();
  }
  return out;
}

CriterionOutcome identity_suites(const VerifyOptions& opt) {
  FailureLog log;
  std::size_t falsified = 0;
  std::string first_falsified;
  std::size_t atypical = 0, fallbacks = 0, fault_hits = 0;

  for (const Weight& mu : identity_samples(opt.seed, opt.samples_per_algebra)) {
    const std::string tag = format_weight(mu);
    const Superalgebra alg(mu.m(), mu.n());
    try {
      const AtypicalityProfile profile = nabla_profile(mu, opt.limits);
      const int r = profile.degree();
      if (r > 0) ++atypical;

      for (OddRoot g : profile.gamma) {
        auto rule = delta_set_by_rule(mu, g);
        auto chosen = delta_set(mu, g, opt.limits);
        std::sort(rule.begin(), rule.end());
        std::sort(chosen.begin(), chosen.end());
        if (rule != chosen) ++fallbacks;
        if (chosen != delta_set_oracle(mu, g, opt.limits))
          log.add(tag + ": delta set of " + format_root(g) + " differs from the exhaustive search");
      }

      const MultiplicityColumn col = column_q(profile);
      QPolynomial sum;
      std::set<Weight, LexLess> seen;
      for (const auto& e : col.entries) {
        sum = sum + e.coeff;
        if (!is_dominant(e.lambda_theta)) log.add(tag + ": lambda_theta not dominant");
        if (!seen.insert(e.lambda_theta).second) log.add(tag + ": repeated lambda_theta");
        if (atypicality_degree(e.lambda_theta) != r)
          log.add(tag + ": lambda_theta " + format_weight(e.lambda_theta) + " changes the atypicality degree");
      }
      if (!(sum == pow(QPolynomial({1, -1}), r))) log.add(tag + ": column sum " + sum.to_string());

      AtypicalityProfile probe = profile;
      if (opt.inject_k_fault && r > 0) {
        probe.k[0] += 1;
        ++fault_hits;
      }
      const Weight expected_top = profile.mu_zero + two_rho_one(alg);
      try {
        const Weight top = lambda_theta(probe, std::vector<int>(static_cast<std::size_t>(r), 1));
        if (!(top == expected_top))
          log.add(tag + ": lambda(1,...,1) = " + format_weight(top) + " but mu0 + 2 rho1 = " +
                  format_weight(expected_top));
      } catch (const ConjectureFalsified& e) {
        if (!opt.inject_k_fault) throw;
        log.add(tag + ": lambda(1,...,1) undefined, mu0 + 2 rho1 = " + format_weight(expected_top));
      }
    } catch (const ConjectureFalsified& e) {
      if (falsified++ == 0) first_falsified = tag + ": " + e.what() + " (" + e.payload() + ")";
    }
  }

  CriterionOutcome out = from_log(log, {{"atypical_samples", atypical}, {"rule_fallbacks", fallbacks}});
  if (opt.inject_k_fault) out.detail = "k_1 altered on " + std::to_string(fault_hits) + " samples";
  if (log.count > 0) {
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("first: ") + log.first.front();
  } else if (falsified > 0) {
    out.status = CheckStatus::falsification_candidate;
    out.detail = std::to_string(falsified) + " falsification candidates; first: " + first_falsified;
  }
  return out;
}

CriterionOutcome mu_zero_walk(const VerifyOptions& opt) {
  FailureLog log;
  for (const Weight& mu : identity_samples(opt.seed, opt.samples_per_algebra)) {
    const Weight a = mu_zero(mu, opt.limits);
    const Weight b = odd_reflection_walk(mu).final_weight;
    if (!(a == b)) log.add(format_weight(mu) + ": " + format_weight(a) + " vs walk " + format_weight(b));
  }
  return from_log(log);
}

CriterionOutcome gl22_characters(const VerifyOptions& opt) {
  FailureLog log;
  int tested = 0;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= x; ++y) {
      const Weight mu{{x, y}, {-y, -x}};
      const std::string tag = format_weight(mu);
      ++tested;
      const CharacterMap chi = char_simple(mu, opt.limits);
      if (chi.multiplicity(mu) != 1) log.add(tag + ": multiplicity at mu is " + std::to_string(chi.multiplicity(mu)));
      const Weight mu0 = mu_zero(mu, opt.limits);
      const WeightCounts parts = decompose_g0(chi, opt.limits);
      const auto it = parts.find(mu0);
      if (it == parts.end() || it->second != 1) log.add(tag + ": mu0 " + format_weight(mu0) + " not a simple constituent");
      for (const auto& [nu, c] : parts)
        if (!partial_leq(mu0, nu)) log.add(tag + ": constituent " + format_weight(nu) + " not above mu0");
    }
  return from_log(log, {{"weights", tested}});
}

std::vector<Weight> dominant_box(int m, int n, int lo, int hi) {
  std::vector<Weight> out;
  std::vector<int> c(static_cast<std::size_t>(m + n), lo);
  while (true) {
    Weight w{Eigen::Map<Eigen::VectorXi>(c.data(), m), Eigen::Map<Eigen::VectorXi>(c.data() + m, n)};
    if (is_dominant(w)) out.push_back(w);
    std::size_t p = 0;
    while (p < c.size() && c[p] == hi) c[p++] = lo;
    if (p == c.size()) break;
    ++c[p];
  }
  return out;
}

CriterionOutcome kac_decompositions(const VerifyOptions& opt) {
  std::vector<Weight> lambdas;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
    for (const Weight& w : dominant_box(m, n, -2, 2)) lambdas.push_back(w);
  lambdas.push_back(Weight{{1, 1}, {-1, -1}});
  lambdas.push_back(Weight{{2, 1}, {-1, -2}});
  lambdas.push_back(Weight{{1, 0}, {0, -1}});

  FailureLog log;
  for (const Weight& lambda : lambdas) {
    const KacDecompositionReport rep = verify_kac_decomposition(lambda, opt.limits);
    if (!rep.passed()) {
      const auto& [w, pr] = rep.mismatches.front();
      log.add(format_weight(lambda) + ": at " + format_weight(w) + " sum a ch L = " + std::to_string(pr.first) +
              ", ch V = " + std::to_string(pr.second));
    }
  }
  return from_log(log, {{"weights", lambdas.size()}});
}

CriterionOutcome gl11_simple(const VerifyOptions& opt) {
  json expected = json::object();
  json actual = json::object();
  for (int a = -5; a <= 5; ++a) {
    const Weight mu{{a}, {-a}};
    expected[format_weight(mu)] = to_json(WeightCounts{{mu, 1}});
    actual[format_weight(mu)] = to_json(char_simple(mu, opt.limits).terms());
  }
  return compare(expected, actual);
}

CriterionOutcome window_stability(const VerifyOptions& opt) {
  struct Case {
    Weight lo, hi, outer_lo, outer_hi;
  };
  const std::vector<Case> cases = {
      {{{-1, -1}, {1, 1}}, {{0, 0}, {0, 0}}, {{-3, -3}, {3, 3}}, {{1, 1}, {-1, -1}}},
      {{{-2, -2}, {2, 2}}, {{1, 0}, {0, -1}}, {{-3, -3}, {3, 3}}, {{2, 2}, {-2, -2}}},
      {{{0, -3}, {3, 0}}, {{2, 1}, {-1, -2}}, {{-2, -4}, {4, 2}}, {{3, 2}, {-2, -3}}},
  };
  FailureLog log;
  std::size_t compared = 0;
  for (const Case& c : cases) {
    const std::string tag = "[" + format_weight(c.lo) + ", " + format_weight(c.hi) + "]";
    if (!partial_leq(c.outer_lo, c.lo) || !partial_leq(c.hi, c.outer_hi)) {
      log.add(tag + ": outer window does not contain the inner one");
      continue;
    }
    const CachedWindow inner = compute_window(c.lo, c.hi, opt.limits, opt.cache);
    const CachedWindow outer = compute_window(c.outer_lo, c.outer_hi, opt.limits, opt.cache);
    const Window& w = inner.kq.window();
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i; j < w.size(); ++j) {
        ++compared;
        if (!(inner.kq.at(i, j) == outer.kq.entry(w[i], w[j])))
          log.add(tag + ": K at (" + format_weight(w[i]) + ", " + format_weight(w[j]) + ") differs");
      }
  }
  return from_log(log, {{"pairs_compared", compared}});
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::falsification_candidate:
      return "falsification-candidate";
  }
  return "fail";
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::pass; });
}

int VerificationReport::exit_code() const {
  bool falsified = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return 1;
    falsified |= c.status == CheckStatus::falsification_candidate;
  }
  return falsified ? 3 : 0;
}

json VerificationReport::to_json(bool with_timing) const {
  json out = json::array();
  for (const auto& c : checks) {
    json j = {{"id", c.id},
              {"name", c.name},
              {"anchor", c.anchor},
              {"status", to_string(c.status)},
              {"expected", c.expected},
              {"actual", c.actual},
              {"detail", c.detail}};
    if (with_timing) {
      j["seconds"] = c.seconds;
      j["time_limit"] = c.time_limit ? json(*c.time_limit) : json(nullptr);
    }
    out.push_back(std::move(j));
  }
  return {{"checks", std::move(out)}, {"passed", all_passed()}};
}

std::string VerificationReport::summary_lines() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "FALSIFIED?";
    os << '[' << tag << "] " << c.id << ' ' << c.name << " (" << std::fixed;
    os.precision(3);
    os << c.seconds << " s";
    if (c.time_limit) os << " / limit " << *c.time_limit << " s";
    os << ')';
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::vector<Weight> identity_samples(std::uint64_t seed, int per_algebra) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<Weight> out;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}})
    for (int s = 0; s < per_algebra; ++s) {
      Eigen::VectorXi e(m), d(n);
      for (auto& x : e) x = coord(rng);
      for (auto& x : d) x = coord(rng);
      out.push_back(dominant_rep(Weight{e, d}));
    }
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "example-atypicality",
       "gl(4|5) worked example mu=(2,1,0,0|0,-2,-2,-2,-2): atypicality matrix, gamma chain, Delta and Nabla sets, "
       "k=(2,5,2), connectedness, mu0, d(mu + sum k_i gamma_i) = mu0 + 2 rho_1",
       1.0, example_atypicality},
      {2, "example-theta-table", "gl(4|5) worked example: the eight rows (theta, mu_theta, lambda_theta)", 1.0,
       example_theta_table},
      {3, "gl22-rows", "gl(2|2) rows (x,y|-y,-x): case lists x=y, x=y+1, x>=y+2 with coefficients 1, -q, q^2", 5.0,
       gl22_rows},
      {4, "kl-zero-row", "gl(2|2) inverse of A_q: K_{0,(-x,-y|y,x)} = q^{x+y} for 0<=x<=y, zero elsewhere", 30.0,
       kl_zero_row},
      {5, "identity-suites",
       "column sums (1-q)^{#mu}; lambda(1,...,1) = mu0 + 2 rho_1; lambda_theta dominant, distinct, same degree; "
       "Delta sets against exhaustive search",
       60.0, identity_suites},
      {6, "mu-zero-walk", "mu0 = mu - (odd roots outside Delta(gamma_1)) agrees with the odd reflection sequence",
       std::nullopt, mu_zero_walk},
      {7, "gl22-characters",
       "simple characters of doubly atypical gl(2|2) weights: nonnegative, 1 at mu, lowest g0 constituent mu0", 120.0,
       gl22_characters},
      {8, "kac-decomposition", "ch V_lambda = sum_mu a_{lambda,mu} ch L_mu with a = a(q) at q = -1", 120.0,
       kac_decompositions},
      {9, "gl11-simple", "gl(1|1): L_(a|-a) is one-dimensional", std::nullopt, gl11_simple},
      {10, "window-stability", "K entries on a convex window agree with those from a convex superset", std::nullopt,
       window_stability},
  };
  return list;
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  for (const Criterion& c : acceptance_criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    VerificationCheck check;
    check.id = c.id;
    check.name = c.name;
    check.anchor = c.anchor;
    check.time_limit = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      CriterionOutcome o = c.run(options);
      check.status = o.status;
      check.expected = std::move(o.expected);
      check.actual = std::move(o.actual);
      check.detail = std::move(o.detail);
    } catch (const ConjectureFalsified& e) {
      check.status = CheckStatus::falsification_candidate;
      check.detail = std::string(e.what()) + ": " + e.payload();
    } catch (const std::exception& e) {
      check.status = CheckStatus::fail;
      check.detail = std::string("error: ") + e.what();
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.time_limit && check.seconds > *check.time_limit && check.status == CheckStatus::pass) {
      check.status = CheckStatus::fail;
      check.detail = "exceeded the time limit";
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace kacmult
