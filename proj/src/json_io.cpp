#include "kacmult/json_io.hpp"

namespace kacmult {

namespace {

Eigen::VectorXi block_from_json(const json& j, int expected, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw ParseError(std::string("weight JSON: '") + name + "' must be an array of " + std::to_string(expected) +
                     " integers");
  Eigen::VectorXi v(expected);
  for (int k = 0; k < expected; ++k) {
    if (!j[static_cast<std::size_t>(k)].is_number_integer())
      throw ParseError(std::string("weight JSON: non-integer entry in '") + name + "'");
    v(k) = j[static_cast<std::size_t>(k)].get<int>();
  }
  return v;
}

json roots_to_json(const std::vector<OddRoot>& rs) {
  json a = json::array();
  for (OddRoot r : rs) a.push_back(to_json(r));
  return a;
}

}  // namespace

json to_json(const Weight& w) {
  return {{"eps", std::vector<int>(w.eps.begin(), w.eps.end())},
          {"delta", std::vector<int>(w.delta.begin(), w.delta.end())}};
}

Weight weight_from_json(const json& j, const Superalgebra& alg) {
  if (!j.is_object() || !j.contains("eps") || !j.contains("delta"))
    throw ParseError("weight JSON must be an object with 'eps' and 'delta'");
  return {block_from_json(j["eps"], alg.m, "eps"), block_from_json(j["delta"], alg.n, "delta")};
}

json to_json(OddRoot r) { return json::array({r.i, r.j}); }

json to_json(const QPolynomial& p) { return p.coefficients(); }

QPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of integers");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("polynomial JSON must be an array of integers");
    c.push_back(x.get<std::int64_t>());
  }
  return QPolynomial(std::move(c));
}

json to_json(const Eigen::MatrixXi& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const AtypicalityProfile& p) {
  json delta = json::array();
  json nabla = json::array();
  for (const auto& d : p.delta_sets) delta.push_back(roots_to_json(d));
  for (const auto& d : p.nabla_sets) nabla.push_back(roots_to_json(d));
  return {{"mu", to_json(p.mu)},       {"r", p.degree()}, {"gamma", roots_to_json(p.gamma)},
          {"delta", std::move(delta)}, {"nabla", std::move(nabla)}, {"k", p.k},
          {"mu_zero", to_json(p.mu_zero)}};
}

json to_json(const MultiplicityColumn& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"theta", e.theta},
                       {"mu_theta", to_json(e.mu_theta)},
                       {"lambda_theta", to_json(e.lambda_theta)},
                       {"coeff", to_json(e.coeff)}});
  return {{"mu", to_json(c.mu)}, {"r", c.profile.degree()}, {"k", c.profile.k}, {"entries", std::move(entries)}};
}

json to_json(const WeightPolyMap& row) {
  json a = json::array();
  for (const auto& [mu, p] : row) a.push_back({{"mu", to_json(mu)}, {"poly", to_json(p)}});
  return a;
}

json to_json(const TriangularQMatrix& m) {
  json window = json::array();
  for (const Weight& w : m.window().weights()) window.push_back(to_json(w));
  json entries = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& [j, v] : m.row_entries(i))
      entries.push_back({{"row", to_json(m.window()[i])}, {"col", to_json(m.window()[j])}, {"poly", to_json(v)}});
  return {{"window", std::move(window)}, {"entries", std::move(entries)}};
}

TriangularQMatrix matrix_from_json(const json& j, const Window& window) {
  if (!j.is_object() || !j.contains("window") || !j.contains("entries"))
    throw ParseError("matrix JSON must have 'window' and 'entries'");
  if (window.size() == 0) throw ParseError("matrix JSON: empty window");
  const Superalgebra alg{window[0].m(), window[0].n(), window[0].m() * window[0].n()};
  const json& jw = j["window"];
  if (!jw.is_array() || jw.size() != window.size()) throw ParseError("matrix JSON: window size mismatch");
  for (std::size_t k = 0; k < window.size(); ++k)
    if (!(weight_from_json(jw[k], alg) == window[k])) throw ParseError("matrix JSON: window mismatch");
  TriangularQMatrix m(window);
  for (const auto& e : j["entries"]) {
    const auto r = window.index_of(weight_from_json(e.at("row"), alg));
    const auto c = window.index_of(weight_from_json(e.at("col"), alg));
    if (!r || !c) throw ParseError("matrix JSON: entry outside the window");
    m.set(*r, *c, poly_from_json(e.at("poly")));
  }
  return m;
}

json to_json(const WeightCounts& counts) {
  json terms = json::array();
  for (const auto& [w, c] : counts) terms.push_back({{"weight", to_json(w)}, {"mult", c}});
  return terms;
}

json to_json(const CharacterMap& chi) {
  json out;
  if (chi.exact_everywhere())
    out["exact"] = true;
  else
    out["region"] = {{"lo", to_json(chi.region()->lo)}, {"hi", to_json(chi.region()->hi)}};
  out["terms"] = to_json(chi.terms());
  return out;
}

}  // namespace kacmult
