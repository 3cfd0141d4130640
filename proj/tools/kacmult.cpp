#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "kacmult/atypicality.hpp"
#include "kacmult/cache.hpp"
#include "kacmult/characters.hpp"
#include "kacmult/json_io.hpp"
#include "kacmult/kl_matrix.hpp"
#include "kacmult/multiplicity.hpp"
#include "kacmult/verify.hpp"
#include "kacmult/version.hpp"

using namespace kacmult;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kFalsified = 3 };

struct RunConfig {
  std::string alg_text;
  std::string format = "text";
  std::string cache_dir;
  Limits limits;
};

// "m,n"; when absent the shape is read off the weight text.
Superalgebra resolve_algebra(const RunConfig& cfg, const std::string& weight_text) {
  int m = 0, n = 0;
  if (!cfg.alg_text.empty()) {
    char comma = 0;
    std::istringstream is(cfg.alg_text);
    if (!(is >> m >> comma >> n) || comma != ',' || !(is >> std::ws).eof())
      throw ParseError("--alg expects m,n, got '" + cfg.alg_text + "'");
  } else {
    const auto bar = weight_text.find_first_of("|;");
    if (bar == std::string::npos) throw ParseError("weight '" + weight_text + "' has no '|' separator");
    auto count = [](const std::string& s) {
      return s.find_first_not_of(" ()") == std::string::npos ? 0 : 1 + static_cast<int>(std::count(s.begin(), s.end(), ','));
    };
    m = count(weight_text.substr(0, bar));
    n = count(weight_text.substr(bar + 1));
  }
  if (m < 1 || n < 1) throw ParseError("algebra gl(m|n) needs m, n >= 1");
  return Superalgebra(m, n);
}

Weight read_weight(const RunConfig& cfg, const std::string& text) {
  return parse_weight(text, resolve_algebra(cfg, text));
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string join_roots(const std::vector<OddRoot>& rs) {
  std::string s = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? ", " : "") + format_root(rs[i]);
  return s + "}";
}

std::string theta_text(const std::vector<int>& theta) {
  std::string s = "(";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
  return s + ")";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size() + 2, ' ');
}

// ---------------------------------------------------------------------------

int cmd_atyp(const RunConfig& cfg, const std::string& weight_text) {
  const Weight mu = read_weight(cfg, weight_text);
  const Eigen::MatrixXi a = atypicality_matrix(mu);
  const AtypicalityProfile p = nabla_profile(mu, cfg.limits);
  const auto conn = connectedness(p);
  const Weight top = p.mu_zero + two_rho_one(Superalgebra(mu.m(), mu.n()));

  std::ostringstream os;
  os << "mu = " << format_weight(mu) << "\n";
  os << "atypicality matrix (mu+rho, b(i,j)):\n";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << std::setw(4) << a(i, j);
    os << "\n";
  }
  json connected = json::array();
  if (p.degree() == 0) {
    os << "typical, r=0\n";
  } else {
    os << "r = " << p.degree() << "\n";
    os << "gamma:";
    for (OddRoot g : p.gamma) os << ' ' << format_root(g);
    os << "\n";
    for (int i = p.degree(); i >= 1; --i)
      os << "Delta(gamma_" << i << ") = " << join_roots(p.delta_sets[static_cast<std::size_t>(i - 1)]) << "\n";
    for (int i = p.degree(); i >= 1; --i)
      os << "Nabla(gamma_" << i << ") = " << join_roots(p.nabla_sets[static_cast<std::size_t>(i - 1)]) << "\n";
    os << "k = " << theta_text(p.k) << "\n";
    os << "connected pairs:";
    bool any = false;
    for (int i = 0; i < p.degree(); ++i)
      for (int j = i + 1; j < p.degree(); ++j)
        if (conn(i, j)) {
          os << " (gamma_" << i + 1 << ", gamma_" << j + 1 << ")";
          any = true;
        }
    os << (any ? "" : " none") << "\n";
  }
  for (Eigen::Index i = 0; i < conn.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < conn.cols(); ++j) r.push_back(static_cast<bool>(conn(i, j)));
    connected.push_back(r);
  }
  os << "mu0 = " << format_weight(p.mu_zero) << "\n";
  os << "mu0 + 2rho1 = " << format_weight(top) << "\n";

  json j = to_json(p);
  j["matrix"] = to_json(a);
  j["connected"] = connected;
  j["mu_zero_plus_2rho1"] = to_json(top);
  emit(cfg, j, os.str());
  return kOk;
}

int cmd_column(const RunConfig& cfg, const std::string& weight_text, bool with_q) {
  const Weight mu = read_weight(cfg, weight_text);
  MultiplicityColumn col = with_q ? column_q(mu, cfg.limits) : column(mu, cfg.limits);

  std::size_t wt = 6, wm = 9;
  for (const auto& e : col.entries) {
    wt = std::max(wt, theta_text(e.theta).size());
    wm = std::max(wm, format_weight(e.mu_theta).size());
  }
  std::ostringstream os;
  os << "mu = " << format_weight(mu) << ", r = " << col.profile.degree() << ", k = " << theta_text(col.profile.k)
     << "\n";
  std::size_t wl = 13;
  for (const auto& e : col.entries) wl = std::max(wl, format_weight(e.lambda_theta).size());
  os << pad("theta:", wt) << pad("mu_theta:", wm) << (with_q ? pad("lambda_theta:", wl) + "a(q):" : "lambda_theta:")
     << "\n";
  for (const auto& e : col.entries) {
    os << pad(theta_text(e.theta), wt) << pad(format_weight(e.mu_theta), wm);
    if (with_q)
      os << pad(format_weight(e.lambda_theta), wl) << e.coeff;
    else
      os << format_weight(e.lambda_theta);
    os << "\n";
  }
  json j = to_json(col);
  if (!with_q)
    for (auto& e : j["entries"]) e.erase("coeff");
  emit(cfg, j, os.str());
  return kOk;
}

int cmd_row(const RunConfig& cfg, const std::string& weight_text) {
  const Weight lambda = read_weight(cfg, weight_text);
  const WeightPolyMap r = row(lambda, cfg.limits);
  std::vector<std::pair<Weight, QPolynomial>> ordered(r.begin(), r.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return height(a.first) > height(b.first); });
  std::ostringstream os;
  os << "lambda = " << format_weight(lambda) << "\n";
  std::size_t w = 3;
  for (const auto& [mu, p] : ordered) w = std::max(w, format_weight(mu).size());
  os << pad("mu:", w) << "a(q):\n";
  for (const auto& [mu, p] : ordered) os << pad(format_weight(mu), w) << p << "\n";
  emit(cfg, {{"lambda", to_json(lambda)}, {"row", to_json(r)}}, os.str());
  return kOk;
}

int cmd_matrix(const RunConfig& cfg, const std::string& lo_text, const std::string& hi_text, bool invert,
               const std::string& specialize) {
  const Superalgebra alg = resolve_algebra(cfg, lo_text);
  const Weight lo = parse_weight(lo_text, alg);
  const Weight hi = parse_weight(hi_text, alg);
  std::optional<std::int64_t> at;
  if (!specialize.empty()) {
    std::istringstream is(specialize);
    char q = 0, eq = 0;
    std::int64_t v = 0;
    if (!(is >> q >> eq >> v) || q != 'q' || eq != '=' || !(is >> std::ws).eof())
      throw ParseError("--specialize expects q=<integer>, got '" + specialize + "'");
    at = v;
  }
  std::unique_ptr<MatrixCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<MatrixCache>(cfg.cache_dir);
  const CachedWindow cw = compute_window(lo, hi, cfg.limits, cache.get());
  const TriangularQMatrix& m = invert ? cw.kq : cw.aq;
  const Window& window = m.window();

  std::ostringstream os;
  os << (invert ? "K_q" : "A_q") << " on [" << format_weight(lo) << ", " << format_weight(hi) << "], "
     << window.size() << " weights, " << m.nonzeros() << " nonzero entries";
  if (at) os << ", at q = " << *at;
  os << "\n";
  for (std::size_t i = 0; i < window.size(); ++i) os << std::setw(5) << i << "  " << format_weight(window[i]) << "\n";
  json j = to_json(m);
  if (at) {
    for (auto& e : j["entries"]) {
      e["value"] = poly_from_json(e["poly"]).evaluate(*at);
      e.erase("poly");
    }
    j["specialize"] = {{"q", *at}};
  }
  for (std::size_t i = 0; i < window.size(); ++i)
    for (const auto& [c, p] : m.row_entries(i)) {
      os << std::setw(5) << i << std::setw(5) << c << "  ";
      if (at)
        os << p.evaluate(*at);
      else
        os << p;
      os << "\n";
    }
  emit(cfg, j, os.str());
  return kOk;
}

CharacterMap character(const RunConfig& cfg, const std::string& kind, const Weight& w) {
  if (kind == "kac") return char_kac(w, cfg.limits);
  if (kind == "g0") return char_g0(w, cfg.limits);
  return char_simple(w, cfg.limits);
}

std::string counts_text(const WeightCounts& counts, const std::string& header) {
  std::vector<std::pair<Weight, std::int64_t>> ordered(counts.begin(), counts.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return height(a.first) > height(b.first); });
  std::size_t w = 7;
  for (const auto& [nu, c] : ordered) w = std::max(w, format_weight(nu).size());
  std::ostringstream os;
  os << pad("weight:", w) << header << "\n";
  for (const auto& [nu, c] : ordered) os << pad(format_weight(nu), w) << c << "\n";
  return os.str();
}

int cmd_char(const RunConfig& cfg, const std::string& kind, const std::string& weight_text) {
  const Weight w = read_weight(cfg, weight_text);
  const CharacterMap chi = character(cfg, kind, w);
  std::ostringstream os;
  os << "ch " << kind << " " << format_weight(w) << ": " << chi.terms().size() << " weights, total dimension "
     << chi.total_mass();
  if (chi.exact_everywhere())
    os << ", exact everywhere\n";
  else
    os << ", exact on [" << format_weight(chi.region()->lo) << ", " << format_weight(chi.region()->hi) << "]\n";
  os << counts_text(chi.terms(), "mult:");
  emit(cfg, to_json(chi), os.str());
  return kOk;
}

int cmd_decompose(const RunConfig& cfg, const std::string& kind, const std::string& weight_text) {
  const Weight w = read_weight(cfg, weight_text);
  const WeightCounts parts = decompose_g0(character(cfg, kind, w), cfg.limits);
  std::ostringstream os;
  os << "g0 constituents of ch " << kind << " " << format_weight(w) << ":\n" << counts_text(parts, "mult:");
  emit(cfg, {{"weight", to_json(w)}, {"kind", kind}, {"constituents", to_json(parts)}}, os.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg, VerifyOptions opt, bool timing) {
  opt.limits = cfg.limits;
  std::unique_ptr<MatrixCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<MatrixCache>(cfg.cache_dir);
  opt.cache = cache.get();
  const VerificationReport report = run_verification(opt);
  emit(cfg, report.to_json(timing),
       report.summary_lines() + (report.all_passed() ? "all checks passed\n" : "some checks did not pass\n"));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition factors of gl(m|n) Kac modules and Kazhdan-Lusztig polynomials"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--alg", cfg.alg_text, "Algebra gl(m|n) as m,n (default: read off the weight)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", cfg.cache_dir, "Directory for cached window matrices");
  app.add_option("--cap-window", cfg.limits.window, "Maximum window size")->check(CLI::PositiveNumber);
  app.add_option("--cap-odd", cfg.limits.odd_support, "Maximum support of the odd factor")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-patterns", cfg.limits.patterns, "Maximum g0 character size")->check(CLI::PositiveNumber);

  std::string weight, lo, hi, specialize, kind = "simple";
  bool with_q = false, invert = false, inject = false, timing = false;
  VerifyOptions vopt;

  auto* atyp = app.add_subcommand("atyp", "Atypicality matrix, gamma chain, Delta/Nabla sets, k, mu0");
  atyp->add_option("-w,--weight,--mu", weight, "Dominant weight, e.g. 2,1,0,0|0,-2,-2,-2,-2")->required();

  auto* col = app.add_subcommand("column", "Conjectured composition-factor column of mu");
  col->add_option("-w,--weight,--mu", weight, "Dominant weight")->required();
  col->add_flag("--q", with_q, "Show the coefficients (-q)^|theta|");

  auto* rowc = app.add_subcommand("row", "Row lambda of the q-multiplicity matrix");
  rowc->add_option("-w,--weight,--lambda", weight, "Dominant weight")->required();

  auto* mat = app.add_subcommand("matrix", "A_q (or its inverse) on the dominant interval [lo, hi]");
  mat->add_option("--lo", lo, "Lower bound")->required();
  mat->add_option("--hi", hi, "Upper bound")->required();
  mat->add_flag("--invert", invert, "Print K_q = A_q^{-1}");
  mat->add_option("--specialize", specialize, "Evaluate entries, e.g. q=-1");

  auto* chr = app.add_subcommand("char", "Character of a Kac, simple or g0 module");
  chr->add_option("--kind", kind, "kac | simple | g0")->check(CLI::IsMember({"kac", "simple", "g0"}));
  chr->add_option("-w,--weight", weight, "Dominant weight")->required();

  auto* dec = app.add_subcommand("decompose", "g0 constituents of a character");
  dec->add_option("--kind", kind, "kac | simple | g0")->check(CLI::IsMember({"kac", "simple", "g0"}));
  dec->add_option("-w,--weight", weight, "Dominant weight")->required();

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_flag("--inject-fault", inject, "Alter k_1 before the lambda(1,...,1) check (harness self-test)");
  ver->add_option("--seed", vopt.seed, "Seed for the random samples");
  ver->add_option("--samples", vopt.samples_per_algebra, "Random samples per algebra")->check(CLI::PositiveNumber);
  ver->add_option("--only", vopt.only, "Criterion ids to run")->check(CLI::Range(1, 10));
  ver->add_flag("--timing", timing, "Include timings in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*atyp) return cmd_atyp(cfg, weight);
    if (*col) return cmd_column(cfg, weight, with_q);
    if (*rowc) return cmd_row(cfg, weight);
    if (*mat) return cmd_matrix(cfg, lo, hi, invert, specialize);
    if (*chr) return cmd_char(cfg, kind, weight);
    if (*dec) return cmd_decompose(cfg, kind, weight);
    if (*ver) {
      vopt.inject_k_fault = inject;
      return cmd_verify(cfg, vopt, timing);
    }
  } catch (const ConjectureFalsified& e) {
    std::cerr << "falsification candidate: " << e.what() << "\n  " << e.payload() << '\n';
    return kFalsified;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
