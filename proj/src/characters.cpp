#include "kacmult/characters.hpp"

#include <numeric>

#include "kacmult/kl_matrix.hpp"
#include "kacmult/multiplicity.hpp"

namespace kacmult {

namespace {

Superalgebra algebra_of(const Weight& w) { return {w.m(), w.n(), w.m() * w.n()}; }

bool in_region(const Weight& w, const CharacterMap::Region& r) {
  return partial_leq(r.lo, w) && partial_leq(w, r.hi);
}

void add_scaled(WeightCounts& acc, const WeightCounts& terms, std::int64_t scale) {
  for (const auto& [w, c] : terms) {
    auto& slot = acc[w];
    slot += scale * c;
    if (slot == 0) acc.erase(w);
  }
}

// Characters of gl(k) irreducibles for every interlacing row, memoized on the row.
class PatternCounter {
 public:
  const BlockCounts& operator()(const std::vector<int>& row) {
    if (auto it = memo_.find(row); it != memo_.end()) return it->second;
    BlockCounts out;
    const int top_sum = std::accumulate(row.begin(), row.end(), 0);
    if (row.size() == 1) {
      out[{row[0]}] = 1;
    } else {
      std::vector<int> next(row.size() - 1);
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == next.size()) {
          const int last = top_sum - std::accumulate(next.begin(), next.end(), 0);
          for (const auto& [w, c] : (*this)(next)) {
            std::vector<int> ext = w;
            ext.push_back(last);
            out[ext] += c;
          }
          return;
        }
        for (int x = row[pos + 1]; x <= row[pos]; ++x) {
          next[pos] = x;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
    return memo_.emplace(row, std::move(out)).first->second;
  }

 private:
  std::map<std::vector<int>, BlockCounts> memo_;
};

}  // namespace

CharacterMap::CharacterMap(WeightCounts terms, std::optional<Region> region)
    : terms_(std::move(terms)), region_(std::move(region)) {
  for (const auto& [w, c] : terms_) {
    if (c <= 0)
      throw PreconditionError("character multiplicity at " + format_weight(w) + " is not positive");
    if (region_ && !in_region(w, *region_))
      throw PreconditionError("character support weight " + format_weight(w) + " lies outside its region");
  }
}

CharacterMap CharacterMap::exact(WeightCounts terms) { return {std::move(terms), std::nullopt}; }

CharacterMap CharacterMap::on_region(WeightCounts terms, Region region) {
  return {std::move(terms), std::move(region)};
}

std::int64_t CharacterMap::multiplicity(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t CharacterMap::total_mass() const {
  std::int64_t t = 0;
  for (const auto& [w, c] : terms_) t += c;
  return t;
}

bool operator==(const CharacterMap& a, const CharacterMap& b) {
  if (a.terms_ != b.terms_ || a.region_.has_value() != b.region_.has_value()) return false;
  return !a.region_ || (a.region_->lo == b.region_->lo && a.region_->hi == b.region_->hi);
}

WeightCounts convolve(const WeightCounts& a, const WeightCounts& b) {
  WeightCounts out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      auto& slot = out[wa + wb];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CharacterMap product(const CharacterMap& a, const CharacterMap& b) {
  if (!a.exact_everywhere() || !b.exact_everywhere())
    throw PreconditionError("product of characters requires both factors exact everywhere");
  return CharacterMap::exact(convolve(a.terms(), b.terms()));
}

CharacterMap restricted(const CharacterMap& chi, const CharacterMap::Region& region) {
  if (chi.region() && !(partial_leq(chi.region()->lo, region.lo) && partial_leq(region.hi, chi.region()->hi)))
    throw PreconditionError("restriction region is not inside the character's exact region");
  WeightCounts kept;
  for (const auto& [w, c] : chi.terms())
    if (in_region(w, region)) kept.emplace(w, c);
  return CharacterMap::on_region(std::move(kept), region);
}

std::int64_t weyl_dimension(const Eigen::VectorXi& hw) {
  __int128 num = 1;
  __int128 den = 1;
  for (Eigen::Index i = 0; i < hw.size(); ++i)
    for (Eigen::Index j = i + 1; j < hw.size(); ++j) {
      num *= hw(i) - hw(j) + (j - i);
      den *= j - i;
      const __int128 g = std::gcd(static_cast<long long>(num), static_cast<long long>(den));
      num /= g;
      den /= g;
    }
  if (den != 1) throw InternalError("Weyl dimension is not an integer");
  return static_cast<std::int64_t>(num);
}

BlockCounts gl_character(const Eigen::VectorXi& hw, const Limits& limits) {
  for (Eigen::Index i = 1; i < hw.size(); ++i)
    if (hw(i) > hw(i - 1)) throw PreconditionError("gl_character: highest weight is not dominant");
  if (hw.size() == 0) return {{{}, 1}};
  const std::int64_t dim = weyl_dimension(hw);
  if (static_cast<std::size_t>(dim) > limits.patterns)
    throw CapExceeded("gl_character: dimension " + std::to_string(dim) + " exceeds the pattern cap");
  PatternCounter counter;
  return counter(std::vector<int>(hw.begin(), hw.end()));
}

CharacterMap char_g0(const Weight& lambda, const Limits& limits) {
  if (!is_dominant(lambda))
    throw PreconditionError("char_g0: weight " + format_weight(lambda) + " is not dominant");
  const BlockCounts left = gl_character(lambda.eps, limits);
  const BlockCounts right = gl_character(lambda.delta, limits);
  if (static_cast<std::size_t>(weyl_dimension(lambda.eps) * weyl_dimension(lambda.delta)) > limits.patterns)
    throw CapExceeded("char_g0: dimension exceeds the pattern cap");
  WeightCounts out;
  for (const auto& [e, ce] : left)
    for (const auto& [d, cd] : right) {
      Weight w{Eigen::Map<const Eigen::VectorXi>(e.data(), static_cast<Eigen::Index>(e.size())),
               Eigen::Map<const Eigen::VectorXi>(d.data(), static_cast<Eigen::Index>(d.size()))};
      out.emplace(std::move(w), ce * cd);
    }
  return CharacterMap::exact(std::move(out));
}

CharacterMap odd_factor(const Superalgebra& alg, const Limits& limits) {
  WeightCounts acc{{Weight::zero(alg), 1}};
  for (OddRoot r : odd_positive_roots(alg)) {
    WeightCounts next = acc;
    const Weight minus = -odd_root_vector(alg, r);
    for (const auto& [w, c] : acc) next[w + minus] += c;
    acc = std::move(next);
    if (acc.size() > limits.odd_support)
      throw CapExceeded("odd_factor: support exceeds " + std::to_string(limits.odd_support) + " weights");
  }
  return CharacterMap::exact(std::move(acc));
}

CharacterMap char_kac(const Weight& lambda, const Limits& limits) {
  return product(odd_factor(algebra_of(lambda), limits), char_g0(lambda, limits));
}

CharacterMap char_simple(const Weight& mu, const Limits& limits) {
  if (!is_dominant(mu)) throw PreconditionError("char_simple: weight " + format_weight(mu) + " is not dominant");
  const Superalgebra alg = algebra_of(mu);
  const CharacterMap::Region region{antidominant_rep(mu) - two_rho_one(alg), mu};
  const Window window = Window::interval(region.lo, region.hi, limits);
  const TriangularQMatrix kq = invert_unitriangular(assemble_aq(window, limits));
  const std::size_t top = *window.index_of(mu);

  const CharacterMap odd = odd_factor(alg, limits);
  WeightCounts acc;
  for (const auto& [j, k] : kq.row_entries(top)) {
    const std::int64_t b = k.evaluate(-1);
    if (b == 0) continue;
    const CharacterMap kac = product(odd, char_g0(window[j], limits));
    add_scaled(acc, restricted(kac, region).terms(), b);
  }
  for (const auto& [w, c] : acc)
    if (c < 0)
      throw ConjectureFalsified("negative multiplicity in simple character",
                                "mu=" + format_weight(mu) + " weight=" + format_weight(w) +
                                    " mult=" + std::to_string(c));
  // Every weight of L_mu lies in the region, so the restricted sum is the
  // whole character.
  return CharacterMap::exact(std::move(acc));
}

WeightCounts decompose_g0(const CharacterMap& chi, const Limits& limits) {
  if (!chi.exact_everywhere())
    throw PreconditionError("decompose_g0 requires a character that is exact everywhere");
  WeightCounts rest = chi.terms();
  WeightCounts out;
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (height(it->first) > height(top->first)) top = it;
    const Weight nu = top->first;
    const std::int64_t c = top->second;
    if (!is_dominant(nu))
      throw PreconditionError("decompose_g0: maximal weight " + format_weight(nu) + " is not dominant");
    if (c < 0) throw PreconditionError("decompose_g0: negative leading multiplicity at " + format_weight(nu));
    out[nu] += c;
    add_scaled(rest, char_g0(nu, limits).terms(), -c);
  }
  return out;
}

KacDecompositionReport verify_kac_decomposition(const Weight& lambda, const Limits& limits) {
  KacDecompositionReport rep{lambda, {}, {}};
  WeightCounts lhs;
  for (const auto& [mu, coeff] : row(lambda, limits)) {
    // Numeric multiplicity a = a(q) at q = -1.
    const std::int64_t a = coeff.evaluate(-1);
    rep.multiplicities[mu] = a;
    add_scaled(lhs, char_simple(mu, limits).terms(), a);
  }
  const WeightCounts rhs = char_kac(lambda, limits).terms();
  std::map<Weight, std::pair<std::int64_t, std::int64_t>, LexLess> both;
  for (const auto& [w, c] : lhs) both[w].first = c;
  for (const auto& [w, c] : rhs) both[w].second = c;
  for (const auto& [w, pr] : both)
    if (pr.first != pr.second) rep.mismatches.emplace_back(w, pr);
  return rep;
}

}  // namespace kacmult
