#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "kacmult/cache.hpp"
#include "kacmult/json_io.hpp"
#include "kacmult/version.hpp"

using namespace kacmult;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("kacmult-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const Weight kLo{{-2, -2}, {2, 2}};
const Weight kHi{{1, 1}, {-1, -1}};

}  // namespace

TEST_CASE("weight JSON") {
  const Weight w{{2, 1, 0}, {0, -2}};
  CHECK(to_json(w).dump() == R"({"delta":[0,-2],"eps":[2,1,0]})");
  CHECK(weight_from_json(to_json(w), Superalgebra(3, 2)) == w);
  CHECK_THROWS_AS(weight_from_json(to_json(w), Superalgebra(2, 2)), ParseError);
  CHECK_THROWS_AS(weight_from_json(json::parse(R"({"eps":[1,"a"],"delta":[0,0]})"), Superalgebra(2, 2)), ParseError);
}

TEST_CASE("profile and column JSON") {
  const Weight mu{{2, 1, 0, 0}, {0, -2, -2, -2, -2}};
  const json p = to_json(nabla_profile(mu));
  CHECK(p["gamma"] == json::parse("[[4,1],[2,2],[1,4]]"));
  CHECK(p["k"] == json::parse("[2,5,2]"));
  CHECK(p["mu_zero"] == to_json(Weight{{0, 0, -4, -4}, {2, 1, 0, 0, 0}}));
  CHECK(p["nabla"][2] == json::parse("[[1,4],[1,5]]"));
  const json c = to_json(column_q(mu));
  CHECK(c["entries"].size() == 8);
  CHECK(c["entries"][7]["coeff"] == json::parse("[0,0,0,-1]"));
  CHECK(c["entries"][7]["theta"] == json::parse("[1,1,1]"));
}

TEST_CASE("matrix JSON round trip") {
  const Window w = Window::interval(kLo, kHi);
  const TriangularQMatrix kq = invert_unitriangular(assemble_aq(w));
  const json j = to_json(kq);
  CHECK(j["window"].size() == w.size());
  CHECK(matrix_from_json(j, w) == kq);
  CHECK(to_json(matrix_from_json(j, w)).dump() == j.dump());
}

TEST_CASE("character JSON") {
  const json exact = to_json(char_g0(Weight{{1, 0}, {0}}));
  CHECK(exact["exact"] == true);
  CHECK(exact["terms"].size() == 2);
  const CharacterMap part =
      restricted(char_kac(Weight{{1, 0}, {0, 0}}), {Weight{{0, 0}, {1, 0}}, Weight{{1, 0}, {0, 0}}});
  const json r = to_json(part);
  CHECK_FALSE(r.contains("exact"));
  CHECK(r["region"]["hi"] == to_json(Weight{{1, 0}, {0, 0}}));
}

TEST_CASE("cache round trip") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, [&](const std::string& s) { warnings.push_back(s); });
  const CacheKey key{2, 2, kLo, kHi, kVersion};
  CHECK_FALSE(cache.load(key).has_value());

  const CachedWindow first = compute_window(kLo, kHi, {}, &cache);
  REQUIRE(fs::exists(cache.path_for(key)));
  const auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(hit->aq == first.aq);
  CHECK(hit->kq == first.kq);
  CHECK(hit->aq.complete_columns() == first.aq.complete_columns());
  CHECK(warnings.empty());

  // No temporary files are left behind.
  int files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  CHECK(files == 1);
}

TEST_CASE("version mismatch is a miss") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, [&](const std::string& s) { warnings.push_back(s); });
  compute_window(kLo, kHi, {}, &cache);
  CacheKey other{2, 2, kLo, kHi, "0.0.0-other"};
  CHECK_FALSE(cache.load(other).has_value());
  // Even a file planted under the other key's name is not trusted.
  fs::copy_file(cache.path_for(CacheKey{2, 2, kLo, kHi, kVersion}), cache.path_for(other));
  CHECK_FALSE(cache.load(other).has_value());
  CHECK(warnings.empty());
}

TEST_CASE("tampered entries are ignored with a warning") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, [&](const std::string& s) { warnings.push_back(s); });
  const CacheKey key{2, 2, kLo, kHi, kVersion};
  const CachedWindow good = compute_window(kLo, kHi, {}, &cache);
  const fs::path file = cache.path_for(key);

  json doc;
  {
    std::ifstream in(file);
    doc = json::parse(in);
  }
  SUBCASE("coefficient changed") {
    auto& entries = doc["kq"]["entries"];
    for (auto& e : entries)
      if (e["row"] != e["col"]) {
        e["poly"] = json::array({0, 7});
        break;
      }
  }
  SUBCASE("diagonal changed") { doc["aq"]["entries"][0]["poly"] = json::array({2}); }
  SUBCASE("entry above the diagonal") {
    doc["aq"]["entries"].push_back({{"row", doc["aq"]["window"].back()}, {"col", doc["aq"]["window"][0]},
                                    {"poly", json::array({1})}});
  }
  SUBCASE("truncated file") { doc = json::parse(R"({"key":"x"})"); }
  {
    std::ofstream out(file, std::ios::trunc);
    out << doc.dump();
  }
  CHECK_FALSE(cache.load(key).has_value());
  CHECK(warnings.size() == 1);
  // compute_window falls back to recomputation and repairs the entry.
  const CachedWindow again = compute_window(kLo, kHi, {}, &cache);
  CHECK(again.kq == good.kq);
  CHECK(cache.load(key).has_value());
}

TEST_CASE("non-JSON garbage") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, [&](const std::string& s) { warnings.push_back(s); });
  const CacheKey key{2, 2, kLo, kHi, kVersion};
  {
    std::ofstream out(cache.path_for(key));
    out << "{not json";
  }
  CHECK_FALSE(cache.load(key).has_value());
  CHECK(warnings.size() == 1);
}
