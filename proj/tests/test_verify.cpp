#include <doctest.h>

#include <filesystem>
#include <random>

#include "kacmult/verify.hpp"

using namespace kacmult;
namespace fs = std::filesystem;

TEST_CASE("criteria list") {
  const auto& list = acceptance_criteria();
  REQUIRE(list.size() == 10);
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(list[i].id == static_cast<int>(i + 1));
    CHECK_FALSE(list[i].anchor.empty());
  }
}

TEST_CASE("samples are reproducible and dominant") {
  const auto a = identity_samples(5, 10);
  const auto b = identity_samples(5, 10);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(is_dominant(a[i]));
    CHECK(a[i].eps.maxCoeff() <= 5);
    CHECK(a[i].delta.minCoeff() >= -5);
  }
  CHECK(a[0].m() == 2);
  CHECK(a[39].m() == 3);
}

TEST_CASE("fault injection shows up as a failure of the lambda(1,...,1) check") {
  VerifyOptions opt;
  opt.only = {5};
  opt.inject_k_fault = true;
  const VerificationReport rep = run_verification(opt);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].status == CheckStatus::fail);
  CHECK(rep.checks[0].detail.find("mu0 + 2 rho1") != std::string::npos);
  CHECK(rep.exit_code() == 1);

  opt.inject_k_fault = false;
  CHECK(run_verification(opt).exit_code() == 0);
}

TEST_CASE("exit codes") {
  VerificationReport rep;
  rep.checks.resize(2);
  CHECK(rep.exit_code() == 0);
  rep.checks[1].status = CheckStatus::falsification_candidate;
  CHECK(rep.exit_code() == 3);
  rep.checks[0].status = CheckStatus::fail;
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("warm and cold cache runs give identical reports") {
  const fs::path dir = fs::temp_directory_path() / ("kacmult-verify-" + std::to_string(std::random_device{}()));
  MatrixCache cache(dir);
  VerifyOptions opt;
  opt.only = {4, 10};
  opt.cache = &cache;
  const std::string cold = run_verification(opt).to_json().dump();
  CHECK(fs::exists(dir));
  const std::string warm = run_verification(opt).to_json().dump();
  opt.cache = nullptr;
  const std::string none = run_verification(opt).to_json().dump();
  CHECK(cold == warm);
  CHECK(cold == none);
  fs::remove_all(dir);
}
