#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KACMULT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("atyp reproduces the worked example") {
  const Run r = run("atyp --alg 4,5 --weight '2,1,0,0|0,-2,-2,-2,-2'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "   5   2   1   0  -1\n   3   0  -1  -2  -3\n   1  -2  -3  -4  -5\n   0  -3  -4  -5  -6\n"));
  CHECK(contains(r.out, "gamma: b(4,1) b(2,2) b(1,4)"));
  CHECK(contains(r.out, "k = (2,5,2)"));
  CHECK(contains(r.out, "mu0 = (0,0,-4,-4|2,1,0,0,0)"));
  CHECK(contains(r.out, "connected pairs: (gamma_2, gamma_3)"));
}

TEST_CASE("atyp marks typical weights") {
  const Run r = run("atyp --weight '3,1|-5,-6'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "typical, r=0"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("atyp --weight '1,x|0'").code == 2);
  CHECK(run("atyp --alg 2,2 --weight '1,0|0'").code == 2);
  CHECK(run("atyp --weight '0,1|0,0'").code == 2);
  CHECK(run("column").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("--format yaml atyp --weight '0|0'").code == 2);
  CHECK(run("matrix --lo '1,1|-1,-1' --hi '0,0|0,0'").code == 2);
  CHECK(run("matrix --lo '0,0|0,0' --hi '1,1|-1,-1' --specialize 'x=1'").code == 2);
}

TEST_CASE("column prints the theta table") {
  const Run r = run("column --mu '2,1,0,0;0,-2,-2,-2,-2' --q");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theta:"));
  CHECK(contains(r.out, "(0,1,1)  (4,6,0,0|0,-7,-2,-4,-2)   (5,5,0,0|0,-3,-4,-4,-4)   q^2"));
  CHECK(contains(r.out, "-q^3"));
  const Run g11 = run("column --mu '0|0'");
  CHECK(g11.code == 0);
  CHECK(contains(g11.out, "(1)     (1|-1)     (1|-1)"));
  CHECK_FALSE(contains(g11.out, "a(q)"));
}

TEST_CASE("JSON output is deterministic and parseable") {
  for (const std::string args : {"--format json atyp --weight '2,1,0,0|0,-2,-2,-2,-2'",
                                 "--format json column --q --mu '2,1|-1,-2'", "--format json row --weight '3,2|-2,-3'",
                                 "--format json matrix --lo '-2,-2|2,2' --hi '1,1|-1,-1' --invert",
                                 "--format json char --kind simple --weight '1,1|-1,-1'",
                                 "--format json decompose --kind kac --weight '1,0|0,-1'"}) {
    const Run a = run(args);
    const Run b = run(args);
    CAPTURE(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("matrix specialization and caps") {
  const Run r = run("--format json matrix --lo '-2|2' --hi '2|-2' --specialize q=-1 --invert");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["window"].size() == 5);
  // K_{a,b} = q^{a-b}, so (-1)^{a-b} at q = -1.
  for (const auto& e : j["entries"]) {
    const int d = e["row"]["eps"][0].get<int>() - e["col"]["eps"][0].get<int>();
    CHECK(e["value"] == (d % 2 ? -1 : 1));
  }
  CHECK(run("--cap-window 3 matrix --lo '-3,-3|3,3' --hi '0,0|0,0'").code == 1);
  CHECK(run("--cap-window 0 matrix --lo '-3,-3|3,3' --hi '0,0|0,0'").code == 2);
}

TEST_CASE("character commands") {
  const Run r = run("char --kind simple --weight '1|-1'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 weights, total dimension 1, exact everywhere"));
  const Run k = run("--format json char --kind kac --weight '1|0'");
  const auto j = nlohmann::json::parse(k.out);
  CHECK(j["exact"] == true);
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --only 1 --only 2").code == 0);
  const Run bad = run("verify --only 5 --inject-fault");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "[FAIL] 5 identity-suites"));
}
