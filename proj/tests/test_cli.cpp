#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "gia/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gia::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(GIA_TEST_DATA) + "/" + rel; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("h2 example") {
  auto r = run({"h2", "--group", "Z2xZ2", "--mu", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "classes=2\n");
  CHECK(run({"h2", "--group", "Z2", "--mu", "2"}).out == "classes=1\n");
  CHECK(run({"h2", "--group", data("groups/q8.cayley"), "--mu", "8"}).out == "classes=1\n");
}

TEST_CASE("twisted involutions on the Pauli cocycle") {
  auto r = run({"twisted", "involutions", "--group", "Z2xZ2", "--cocycle", data("pauli.coc")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "exists=true classes=4");

  auto j = nlohmann::json::parse(
      run({"twisted", "involutions", "--cocycle", data("pauli.coc"), "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["exists"] == true);
  CHECK(j["classes"] == 4);
  CHECK(j["mu"].size() == 4);
}

TEST_CASE("no involution is a result, not an error") {
  auto r = run({"twisted", "involutions", "--cocycle", data("z3z3.coc")});
  CHECK(r.code == 0);
  CHECK(r.out == "exists=false classes=0\n");
  auto j = nlohmann::json::parse(run({"twisted", "involutions", "--cocycle", data("z3z3.coc"), "--format=json"}).out);
  CHECK(j["exists"] == false);
  CHECK(j["mu"].empty());
}

TEST_CASE("twisted involutions on a Cayley-table group") {
  auto r = run({"twisted", "involutions", "--cocycle", data("s3_trivial.coc")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "exists=true classes=2");
}

TEST_CASE("cocycle verify") {
  CHECK(run({"cocycle", "verify", data("pauli.coc")}).out == "cocycle=true square_trivial=true\n");
  auto bad = run({"cocycle", "verify", data("not_a_cocycle.coc")});
  CHECK(bad.code == 0);
  CHECK(bad.out.rfind("cocycle=false violation=(", 0) == 0);
}

TEST_CASE("utn admits examples") {
  auto r = run({"utn", "admits", "--eta", "g,g^-1", "--group", "Z4"});
  CHECK(r.code == 0);
  CHECK(r.out == "admits=true\n");
  CHECK(run({"utn", "admits", "--eta", "g,g", "--group", "Z4"}).out == "admits=false\n");
  CHECK(run({"utn", "admits", "--n", "4", "--eta", "a,b,a^-1", "--group", "Z2xZ2"}).out == "admits=true\n");
  // four entries for UT_4 is malformed
  CHECK(run({"utn", "admits", "--n", "4", "--eta", "a,b,b^-1,a^-1", "--group", "Z2xZ2"}).code == 2);
  CHECK(run({"utn", "admits", "--eta", "q", "--group", "Z4"}).code == 2);
}

TEST_CASE("utn classify") {
  auto r = run({"utn", "classify", "--u", data("utn/u2.ut"), "--base", "tau", "--eta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "type=tau\nu=[[3, 2], [0, 3]]\nv=[[1, 1], [0, 3]]\n");
  auto j = nlohmann::json::parse(run({"utn", "classify", "--u", data("utn/u3.ut"), "--eta", "1,1", "--format", "json"}).out);
  CHECK(j["type"] == "tau");
  CHECK(j["v"][0][1] == "1/2");
  CHECK(run({"utn", "classify", "--u", data("utn/u2.ut"), "--base", "x", "--eta", "1"}).code == 2);
  CHECK(run({"utn", "classify", "--u", data("utn/u2.ut"), "--eta", "a", "--group", "Z2"}).code == 1);
}

TEST_CASE("realize the Pauli bicharacter") {
  auto j = nlohmann::json::parse(
      run({"realize", "--group", "Z2xZ2", "--cocycle", data("pauli.coc"), "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 2);
  REQUIRE(j["basis"].size() == 4);
  CHECK(j["basis"][0]["matrix"] == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));
  auto beta = run({"realize", "--beta", data("pauli_beta.txt")});
  CHECK(beta.code == 0);
  CHECK(first_line(beta.out) == "n=2 order=2");
  CHECK(run({"realize", "--group", "Z2xZ2"}).code == 2);
  CHECK(run({"realize", "--cocycle", data("degenerate.coc")}).code == 1);
}

TEST_CASE("matrix build and recover round trip") {
  auto psi = (std::filesystem::temp_directory_path() / "gia_test_pauli.psi").string();
  auto b = run({"matrix", "build", "--spec", data("matrix/pauli_formal.json"), "--psi-out", psi});
  CHECK(b.code == 0);
  CHECK(first_line(b.out) == "admissible=true exists=true m=0 s=1 eps=1 k=2");
  CHECK(b.out.find("phi=[[0, X[1]], [X[1], 0]]") != std::string::npos);
  CHECK(b.out.find("involutive=true degree_inverting=true") != std::string::npos);
  auto r = run({"matrix", "recover", "--spec", data("matrix/pauli_formal.json"), "--psi", psi});
  CHECK(r.code == 0);
  CHECK(r.out.find("phi=[[0, X[1]], [X[1], 0]]") != std::string::npos);
  CHECK(r.out.find("eps=1 m=0 s=1") != std::string::npos);
  std::filesystem::remove(psi);

  auto a = run({"matrix", "build", "--spec", data("matrix/z2_aniso.json")});
  CHECK(first_line(a.out) == "admissible=true exists=true m=1 s=2 eps=1 k=3");
}

TEST_CASE("matrix build negative and malformed specs") {
  auto r = run({"matrix", "build", "--spec", data("matrix/bad_pairing.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "admissible=false\n");
  auto broken = run({"matrix", "build", "--spec", data("matrix/broken.json")});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("broken.json") != std::string::npos);
  CHECK(run({"matrix", "build", "--spec", data("matrix/missing.json")}).code == 2);
  CHECK(run({"matrix", "recover", "--spec", data("matrix/pauli_formal.json"), "--psi", data("pauli.coc")}).code == 2);
}

TEST_CASE("search") {
  CHECK(run({"search", "--max-order", "9"}).out == "hits=0\n");
  auto j = nlohmann::json::parse(run({"search", "--max-order", "16", "--groups", data("groups"), "--format", "json"}).out);
  CHECK(j["reports"].size() == 4);
  CHECK(j["hits"] == 0);
  CHECK(run({"search", "--max-order", "16", "--groups", data("nowhere")}).code == 1);
}

TEST_CASE("check subcommand") {
  auto r = run({"check", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failures=0") != std::string::npos);
}

TEST_CASE("argument errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"h2", "--group", "Z2", "--mu", "2", "--bogus"}).code == 2);
  CHECK(run({"h2", "--group", "Z2"}).code == 2);
  CHECK(run({"h2", "--group", "Z2", "--mu", "2", "--format", "xml"}).code == 2);
  CHECK(run({"h2", "--group", "Zq", "--mu", "2"}).code == 2);
  CHECK(run({"cocycle", "verify", data("missing.coc")}).code == 2);
  CHECK(run({"cocycle", "verify", data("bad.coc")}).err.find("bad.coc:3") != std::string::npos);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"h2", "--group", "Z2xZ4", "--mu", "4", "--format", "json"},
        std::vector<std::string>{"twisted", "involutions", "--cocycle", data("pauli.coc")},
        std::vector<std::string>{"check", "--seed", "11"},
        std::vector<std::string>{"search", "--max-order", "16", "--format", "json"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
