#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wordmap/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wordmap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = wordmap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("wordmap_test_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("trace-poly prints the canonical polynomial", "[cli]") {
  Result r = run({"trace-poly", "[a,b]"});
  CHECK(r.code == 0);
  CHECK(r.out == "-x*y*z + x^2 + y^2 + z^2 - 2\n");
  CHECK(r.err.empty());
  Result j = run({"--json", "trace-poly", "ab"});
  CHECK(nlohmann::json::parse(j.out)["trace_polynomial"] == "z");
}

TEST_CASE("chebyshev", "[cli]") {
  CHECK(run({"chebyshev", "4"}).out == "x^4 - 3*x^2 + 1\n");
  CHECK(run({"chebyshev", "-1"}).code == 1);
}

TEST_CASE("certify su2 by family", "[cli]") {
  Result r = run({"certify", "su2", "--family", "a", "--n", "1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "certified");
  CHECK(j["witness"]["kind"] == "exact_point");
  CHECK(j["witness"]["point"]["x"] == "1/1");
  CHECK(j["witness"]["point"]["y"] == "1/1");
  CHECK(j["witness"]["point"]["z"] == "0/1");
  CHECK(j["tool"] == "wordmap");
}

TEST_CASE("certify su2 by word", "[cli]") {
  Result r = run({"certify", "su2", "[[a,b],b^3[a,b]b^-3]"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("recognized as family b n=3"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("strategy: ivt"));
}

TEST_CASE("inconclusive exits with 2", "[cli]") {
  Result r = run({"certify", "su2", "--family", "f", "--n", "3", "--m", "3"});
  CHECK(r.code == 2);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("inconclusive"));
}

TEST_CASE("usage errors exit with 1 on stderr", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"certify", "su2"},
           {"certify", "su2", "[a,b]", "--family", "a", "--n", "1"},
           {"certify", "su2", "--family", "q", "--n", "1"},
           {"certify", "su2", "--family", "a"},
           {"certify", "su2", "aba"},
           {"certify", "su2", "--family", "d", "--n", "1"},
           {"certify", "sl2c", "--word", "w9"},
           {"certify", "sl2c", "[a,b]"},
           {"trace-poly", "a+b"},
           {"verify", "/nonexistent/file.json"},
           {"frobnicate"},
       }) {
    Result r = run(args);
    INFO(args[0] << " " << (args.size() > 1 ? args[1] : ""));
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("certificates round trip through verify", "[cli]") {
  for (const auto& fam : {std::vector<std::string>{"--family", "a", "--n", "3"},
                          std::vector<std::string>{"--family", "g", "--n", "6"},
                          std::vector<std::string>{"--family", "e", "--n", "5"}}) {
    std::vector<std::string> args{"--json", "certify", "su2"};
    args.insert(args.end(), fam.begin(), fam.end());
    Result c = run(args);
    REQUIRE(c.code == 0);
    auto path = temp_file("cert.json", c.out);
    Result v = run({"verify", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out == "valid\n");

    auto j = nlohmann::json::parse(c.out);
    j["system"]["p_uv"] = "x";
    auto bad = temp_file("bad.json", j.dump());
    Result vb = run({"--json", "verify", bad.string()});
    CHECK(vb.code == 2);
    CHECK(nlohmann::json::parse(vb.out)["valid"] == false);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
  }
  auto junk = temp_file("junk.json", "{not json");
  CHECK(run({"verify", junk.string()}).code == 1);
  std::filesystem::remove(junk);
}

TEST_CASE("certify sl2c", "[cli]") {
  Result r = run({"certify", "sl2c", "--word", "w5"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("verdict:        surjective"));
  Result j = run({"--json", "certify", "sl2c", "[[a,b],a]", "--template", "B5"});
  CHECK(j.code == 0);
  auto js = nlohmann::json::parse(j.out);
  CHECK(js["verdict"] == "surjective");
  Result tight = run({"certify", "sl2c", "--word", "w1", "--max-pairs", "5"});
  CHECK(tight.code == 2);
}

TEST_CASE("sample", "[cli]") {
  Result r = run({"--json", "sample", "[[a,b],a^2[a,b]a^-2]", "--trials", "300", "--seed", "4", "--tol", "1e-9"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["trials"] == 300);
}

TEST_CASE("batch mode emits JSON lines in input order", "[cli]") {
  auto path = temp_file("batch.txt",
                        "# comment\n"
                        "family a n=2\n"
                        "\n"
                        "family f n=2 m=4\n"
                        "family q n=1\n"
                        "  [[a,b],a[a,b]a^-1]  \n");
  Result r = run({"certify", "su2", "--batch", path.string()});
  CHECK(r.code == 1);
  std::istringstream in(r.out);
  std::vector<nlohmann::json> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(nlohmann::json::parse(l));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["line"] == 2);
  CHECK(lines[0]["status"] == "certified");
  CHECK(lines[1]["input"] == "family f n=2 m=4");
  CHECK(lines[2].contains("error"));
  CHECK(lines[3]["input"] == "[[a,b],a[a,b]a^-1]");
  CHECK(wordmap::verify_certificate(wordmap::certificate_from_json(lines[3])));
  std::filesystem::remove(path);

  auto ok = temp_file("batch_ok.txt", "family a n=1\nfamily g n=3\n");
  CHECK(run({"certify", "su2", "--batch", ok.string()}).code == 0);
  auto inc = temp_file("batch_inc.txt", "family a n=1\nfamily f n=3 m=3\n");
  CHECK(run({"certify", "su2", "--batch", inc.string()}).code == 2);
  std::filesystem::remove(ok);
  std::filesystem::remove(inc);
}

TEST_CASE("limits come from the environment", "[cli]") {
  std::string cmd = std::string("WORDMAP_MAX_PAIRS=3 ") + WORDMAP_CLI_PATH + " certify sl2c --word w1 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
  std::string ok = std::string(WORDMAP_CLI_PATH) + " trace-poly '[a,b]' >/dev/null 2>&1";
  status = std::system(ok.c_str());
  CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("version and help", "[cli]") {
  Result v = run({"--version"});
  CHECK(v.code == 0);
  CHECK_THAT(v.out, Catch::Matchers::ContainsSubstring(wordmap::kVersion));
  Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK_THAT(h.out, Catch::Matchers::ContainsSubstring("certify"));
}
