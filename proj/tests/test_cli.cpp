#include "chordgenus/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chordgenus;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "chordgenus");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("genus on a single diagram") {
  const auto r = run({"genus", "--diagram", "(1,3),(2,4)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n=2 d=2 g=1\n");
  CHECK(run({"genus", "--diagram", "(1,2)", "--loops"}).out == "n=1 d=3 g=0 loops=1:2,1:1,1:1\n");

  const auto bad = run({"genus", "--diagram", "n=3;(1,3)"});
  CHECK(bad.code == kExitDomainError);
  CHECK(bad.out.find("IncompleteDiagram") != std::string::npos);
}

TEST_CASE("genus on a batch file keeps going past bad lines") {
  const auto path = std::filesystem::temp_directory_path() / "chordgenus_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "# comment\n(1,2)\n\n(1,1)\n(1,2),(3,4)\n(1,3\n";
  }
  const auto r = run({"genus", "--file", path.string()});
  CHECK(r.code == kExitDomainError);
  CHECK(r.out ==
        "n=1 d=3 g=0\n"
        "error line=4 DuplicateDot: chord (1,1) uses one dot twice\n"
        "n=2 d=4 g=0\n"
        "error line=6 SyntaxError: expected ')' at offset 4 in \"(1,3\"\n");
  std::filesystem::remove(path);
  CHECK(run({"genus", "--file", "/nonexistent/x"}).code == kExitDomainError);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "x"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"genus", "--diagram", "(1,2)", "--file", "f"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("domain errors exit 1 and name the invariant") {
  const auto big = run({"enumerate", "--n", "8"});
  CHECK(big.code == kExitDomainError);
  CHECK(big.err.find("TooLarge") != std::string::npos);
  CHECK(run({"plugs", "--n", "10", "--k-max", "11", "--runs", "5", "--seed", "1"}).code ==
        kExitDomainError);
  CHECK(run({"procedure", "--n", "0", "--seed", "1"}).code == kExitDomainError);
}

TEST_CASE("enumerate writes data to stdout and the report to stderr") {
  const auto r = run({"enumerate", "--n", "2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,count,d_mean_num,d_mean_den,genus,genus_count\n2,12,", 0) == 0);
  CHECK(r.err.find("summary:") != std::string::npos);
}

TEST_CASE("--out moves the report to stdout and reruns are byte-identical") {
  const auto dir = std::filesystem::temp_directory_path() / "chordgenus_cli_out";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  const auto ra = run({"sample", "--n", "50", "--samples", "40", "--seed", "3", "--out",
                       a.string(), "--format", "json"});
  const auto rb = run({"sample", "--n", "50", "--samples", "40", "--seed", "3", "--out",
                       b.string(), "--format", "json"});
  CHECK(ra.code == kExitOk);
  CHECK(ra.out.find("summary:") != std::string::npos);
  CHECK(ra.err.empty());
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"generator\": \"mt19937_64\"") != std::string::npos);
  CHECK(run({"sample", "--n", "5", "--samples", "4", "--seed", "1", "--out",
             (dir / "no" / "x.csv").string()})
            .code == kExitDomainError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("procedure trace") {
  const auto r = run({"procedure", "--n", "3", "--seed", "42", "--trace"});
  CHECK(r.code == kExitOk);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].rfind("step=1 chord=(", 0) == 0);
  CHECK(lines[2].find("closed=1") != std::string::npos);
  CHECK(lines[2].find("new_pointer") == std::string::npos);
  CHECK(lines[3].rfind("n=3 seed=42 d=", 0) == 0);
  CHECK(run({"procedure", "--n", "3", "--seed", "42"}).out == lines[3] + "\n");
}

TEST_CASE("plugs subcommand") {
  const auto r = run({"plugs", "--n", "100", "--k-max", "5", "--runs", "50", "--seed", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,runs,k,mean_plugs,", 0) == 0);
}
