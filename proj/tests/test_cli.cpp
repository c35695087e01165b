#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "sperner/constructions.hpp"
#include "sperner/family_io.hpp"

namespace fs = std::filesystem;
using namespace sperner;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sperner-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("construct then verify") {
  TempDir tmp;
  const std::string six = tmp.file("six.fam");
  CHECK(run({"construct", "--type", "six", "--n", "8", "-o", six}).code == 0);
  CHECK(read_family_file(six).family == six_sperner(8));
  const Run ok = run({"verify", "--mode", "saturated", "--k", "6", "-i", six});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict: true") != std::string::npos);
  CHECK(ok.out.find("subsets_checked: 256") != std::string::npos);
  const Run sampled = run({"verify", "--mode", "saturated", "--k", "6", "-i", six, "--sampled", "50", "--seed", "2"});
  CHECK(sampled.code == 0);
  CHECK(sampled.out.find("sampled (non-exhaustive)") != std::string::npos);
}

TEST_CASE("verify failure prints a witness") {
  TempDir tmp;
  const std::string f = tmp.file("f.fam");
  std::ofstream(f) << "sperner-v1\nn=2\n-\n0\n";
  const Run r = run({"verify", "--mode", "ksperner", "--k", "1", "-i", f});
  CHECK(r.code == 1);
  CHECK(r.out.find("witness: -\nwitness: 0\n") != std::string::npos);
  const Run a = run({"verify", "--mode", "antichain", "-i", f});
  CHECK(a.code == 1);
  const Run s = run({"verify", "--mode", "saturated", "--k", "1", "-i", f});
  CHECK(s.code == 1);
  CHECK(s.out.find("witness:") != std::string::npos);
}

TEST_CASE("cambridge decomposition") {
  TempDir tmp;
  const std::string c = tmp.file("c.fam");
  CHECK(run({"construct", "--type", "cambridge", "-o", c}).code == 0);
  const Run d = run({"decompose", "-i", c});
  CHECK(d.code == 0);
  CHECK(d.out.find("layers: 2") != std::string::npos);
  CHECK(d.out.find("layer 0: size=10 saturated=true") != std::string::npos);
  CHECK(d.out.find("layer 1: size=10 saturated=false") != std::string::npos);
  CHECK(d.out.find("layered: true") != std::string::npos);
  const Run b1 = run({"construct", "--type", "cambridge", "--part", "B1"});
  CHECK(parse_family(b1.out).family == cambridge_fixture().b1);
}

TEST_CASE("errors exit with code 2") {
  TempDir tmp;
  const std::string bad = tmp.file("bad.fam");
  std::ofstream(bad) << "sperner-v1\nn=2\n0\n0\n";
  const Run r = run({"verify", "--mode", "saturated", "--k", "1", "-i", bad});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"verify", "--mode", "nope", "-i", bad}).code == 2);
  CHECK(run({"verify", "--mode", "saturated", "-i", tmp.file("missing.fam")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"construct", "--type", "powerset", "--k", "1"}).code == 2);
  CHECK(run({"search", "--min-saturated", "--n", "9", "--k", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("combine and stats") {
  TempDir tmp;
  const std::string a = tmp.file("a.fam");
  const std::string c = tmp.file("c.fam");
  CHECK(run({"construct", "--type", "six", "-o", a}).code == 0);
  CHECK(run({"combine", a, a, "--h1", "6,7", "-o", c}).code == 0);
  const Family combined = read_family_file(c).family;
  CHECK(combined.size() == 450);
  const Run s = run({"stats", "-i", c, "--lengths", "1,2,11"});
  CHECK(s.code == 0);
  CHECK(s.out.find("size: 450") != std::string::npos);
  CHECK(s.out.find("chains[1]: 450") != std::string::npos);
  CHECK(s.out.find("chains[11]: 0") != std::string::npos);
  CHECK(s.out.find("homogeneous: 6,7,14,15") != std::string::npos);
  CHECK(s.out.find("small: 225") != std::string::npos);
  const Run json = run({"construct", "--type", "powerset", "--k", "3", "--json"});
  CHECK(json.out.rfind("{", 0) == 0);
  CHECK(parse_family(json.out).family == powerset_construction(3, 3));
}

TEST_CASE("oversat metadata passes through") {
  TempDir tmp;
  const std::string o = tmp.file("o.fam");
  CHECK(run({"construct", "--type", "oversat", "--k", "3", "--seed", "5", "-o", o}).code == 0);
  const Run s = run({"stats", "-i", o, "--passthrough"});
  CHECK(s.out.rfind("# oversat k=3 profile=desk seed=5", 0) == 0);
  CHECK(run({"verify", "--mode", "oversaturated", "--k", "3", "-i", o}).code == 0);
  const std::string o2 = tmp.file("o2.fam");
  CHECK(run({"construct", "--type", "oversat", "--k", "3", "--seed", "5", "-o", o2}).code == 0);
  CHECK(slurp(o) == slurp(o2));
}

TEST_CASE("every construct output reparses") {
  TempDir tmp;
  const std::string base = tmp.file("base.fam");
  CHECK(run({"construct", "--type", "powerset", "--k", "4", "--n", "5", "-o", base}).code == 0);
  const std::vector<std::vector<std::string>> cases = {
      {"--type", "powerset", "--k", "5"},
      {"--type", "six", "--n", "9"},
      {"--type", "epsilon", "--k", "7"},
      {"--type", "cambridge", "--part", "B0"},
      {"--type", "doubled", "--k", "5", "-i", base},
      {"--type", "combined", "-i", base, "-i", base},
      {"--type", "oversat", "--k", "2", "--extra", "2"},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args = {"construct"};
    args.insert(args.end(), c.begin(), c.end());
    const Run first = run(args);
    REQUIRE(first.code == 0);
    const Family f = parse_family(first.out).family;
    CHECK(format_family_text(f) == format_family_text(parse_family(format_family_text(f)).family));
    CHECK(run(args).out == first.out);
  }
}

TEST_CASE("search") {
  const Run r = run({"search", "--min-saturated", "--n", "3", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum: 2") != std::string::npos);
  CHECK(r.out.find("exhausted: true") != std::string::npos);
  CHECK(r.out.find("sperner-v1\nn=3\n-\n0,1,2\n") != std::string::npos);
}
