#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using cosetcover::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cosetcover_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check reports the classic cover") {
  auto r = run({"check", "--z", "0/2,0/3,1/4,5/6,7/12", "--m", "1"});
  CHECK(r.code == cosetcover::cli::exit_ok);
  CHECK(has(r.out, "multiplicity = 1"));
  CHECK(has(r.out, "cover = true"));
  CHECK(has(r.out, "minimal = true"));
  CHECK(has(r.out, "regular_cover = true"));

  auto n = run({"check", "--z", "0/2,0/4,2/4"});
  CHECK(has(n.out, "regular = true"));
  CHECK(has(n.out, "cover = false"));
}

TEST_CASE("check assertions set the exit code") {
  CHECK(run({"check", "--z", "0/2,0/3,1/4,5/6,7/12", "--assert", "cover,minimal,!exact"}).code ==
        cosetcover::cli::exit_ok);
  auto bad = run({"check", "--z", "0/2,0/4,2/4", "--assert", "regular,cover"});
  CHECK(bad.code == cosetcover::cli::exit_assert_failed);
  CHECK(has(bad.err, "assertion failed: cover"));
  CHECK(run({"check", "--z", "0/2,0/4,2/4", "--assert", "nonsense"}).code == cosetcover::cli::exit_usage);
}

TEST_CASE("usage errors name the offending flag") {
  auto r = run({"check", "--bogus"});
  CHECK(r.code == cosetcover::cli::exit_usage);
  CHECK(has(r.err + r.out, "--bogus"));
  CHECK(run({}).code == cosetcover::cli::exit_usage);
  CHECK(run({"frobnicate"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"check", "--z", "1/0"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"check"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"f", "0"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"group", "Q7"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"verify", "--z", "0/1", "--theorem", "9.9"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"search", "--predicate", "nope"}).code == cosetcover::cli::exit_usage);
  CHECK(run({"--help"}).code == cosetcover::cli::exit_ok);
}

TEST_CASE("f prints the factorization") {
  auto r = run({"f", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "12 = 2^2·3, f = 4\n");
  CHECK(has(run({"f", "1"}).out, "f = 0"));
  CHECK(has(run({"f", "12", "--json"}).out, "\"f\":4"));
}

TEST_CASE("group lists the lattice") {
  auto r = run({"group", "S3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "order 6"));
  CHECK(has(r.out, "subgroups: 6"));
  auto j = run({"group", "Z2xZ2", "--json"});
  CHECK(j.code == 0);
  CHECK(has(j.out, "\"order\":4"));
}

TEST_CASE("demo and verify") {
  auto d = run({"demo", "example21", "--k", "3", "--verify", "1.1"});
  CHECK(d.code == 0);
  CHECK(has(d.out, "partition = true"));
  CHECK(has(d.out, "confirmed      k >= m + f([G:G_i]) i=1"));
  CHECK(!has(d.out, "COUNTEREXAMPLE"));

  auto list = run({"demo"});
  CHECK(has(list.out, "classic_cover"));

  auto v = run({"verify", "--z", "0/2,1/4,3/4", "--theorem", "c1.2"});
  CHECK(v.code == 0);
  CHECK(has(v.out, "max gcd=4"));

  auto all = run({"verify", "--demo", "classic_cover"});
  CHECK(all.code == 0);
  CHECK(!has(all.out, "COUNTEREXAMPLE"));

  auto cc = run({"verify", "--demo", "classic_cover", "--cross-check"});
  CHECK(cc.code == 0);
  CHECK(has(cc.out, "cross-check: agree"));

  auto grp = run({"verify", "--group", "Z6", "--coset", "1:2", "--coset", "3:3", "--theorem", "1.5,cor1.2"});
  CHECK(grp.code == 0);
  CHECK(has(grp.out, "[1.5]"));
}

TEST_CASE("JSON output round-trips as input") {
  const auto path = temp_path("roundtrip.json");
  auto w = run({"check", "--z", "0/2,0/3,1/4,5/6,7/12", "--json", "--out", path});
  CHECK(w.code == 0);
  const auto written = slurp(path);
  CHECK(has(written, "\"classes\""));
  auto again = run({"check", "--input", path, "--json"});
  CHECK(again.code == 0);
  CHECK(again.out == written);

  const auto gpath = temp_path("group.json");
  auto g = run({"check", "--group", "S3", "--coset", "0:1", "--coset", "2:1", "--coset", "4:1", "--json", "--out", gpath});
  CHECK(g.code == 0);
  auto gagain = run({"check", "--input", gpath, "--json"});
  CHECK(gagain.code == 0);
  CHECK(gagain.out == slurp(gpath));

  const auto vpath = temp_path("verify.json");
  auto v = run({"verify", "--input", path, "--theorem", "tomkinson", "--json", "--out", vpath});
  CHECK(v.code == 0);
  CHECK(has(slurp(vpath), "\"verdict\":\"confirmed\""));
  std::remove(path.c_str());
  std::remove(gpath.c_str());
  std::remove(vpath.c_str());

  CHECK(run({"check", "--input", temp_path("missing.json")}).code == cosetcover::cli::exit_usage);
}

TEST_CASE("search enumerates and hunts") {
  auto s = run({"search", "--max-period", "4", "--max-k", "3", "--predicate", "disjoint"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "0/2,1/4,3/4"));
  CHECK(has(s.out, "21 systems"));

  auto j = run({"search", "--max-period", "4", "--max-k", "3", "--predicate", "disjoint", "--json"});
  CHECK(has(j.out, "{\"system\":{\"classes\":[{\"a\":0,\"n\":2},{\"a\":1,\"n\":2}],\"period\":2}}"));

  auto h = run({"search", "--hunt", "c1.2", "--max-period", "12", "--max-k", "4"});
  CHECK(h.code == 0);
  CHECK(has(h.out, "no counterexample within bounds"));
  CHECK(!has(h.out, "verified"));

  auto sw = run({"search", "--group", "S3", "--max-k", "3", "--predicate", "cover", "--verify", "all"});
  CHECK(sw.code == 0);

  auto det1 = run({"search", "--group", "D4", "--max-k", "3", "--predicate", "minimal"});
  auto det2 = run({"search", "--group", "D4", "--max-k", "3", "--predicate", "minimal", "--jobs", "3"});
  CHECK(det1.out == det2.out);
}
