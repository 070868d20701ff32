#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ivq/cli.hpp"

using namespace ivq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ivq_cli_test";
  Scratch() {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

}  // namespace

TEST_CASE("check") {
  Scratch s;
  auto good = call({"check", s.file("z3.tbl", "3\n0 2 1\n2 1 0\n1 0 2\n")});
  CHECK(good.code == kExitOk);
  auto bad = call({"check", s.file("bad.tbl", "2\n1 1\n0 1\n")});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("idempotence violated at x=0") != std::string::npos);
  CHECK(call({"check", s.file("junk.tbl", "2\n0 1\n")}).code == kExitUsage);
  CHECK(call({"check", (s.dir / "missing.tbl").string()}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"counts", "x"}).code == kExitUsage);
  CHECK(call({"construct", "nope:3"}).code == kExitUsage);
  CHECK(call({"enumerate", "99"}).code == kExitDomain);
}

TEST_CASE("construct and analyze") {
  Scratch s;
  auto out = (s.dir / "z5.tbl").string();
  CHECK(call({"construct", "core:Z5", "-o", out}).code == kExitOk);
  auto human = call({"analyze", out});
  CHECK(human.code == kExitOk);
  CHECK(human.out.find("latin: true") != std::string::npos);
  auto json = call({"analyze", out, "--format", "json", "--subject", "z5"});
  CHECK(json.out.find("\"dis_order\": 5") != std::string::npos);
  CHECK(call({"analyze", out, "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("knot commands") {
  Scratch s;
  auto tre = s.file("trefoil.pres", "gens a b c; rel a c = b; rel b a = c; rel c b = a\n");
  auto r = call({"knot", "complete", tre});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "order 3; isomorphic to core(Z3)\n");
  auto free2 = s.file("free.pres", "gens a b\n");
  CHECK(call({"knot", "complete", free2}).code == kExitDomain);
  auto f8 = s.file("f8.x", "x a c d\nx b a d\nx c a b\nx d c b\n");
  CHECK(call({"knot", "unknot", f8}).out == "nontrivial (order 5)\n");
  CHECK(call({"knot", "unknot", s.file("u.x", "arcs a\n")}).out == "trivial (order 1)\n");
  CHECK(call({"knot", "complete", s.file("bad.pres", "rel a b = c\n")}).code == kExitUsage);
}

TEST_CASE("counts and enumerate are independent of workers and seed") {
  auto one = call({"counts", "1", "9"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == "n\tq\tl\ta\n1\t1\t1\t1\n2\t0\t0\t0\n3\t1\t1\t1\n4\t0\t0\t0\n5\t1\t1\t1\n6\t1\t0\t0\n7\t1\t1\t1\n8\t0\t0\t0\n9\t2\t2\t2\n");
  CHECK(call({"counts", "1..9", "--workers", "4", "--seed", "17"}).out == one.out);
  auto e1 = call({"enumerate", "10"});
  CHECK(call({"enumerate", "10", "--workers", "3"}).out == e1.out);
  Scratch s;
  auto cat = (s.dir / "cat").string();
  CHECK(call({"enumerate", "9", "--catalog", cat}).code == kExitOk);
  CHECK(std::filesystem::exists(s.dir / "cat" / "ivq-n9-2.tbl"));
  CHECK(std::filesystem::exists(s.dir / "cat" / "counts.tsv"));
}

TEST_CASE("element limit from the environment") {
  Scratch s;
  auto tre = s.file("trefoil.pres", "gens a b c; rel a c = b; rel b a = c; rel c b = a\n");
  ::setenv("QF_MAX_ELEMENTS", "2", 1);
  CHECK(call({"knot", "complete", tre}).code == kExitDomain);
  ::unsetenv("QF_MAX_ELEMENTS");
  CHECK(call({"knot", "complete", tre}).code == kExitOk);
}
