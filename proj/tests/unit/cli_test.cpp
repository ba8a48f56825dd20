#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "process.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using pljs::testing::data_dir;
using pljs::testing::slurp;
using pljs::tools::find_program;
using pljs::tools::run_process;
using pljs::tools::ProcessResult;

namespace {

ProcessResult pljsc(std::vector<std::string> args) {
  args.insert(args.begin(), PLJSC_PATH);
  return run_process(args, true);
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("pljs_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string fixture(const std::string& name) { return data_dir() + "/fixture5/" + name + ".pl"; }

bool have_node() { return !find_program("node").empty(); }

}  // namespace

TEST_CASE("compile writes one file per module and a manifest") {
  fs::path out = scratch("compile");
  auto r = pljsc({"compile", "-o", out.string(), fixture("app"), fixture("dom"), fixture("even"),
                  fixture("odd"), fixture("seq")});
  REQUIRE(r.status == 0);
  for (const char* f : {"app.js", "dom.js", "even.js", "odd.js", "seq.js", "manifest.json"})
    CHECK(slurp((out / f).string()) == slurp(data_dir() + "/fixture5/expected/" + f));
  fs::remove_all(out);
}

TEST_CASE("compile errors leave no outputs") {
  fs::path out = scratch("error");
  fs::path bad = scratch("bad.pl");
  std::ofstream(bad) << ":- module(bad, [p/0]).\np :- q(.\n";
  auto r = pljsc({"compile", "-o", out.string(), fixture("seq"), bad.string()});
  CHECK(r.status != 0);
  CHECK_FALSE(fs::exists(out / "seq.js"));
  CHECK_FALSE(fs::exists(out / "manifest.json"));
  fs::remove(bad);
  fs::remove_all(out);
}

TEST_CASE("--dump-ir prints the chunk IR") {
  fs::path out = scratch("dump");
  auto r = pljsc({"compile", "--dump-ir", "-o", out.string(), fixture("seq")});
  CHECK(r.status == 0);
  CHECK(r.out.find("pred seq:append/3 clauses=2 select=switch") != std::string::npos);
  auto lin = pljsc({"compile", "--dump-ir", "--no-index", "-o", out.string(), fixture("seq")});
  CHECK(lin.out.find("pred seq:append/3 clauses=2 select=linear") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("run names the missing host engine") {
  auto r = pljsc({"run", fixture("seq"), "--entry", "seq:member(X, [a])", "--engine",
                  "/nonexistent/node"});
  CHECK(r.status == 2);
}

TEST_CASE("run prints answers and reports success by exit code") {
  if (!have_node()) return;
  auto files = std::vector<std::string>{fixture("app"), fixture("dom"), fixture("even"),
                                        fixture("odd"), fixture("seq")};
  auto run = [&](const std::string& entry, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{"run"};
    args.insert(args.end(), files.begin(), files.end());
    args.push_back("--entry");
    args.push_back(entry);
    args.insert(args.end(), extra.begin(), extra.end());
    return pljsc(args);
  };
  auto r = run("seq:select(X, [a, b, c], R)");
  CHECK(r.status == 0);
  CHECK(r.out == "X = a, R = [b,c]\nX = b, R = [a,c]\nX = c, R = [a,b]\n");
  CHECK(run("seq:select(X, [a, b, c], R)", {"--no-index"}).out == r.out);
  CHECK(run("app:parity(s(s(s(z))), P)").out == "P = odd\n");
  CHECK(run("app:demo(X)").out == "X = b\nX = f(2,3.5,'Odd atom',\"text\",-2)\n");
  CHECK(run("odd:count(s(s(z)), C)").out == "C = 2\n");
  CHECK(run("seq:classify(\"str\", C)").out == "C = string\n");
  auto none = run("seq:first([], X)");
  CHECK(none.status == 0);
  CHECK(none.out == "X = none\n");
  auto fail = run("seq:member(x, [a, b])");
  CHECK(fail.status == 1);
  CHECK(fail.out.empty());
  CHECK(run("seq:(X is foo + 1)").status == 2);
}

TEST_CASE("hello world runs against a host document") {
  if (!have_node()) return;
  fs::path runtime = scratch("runtime.js");
  std::ofstream(runtime) << slurp(PLJS_RUNTIME_DOUBLE)
                         << "\nglobalThis.document = { body: {} };\n"
                            "process.on('exit', function () { console.log(document.body.innerHtml); });\n";
  auto r = pljsc({"run", data_dir() + "/ffi/hello.pl", "--entry", "hello:main", "--runtime",
                  runtime.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "true\nHello World\n");
  fs::remove(runtime);
}

TEST_CASE("library modules") {
  if (!have_node()) return;
  fs::path src = scratch("libs.pl");
  std::ofstream(src) << ":- module(libs, [t/1, w/1]).\n"
                        ":- use_module(library(lists)).\n"
                        ":- use_module(library(freeze)).\n"
                        "t(S) :- msort([c, a, b], S0), reverse(S0, S).\n"
                        "w(X) :- freeze(X, (write(woke(X)), nl)), X = 5.\n";
  CHECK(pljsc({"run", src.string(), "--entry", "libs:t(S)"}).out == "S = [c,b,a]\n");
  CHECK(pljsc({"run", src.string(), "--entry", "libs:w(X)"}).out == "woke(5)\nX = 5\n");
  fs::remove(src);
}

TEST_CASE("bench prints a table and flags wrong output") {
  if (!have_node()) return;
  fs::path dir = scratch("bench");
  fs::create_directories(dir);
  std::ofstream(dir / "good.txt") << "R = [3,2,1]\n";
  std::ofstream(dir / "bad.txt") << "R = wrong\n";
  std::ofstream(dir / "p.pl") << ":- module(p, [r/1]).\nr(R) :- R = [3,2,1].\n";
  std::ofstream(dir / "MANIFEST") << "# suite\nok p.pl p:r(R) 5 good.txt\nko p.pl p:r(R) 1 bad.txt\n";
  auto r = pljsc({"bench", (dir / "MANIFEST").string()});
  CHECK(r.status == 1);
  CHECK(r.out.starts_with("Benchmark"));
  CHECK(r.out.find("time(ms)") != std::string::npos);
  CHECK(r.out.find("Ratio") == std::string::npos);
  CHECK(r.out.find("ok (x5)") != std::string::npos);
  CHECK(r.out.find("FAILED") != std::string::npos);
  CHECK(r.out.find("FAILED") > r.out.find("ko"));
  fs::remove_all(dir);
}

TEST_CASE("bench ratio column against a baseline") {
  if (!have_node()) return;
  fs::path dir = scratch("baseline");
  fs::create_directories(dir);
  std::ofstream(dir / "good.txt") << "X = 1\n";
  std::ofstream(dir / "p.pl") << ":- module(p, [r/1]).\nr(1).\n";
  std::ofstream(dir / "MANIFEST") << "one p.pl p:r(X) 1 good.txt\n";
  fs::path base = dir / "baseline.sh";
  std::ofstream(base) << "#!/bin/sh\necho 'X = 1'\necho '#time 1000.0'\n";
  fs::permissions(base, fs::perms::owner_all);
  auto r = pljsc({"bench", (dir / "MANIFEST").string(), "--baseline", base.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("Ratio") != std::string::npos);
  fs::remove_all(dir);
}
