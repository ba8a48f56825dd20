#include "doctest.h"
#include "pljs/ir_dump.hpp"
#include "support.hpp"

using namespace pljs;
using pljs::testing::compile_texts;

namespace {

const ChunkIR& ir_of(const CompiledProgram& p, const std::string& module, const std::string& pred) {
  for (const auto& m : p.modules) {
    if (m.name != module) continue;
    for (const auto& ir : m.irs)
      if (ir.pred.key() == pred) return ir;
  }
  throw std::runtime_error("no ir for " + pred);
}

const ResolvedModule& mod(const CompiledProgram& p, const std::string& name) {
  return *p.program.module(name);
}

const char* kLists =
    ":- module(lists, [app/3, mem/2]).\n"
    "app([], L, L).\n"
    "app([H|T], L, [H|R]) :- app(T, L, R).\n"
    "mem(X, [X|_]).\n"
    "mem(X, [_|T]) :- mem(X, T).\n";

}  // namespace

TEST_CASE("imports resolve to the defining module") {
  auto p = compile_texts({kLists, ":- module(m, [go/1]).\n:- use_module(lists).\ngo(X) :- app(X, [], [a]), write(X).\n"});
  const auto& m = mod(p, "m");
  CHECK(m.visible.at({"app", 3}).module == "lists");
  CHECK(m.deps == std::vector<std::string>{"lists", "io"});
  const auto& go = m.preds.at(0).clauses.at(0);
  CHECK(go.body.at(0).target.display() == "lists:app/3");
  CHECK(go.body.at(1).target.builtin);
  CHECK(p.program.load_order == std::vector<std::string>{"lists", "m"});
}

TEST_CASE("ambiguous imports are an error naming both modules") {
  try {
    compile_texts({":- module(a, [p/0]).\np.\n", ":- module(b, [p/0]).\np.\n",
                   ":- module(c, [q/0]).\n:- use_module(a).\n:- use_module(b).\nq :- p.\n"});
    FAIL("expected an error");
  } catch (const CompileError& e) {
    std::string msg = e.what();
    CHECK(msg.find("a") != std::string::npos);
    CHECK(msg.find("b") != std::string::npos);
  }
}

TEST_CASE("unknown predicates warn and fail") {
  Diagnostics d;
  auto p = compile_program({{"m.pl", ":- module(m, [q/0]).\nq :- nowhere(1).\n"}}, d);
  CHECK_FALSE(d.empty());
  const auto& m = mod(p, "m");
  const PredicateDef* stub = m.find({"nowhere", 1});
  REQUIRE(stub);
  CHECK(stub->stub);
}

TEST_CASE("cyclic imports compile") {
  auto p = compile_texts({":- module(e, [ev/1]).\n:- use_module(o).\nev(z).\nev(s(N)) :- od(N).\n",
                          ":- module(o, [od/1]).\n:- use_module(e).\nod(s(N)) :- ev(N).\n"});
  CHECK(p.modules.size() == 2);
  CHECK(mod(p, "e").deps == std::vector<std::string>{"o"});
  CHECK(mod(p, "o").deps == std::vector<std::string>{"e"});
}

TEST_CASE("slots: args, temporaries and frame variables") {
  auto p = compile_texts({":- module(m, [p/2]).\np(X, Y) :- q(X, Z), r(Z, Y).\nq(a, b).\nr(b, c).\n"});
  const auto& ir = ir_of(p, "m", "p/2");
  REQUIRE(ir.clauses.size() == 1);
  const auto& cc = ir.clauses[0];
  CHECK(cc.chunks.size() == 2);
  CHECK(cc.nframe == 2);
  CHECK(cc.chunks[0].call->target.pred.key() == "q/2");
  CHECK_FALSE(cc.chunks[0].call->is_last);
  CHECK(cc.chunks[1].call->is_last);
  CHECK(check_chunk_invariant(cc).empty());
}

TEST_CASE("a trailing chunk exists only after inline steps") {
  auto p = compile_texts({":- module(m, [p/1, q/1]).\np(X) :- r(X), s(X), t(X).\nq(X) :- r(X), X = a.\nr(a).\ns(a).\nt(a).\n"});
  CHECK(ir_of(p, "m", "p/1").clauses[0].chunks.size() == 3);
  CHECK(ir_of(p, "m", "q/1").clauses[0].chunks.size() == 2);
  CHECK_FALSE(ir_of(p, "m", "q/1").clauses[0].chunks[0].call->is_last);
}

TEST_CASE("first-argument selection") {
  auto p = compile_texts({":- module(m, [c/1]).\nc(a).\nc(f(_)).\nc(X) :- X = 1.\nc(1.5).\nc(\"s\").\nc(a).\n"});
  const auto& sel = ir_of(p, "m", "c/1").selection;
  CHECK(sel.indexed);
  CHECK(sel.var_bucket == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(sel.default_bucket == std::vector<int>{2});
  std::map<std::string, std::vector<int>> buckets(sel.buckets.begin(), sel.buckets.end());
  CHECK(buckets.at("a/0") == std::vector<int>{0, 2, 5});
  CHECK(buckets.at("f/1") == std::vector<int>{1, 2});
  CHECK(buckets.at("#1.5") == std::vector<int>{2, 3});
  CHECK(buckets.at("\"s") == std::vector<int>{2, 4});
}

TEST_CASE("--no-index gives linear selection") {
  CompileOptions o;
  o.index = false;
  auto p = compile_texts({kLists}, o);
  CHECK_FALSE(ir_of(p, "lists", "app/3").selection.indexed);
}

TEST_CASE("variable first arguments everywhere give linear selection") {
  auto p = compile_texts({":- module(m, [p/1, q/1]).\np(X) :- X = a.\np(_).\nq(a).\n"});
  CHECK_FALSE(ir_of(p, "m", "p/1").selection.indexed);
  CHECK(ir_of(p, "m", "q/1").selection.indexed);
}

TEST_CASE("chunk invariant rejects malformed code") {
  ClauseCode cc;
  cc.chunks.resize(2);
  CHECK_FALSE(check_chunk_invariant(cc).empty());
  Chunk c;
  Step use;
  use.kind = StepKind::PutArg;
  use.arg = 0;
  use.expr = Expr::var({SlotKind::Temp, 0});
  c.steps.push_back(use);
  c.call = Call{Target{"m", "", {"q", 1}, false}, 1, true};
  ClauseCode undefined_temp;
  undefined_temp.ntemp = 1;
  undefined_temp.chunks.push_back(c);
  CHECK_FALSE(check_chunk_invariant(undefined_temp).empty());
  ClauseCode last_then_more;
  last_then_more.chunks = {c, Chunk{}};
  last_then_more.chunks[0].steps.clear();
  CHECK_FALSE(check_chunk_invariant(last_then_more).empty());
}

TEST_CASE("IR dump") {
  auto p = compile_texts({kLists});
  std::string d = dump(ir_of(p, "lists", "app/3"));
  CHECK(d.starts_with("pred lists:app/3 clauses=2 select=switch\n"));
  CHECK(d.find("  case []/0 -> 0\n") != std::string::npos);
  CHECK(d.find("      Call lists:app/3 last\n") != std::string::npos);
  CHECK(d.find("      UnifyConst a0 []\n") != std::string::npos);
}
