// Acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "pljs/engine/interp.hpp"
#include "pljs/engine/vm.hpp"
#include "pljs/normalize.hpp"
#include "pljs/parser.hpp"
#include "pljs/reader.hpp"
#include "randprog.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace pljs;
using namespace pljs::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool flat_goal(const Term& g) {
  return !(g.is_compound(";", 2) || g.is_compound("->", 2) || g.is_compound("\\+", 1) ||
           g.is_compound(",", 2) || g.is_var());
}

Outcome normalization_equivalence() {
  constexpr int kPrograms = 1000;
  std::mt19937 rng(20240611);
  auto t0 = Clock::now();
  Outcome out;
  std::size_t queries = 0, answers = 0, with_aux = 0;
  for (int n = 0; n < kPrograms; ++n) {
    RandomProgram prog = random_program(rng);
    engine::Interpreter before, after;
    Normalizer norm;
    for (const auto& c : prog.clauses) {
      before.add_clause(c.head, c.body);
      for (const auto& pc : norm.clause(c.head, c.body)) {
        for (const auto& g : pc.body)
          if (!flat_goal(*g)) {
            out.ok = false;
            out.detail = "control construct left in " + to_string(pc);
            return out;
          }
        after.add_clause(pc);
        if (pc.aux) ++with_aux;
      }
    }
    for (std::size_t i = 0; i < prog.preds; ++i) {
      TermPtr q = make_compound("p" + std::to_string(i), {make_var("Q")});
      auto a = sorted(before.solve(q).items);
      auto b = sorted(after.solve(q).items);
      ++queries;
      answers += a.size();
      if (a != b) {
        out.ok = false;
        out.detail = "program " + std::to_string(n) + " query p" + std::to_string(i) +
                     " differs\n" + prog.text();
        return out;
      }
    }
  }
  double s = seconds_since(t0);
  if (s >= 60) out.ok = false;
  std::ostringstream d;
  d << kPrograms << " programs, " << queries << " queries, " << answers << " answers, "
    << with_aux << " auxiliary clauses, " << s << "s";
  out.detail = d.str();
  return out;
}

Outcome golden_emission() {
  const std::string dir = data_dir() + "/fixture5";
  std::vector<SourceFile> files;
  for (const char* name : {"app", "dom", "even", "odd", "seq"})
    files.push_back(read_source_file(dir + "/" + name + ".pl"));
  Diagnostics diags;
  CompiledProgram prog = compile_program(files, diags);
  Outcome out;
  std::size_t compared = 0;
  auto compare = [&](const std::string& file, const std::string& got) {
    std::string want = slurp(dir + "/expected/" + file);
    ++compared;
    if (want != got) {
      out.ok = false;
      out.detail += " mismatch:" + file;
    }
  };
  for (const auto& m : prog.modules) compare(module_file_name(m.name), m.js.source);
  compare("manifest.json", loader_manifest(prog));
  std::set<std::string> allowed = js_builtins();
  allowed.insert({"$r", "$s", "$extends"});
  std::size_t foreign = 0;
  for (const auto& m : prog.modules) {
    foreign += m.js.foreign_spans.size();
    for (const auto& g : free_globals(m.js.source, m.js.foreign_spans))
      if (!allowed.count(g)) {
        out.ok = false;
        out.detail += " global:" + m.name + ":" + g;
      }
  }
  // The scanner has to see globals outside foreign code.
  if (free_globals("function f(a) { return a + leak; }") != std::set<std::string>{"leak"}) {
    out.ok = false;
    out.detail += " scanner-selftest";
  }
  if (prog.modules.size() != 5 || foreign == 0) out.ok = false;
  out.detail = std::to_string(compared) + " files, " + std::to_string(foreign) +
               " foreign spans excluded" + out.detail;
  return out;
}

Outcome ir_invariants() {
  const char* firsts[] = {"a", "b", "c", "X"};
  const char* bodies[] = {"true", "!"};
  struct Query {
    const char* name;
    std::size_t arity;
    const char* text;
  };
  const Query queries[] = {{"qa", 1, "qa(I)"}, {"qb", 1, "qb(I)"},    {"qc", 1, "qc(I)"},
                           {"qd", 1, "qd(I)"}, {"qv", 2, "qv(K, I)"}, {"qs", 1, "qs(I)"}};
  static const OpTable ops = OpTable::defaults();
  auto t0 = Clock::now();
  Outcome out;
  std::size_t dbs = 0, entries_indexed = 0, entries_linear = 0;
  std::vector<int> shape;
  std::function<bool()> visit = [&]() -> bool {
    std::string text =
        ":- module(t, [qa/1, qb/1, qc/1, qd/1, qv/2, qs/1]).\n"
        "qa(I) :- p(a, I).\nqb(I) :- p(b, I).\nqc(I) :- p(c, I).\n"
        "qd(I) :- p(d, I).\nqv(K, I) :- p(K, I).\nqs(I) :- p(s(a), I).\n";
    for (std::size_t i = 0; i < shape.size(); ++i)
      text += std::string("p(") + firsts[shape[i] / 2] + ", " + std::to_string(i) + ") :- " +
              bodies[shape[i] % 2] + ".\n";
    if (shape.empty()) text += "p(_, _) :- fail.\n";
    ++dbs;
    CompiledProgram prog = compile_texts({text});
    engine::CodeTable indexed = engine::build_code_table(prog.program, {true});
    engine::CodeTable linear = engine::build_code_table(prog.program, {false});
    for (const auto* table : {&indexed, &linear})
      for (const auto& [t, e] : table->preds)
        for (const auto& cc : e.ir.clauses)
          if (auto msg = check_chunk_invariant(cc); !msg.empty()) {
            out.ok = false;
            out.detail = t.display() + ": " + msg + "\n" + text;
            return false;
          }
    Diagnostics diags;
    ModuleAst ast = read_module(text, diags);
    engine::Interpreter interp;
    for (const auto& c : ast.clauses) interp.add_clause(c.head, c.body);
    engine::Vm vi(indexed), vl(linear);
    for (const auto& q : queries) {
      PredInd pred{q.name, q.arity};
      auto a = vi.solve("t", pred).items;
      entries_indexed += vi.clause_entries();
      auto b = vl.solve("t", pred).items;
      entries_linear += vl.clause_entries();
      auto c = interp.solve(parse_term(std::string_view(q.text), ops)).items;
      if (a != b || a != c) {
        out.ok = false;
        out.detail = std::string("query ") + q.text + " differs\n" + text;
        return false;
      }
    }
    if (shape.size() == 5) return true;
    for (int k = 0; k < 8; ++k) {
      shape.push_back(k);
      bool ok = visit();
      shape.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  visit();
  double s = seconds_since(t0);
  if (out.ok) {
    if (s >= 30) out.ok = false;
    std::ostringstream d;
    d << dbs << " databases, clause entries " << entries_indexed << " indexed vs "
      << entries_linear << " linear, " << s << "s";
    out.detail = d.str();
  }
  return out;
}

Outcome ffi() {
  const std::string dir = data_dir() + "/ffi";
  Outcome out;
  int negatives = 0;
  for (const char* ok : {"hello.pl", "typed_head.pl"}) {
    try {
      Diagnostics diags;
      auto prog = compile_program({read_source_file(dir + "/" + ok)}, diags);
      if (prog.modules.front().js.source.find("set_innerHtml") == std::string::npos) {
        out.ok = false;
        out.detail += std::string(" ") + ok + ":no-method";
      }
    } catch (const CompileError& e) {
      out.ok = false;
      out.detail += std::string(" ") + ok + ":" + e.what();
    }
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    SourceFile src = read_source_file(path.string());
    if (!src.text.starts_with("% expect: ")) continue;
    std::string expect = src.text.substr(10, src.text.find('\n') - 10);
    ++negatives;
    try {
      Diagnostics diags;
      compile_program({src}, diags);
      out.ok = false;
      out.detail += " " + path.filename().string() + ":accepted";
    } catch (const CompileError& e) {
      if (std::string(e.what()).find(expect) == std::string::npos) {
        out.ok = false;
        out.detail += " " + path.filename().string() + ":" + e.what();
      }
    }
  }
  if (negatives == 0) out.ok = false;
  out.detail = "hello world compiled, " + std::to_string(negatives) + " negative fixtures" + out.detail;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"normalization-equivalence", normalization_equivalence},
      {"golden-emission-abi-closure", golden_emission},
      {"ir-invariants-indexing-transparency", ir_invariants},
      {"ffi-receiver-inference", ffi},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
