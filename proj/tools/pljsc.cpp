// pljsc: compile Prolog modules to JavaScript, run queries, run benchmarks.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "pljs/driver.hpp"
#include "pljs/ir_dump.hpp"
#include "pljs/jsfmt.hpp"
#include "process.hpp"

namespace fs = std::filesystem;
using namespace pljs;

namespace {

struct Common {
  bool no_index = false;
  std::vector<std::string> lib_dirs;
  std::string engine = "node";
  std::string runtime;
};

CompileOptions compile_options(const Common& c) {
  CompileOptions o;
  o.index = !c.no_index;
  o.lib_dirs = c.lib_dirs;
  o.lib_dirs.push_back(PLJS_LIB_DIR);
  return o;
}

void print_warnings(const Diagnostics& diags) {
  for (const auto& w : diags.warnings()) std::cerr << format(w) << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string runtime_path(const Common& c) {
  if (!c.runtime.empty()) return c.runtime;
  if (const char* env = std::getenv("PLJS_RUNTIME")) return env;
  return PLJS_DEFAULT_RUNTIME;
}

/// Runtime, emitted modules in load order, then the entry call.
std::string make_bundle(const Common& c, const CompiledProgram& prog, const EntryQuery& q,
                        const std::string& call, int reps) {
  std::string s = slurp(runtime_path(c));
  s += "\n";
  for (const auto& m : prog.modules) s += m.js.source;
  s += "$r." + call + "({module: " + js::string_literal(q.module) +
       ", pred: " + js::string_literal(q.pred) + ", names: [";
  for (std::size_t i = 0; i < q.names.size(); ++i)
    s += (i ? ", " : "") + js::string_literal(q.names[i]);
  s += "], reps: " + std::to_string(reps) + "});\n";
  return s;
}

CompiledProgram compile_with_query(const Common& c, std::vector<SourceFile> sources,
                                   const EntryQuery& q, Diagnostics& diags) {
  sources.push_back(q.source);
  return compile_program(sources, diags, compile_options(c));
}

int cmd_compile(const Common& c, const std::vector<std::string>& files, const std::string& out_dir,
                bool dump_ir) {
  Diagnostics diags;
  std::vector<SourceFile> sources;
  for (const auto& f : files) sources.push_back(read_source_file(f));
  CompiledProgram prog;
  try {
    prog = compile_program(sources, diags, compile_options(c));
  } catch (...) {
    print_warnings(diags);
    throw;
  }
  print_warnings(diags);
  if (dump_ir) {
    for (const auto& m : prog.modules)
      for (const auto& ir : m.irs) std::cout << dump(ir);
    if (out_dir.empty()) return 0;
  }
  fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  for (const auto& m : prog.modules) {
    std::ofstream(dir / module_file_name(m.name), std::ios::binary) << m.js.source;
  }
  std::ofstream(dir / "manifest.json", std::ios::binary) << loader_manifest(prog);
  return 0;
}

int cmd_run(const Common& c, const std::vector<std::string>& files, const std::string& entry) {
  const std::string engine = tools::find_program(c.engine);
  if (engine.empty()) {
    std::cerr << "pljsc: host engine '" << c.engine
              << "' not found; install Node.js or pass --engine PATH\n";
    return 2;
  }
  auto [module, goal] = split_entry(entry);
  EntryQuery q = make_entry_query(module, goal);
  Diagnostics diags;
  std::vector<SourceFile> sources;
  for (const auto& f : files) sources.push_back(read_source_file(f));
  CompiledProgram prog = compile_with_query(c, sources, q, diags);
  print_warnings(diags);
  fs::path bundle = fs::temp_directory_path() / ("pljs_run_" + std::to_string(getpid()) + ".js");
  std::ofstream(bundle, std::ios::binary) << make_bundle(c, prog, q, "main", 1);
  auto r = tools::run_process({engine, bundle.string()}, false);
  fs::remove(bundle);
  if (r.status < 0 || r.status > 2) return 2;
  return r.status;
}

struct BenchRow {
  std::string name;
  std::string file;
  std::string goal;
  int reps = 1;
  std::string expected;
};

std::vector<BenchRow> read_manifest(const std::string& path) {
  std::vector<BenchRow> rows;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest " + path);
  fs::path base = fs::path(path).parent_path();
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find_first_not_of(" \t");
    if (hash == std::string::npos || line[hash] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    BenchRow r;
    if (words.size() < 5) throw std::runtime_error("malformed manifest line: " + line);
    r.name = words[0];
    r.file = words[1];
    for (std::size_t i = 2; i + 2 < words.size(); ++i) r.goal += (i > 2 ? " " : "") + words[i];
    try {
      r.reps = std::stoi(words[words.size() - 2]);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed manifest line: " + line);
    }
    r.expected = words.back();
    r.file = (base / r.file).string();
    r.expected = (base / r.expected).string();
    rows.push_back(r);
  }
  return rows;
}

std::optional<double> parse_time(std::string& out) {
  auto pos = out.rfind("#time ");
  if (pos == std::string::npos) return std::nullopt;
  double ms = std::stod(out.substr(pos + 6));
  out.erase(pos);
  return ms;
}

int cmd_bench(const Common& c, const std::string& manifest, const std::string& baseline) {
  const std::string engine = tools::find_program(c.engine);
  if (engine.empty()) {
    std::cerr << "pljsc: host engine '" << c.engine
              << "' not found; install Node.js or pass --engine PATH\n";
    return 2;
  }
  std::vector<BenchRow> rows = read_manifest(manifest);
  std::cout << std::left << std::setw(22) << "Benchmark" << std::right << std::setw(12)
            << "time(ms)";
  if (!baseline.empty()) std::cout << std::setw(10) << "Ratio";
  std::cout << "\n";
  int failed = 0;
  for (const auto& row : rows) {
    std::string label = row.name;
    if (row.reps > 1) label += " (x" + std::to_string(row.reps) + ")";
    std::cout << std::left << std::setw(22) << label << std::right;
    std::string out;
    std::optional<double> ms;
    try {
      auto [module, goal] = split_entry(row.goal);
      EntryQuery q = make_entry_query(module, goal);
      Diagnostics diags;
      CompiledProgram prog = compile_with_query(c, {read_source_file(row.file)}, q, diags);
      fs::path bundle = fs::temp_directory_path() /
                        ("pljs_bench_" + std::to_string(getpid()) + "_" + row.name + ".js");
      std::ofstream(bundle, std::ios::binary) << make_bundle(c, prog, q, "bench", row.reps);
      auto r = tools::run_process({engine, bundle.string()}, true);
      fs::remove(bundle);
      out = r.out;
      ms = parse_time(out);
    } catch (const std::exception& e) {
      std::cerr << row.name << ": " << e.what() << "\n";
    }
    std::string expected;
    try {
      expected = slurp(row.expected);
    } catch (const std::exception&) {
    }
    if (!ms || out != expected) {
      std::cout << std::setw(12) << "FAILED" << "\n";
      ++failed;
      continue;
    }
    std::cout << std::setw(12) << std::fixed << std::setprecision(1) << *ms;
    if (!baseline.empty()) {
      auto r = tools::run_process({baseline, row.file, row.goal, std::to_string(row.reps)}, true);
      std::string bout = r.out;
      auto bms = parse_time(bout);
      if (bms && *bms > 0) {
        std::cout << std::setw(10) << std::setprecision(2) << *ms / *bms;
      } else {
        std::cout << std::setw(10) << "-";
      }
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prolog to JavaScript compiler"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--no-index", common.no_index, "Disable first-argument indexing");
    sub->add_option("-L,--lib", common.lib_dirs, "Library directory for imported modules");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", common.engine, "Host JavaScript engine executable");
    sub->add_option("--runtime", common.runtime, "Runtime script loaded before the modules");
  };

  std::vector<std::string> files;
  std::string out_dir;
  bool dump_ir = false;
  auto* compile = app.add_subcommand("compile", "Compile modules to JavaScript");
  add_common(compile);
  compile->add_option("files", files, "Source files")->required();
  compile->add_option("-o", out_dir, "Output directory");
  compile->add_flag("--dump-ir", dump_ir, "Print the chunk IR");

  std::string entry;
  auto* run = app.add_subcommand("run", "Compile and solve an entry goal");
  add_common(run);
  add_engine(run);
  run->add_option("files", files, "Source files")->required();
  run->add_option("--entry", entry, "Entry goal M:G")->required();

  std::string manifest, baseline;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  add_common(bench);
  add_engine(bench);
  bench->add_option("manifest", manifest, "Suite manifest")->required();
  bench->add_option("--baseline", baseline, "Baseline Prolog command for the Ratio column");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*compile) return cmd_compile(common, files, out_dir, dump_ir);
    if (*run) return cmd_run(common, files, entry);
    if (*bench) return cmd_bench(common, manifest, baseline);
  } catch (const CompileError& e) {
    std::cerr << e.what() << "\n";
    return *run ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "pljsc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
