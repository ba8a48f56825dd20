#include "pljs/reader.hpp"

#include <algorithm>
#include <filesystem>

#include "pljs/lexer.hpp"
#include "pljs/parser.hpp"

namespace pljs {

bool ModuleAst::is_exported(const PredInd& pred) const {
  if (export_all) return true;
  return std::find(exports.begin(), exports.end(), pred) != exports.end();
}

std::vector<PredInd> ModuleAst::defined() const {
  std::vector<PredInd> out;
  std::set<PredInd> seen;
  for (const auto& c : clauses) {
    PredInd p = indicator(*c.head);
    if (seen.insert(p).second) out.push_back(p);
  }
  for (const auto& d : foreign_decls) {
    if (seen.insert(d.pred).second) out.push_back(d.pred);
  }
  return out;
}

const ForeignDecl* ModuleAst::foreign(const PredInd& pred) const {
  for (const auto& d : foreign_decls) {
    if (d.pred == pred) return &d;
  }
  return nullptr;
}

const ForeignClassDecl* ModuleAst::foreign_class(std::string_view name) const {
  for (const auto& c : foreign_classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string module_name_of(const Term& spec) {
  const Term* t = &spec;
  if (t->is_compound("library", 1)) t = t->args[0].get();
  if (t->is_compound("/", 2)) t = t->args[1].get();
  if (!t->is_atom() && t->kind != TermKind::Str) {
    throw CompileError("type error", "module specifier expected, found " + to_string(spec),
                       spec.pos);
  }
  std::filesystem::path p(t->name);
  std::string stem = p.filename().string();
  if (stem.ends_with(".pl")) stem.resize(stem.size() - 3);
  return stem;
}

namespace {

const std::set<std::string, std::less<>> kControl = {",", ";", "->", "\\+", ":-", "|"};

class ModuleReader {
 public:
  ModuleReader(std::string_view source, Diagnostics& diags, std::string file,
               const ReadOptions& opts)
      : tokens_(tokenize(source, file)),
        ops_(OpTable::defaults()),
        parser_(tokens_, ops_, file),
        diags_(diags),
        opts_(opts) {
    mod_.file = std::move(file);
  }

  ModuleAst run() {
    bool first = true;
    while (!parser_.done()) {
      if (foreign_class_ahead()) {
        read_foreign_class();
        first = false;
        continue;
      }
      TermPtr t = parser_.next_clause();
      if (ended_) {
        throw CompileError("syntax error", "clause after end_of_file", t->pos, mod_.file);
      }
      if (t->is_atom("end_of_file")) {
        ended_ = true;
        continue;
      }
      if (t->is_compound(":-", 1)) {
        directive(*t->args[0], first);
      } else if (t->is_compound("?-", 1)) {
        warn("query directive ignored", t->pos);
      } else {
        clause(t);
      }
      first = false;
    }
    if (!has_module_) mod_.export_all = true;
    check_exports();
    return std::move(mod_);
  }

 private:
  void warn(const std::string& msg, SourcePos pos) { diags_.warn(msg, pos, mod_.file); }

  [[noreturn]] void error(const std::string& kind, const std::string& msg, SourcePos pos) {
    throw CompileError(kind, msg, pos, mod_.file);
  }

  bool foreign_class_ahead() const {
    const Token* a = parser_.peek(0);
    const Token* b = parser_.peek(1);
    const Token* c = parser_.peek(2);
    const Token* d = parser_.peek(3);
    return a && b && c && d && a->is_atom(":-") && b->is_atom("js") && c->is_atom(":") &&
           d->is_atom("foreign_class");
  }

  void read_foreign_class() {
    const Token& start = parser_.consume();
    if (ended_) error("syntax error", "clause after end_of_file", start.pos);
    parser_.consume();  // js
    parser_.consume();  // :
    parser_.consume();  // foreign_class
    const Token* name = parser_.peek();
    if (!name || name->kind != TokenKind::Atom) {
      parser_.fail("foreign class name expected", name);
    }
    std::string cls = parser_.consume().value;
    parser_.expect_punct("{");
    std::vector<TermPtr> decls;
    while (true) {
      const Token* t = parser_.peek();
      if (!t) parser_.fail("missing '}' closing foreign_class " + cls, nullptr);
      if (t->is_punct("}")) break;
      TermPtr d = parser_.next_clause();
      if (!d->is_compound(":-", 1) || !d->args[0]->is_compound("pred", 1)) {
        error("syntax error", "only pred assertions may appear in foreign_class " + cls, d->pos);
      }
      decls.push_back(d->args[0]->args[0]);
    }
    parser_.consume();
    parser_.expect_end();
    TermPtr spec = make_foreign_class_term(cls, std::move(decls), start.pos);
    auto parsed = parse_foreign_decl(*spec, diags_, mod_.file);
    auto& decl = std::get<ForeignClassDecl>(parsed);
    if (mod_.foreign_class(decl.name)) {
      error("permission error", "foreign class " + decl.name + " declared twice", start.pos);
    }
    mod_.foreign_classes.push_back(std::move(decl));
  }

  void clause(const TermPtr& t) {
    if (t->is_compound("-->", 2)) error("syntax error", "DCG rules are not supported", t->pos);
    TermPtr head = t;
    TermPtr body = make_atom("true", t->pos);
    if (t->is_compound(":-", 2)) {
      head = t->args[0];
      body = t->args[1];
    }
    if (head->is_var()) error("instantiation error", "clause head is a variable", t->pos);
    if (!head->is_callable()) {
      error("type error", "callable clause head expected, found " + to_string(*head), t->pos);
    }
    if (head->is_compound(":", 2)) {
      error("permission error", "cannot define predicates of another module: " +
                                    to_string(*head, {true, &ops_}), t->pos);
    }
    if (kControl.contains(head->name) && head->arity() <= 2 && head->arity() >= 1) {
      error("permission error", "cannot redefine control construct " + indicator(*head).key(),
            t->pos);
    }
    if (!body->is_var() && !body->is_callable()) {
      error("type error", "callable clause body expected, found " + to_string(*body), t->pos);
    }
    if (mod_.foreign(indicator(*head))) {
      error("permission error", indicator(*head).key() + " is declared foreign", t->pos);
    }
    mod_.clauses.push_back({head, body, t->pos});
  }

  static std::optional<PredInd> pred_indicator(const Term& t) {
    if (t.is_compound("/", 2) && t.args[0]->is_atom() && t.args[1]->kind == TermKind::Int &&
        t.args[1]->ival >= 0) {
      return PredInd{t.args[0]->name, static_cast<std::size_t>(t.args[1]->ival)};
    }
    return std::nullopt;
  }

  static std::vector<TermPtr> list_items(const Term& t, bool& proper) {
    std::vector<TermPtr> out;
    const Term* cur = &t;
    while (cur->is_compound(".", 2)) {
      out.push_back(cur->args[0]);
      cur = cur->args[1].get();
    }
    proper = cur->is_atom("[]");
    return out;
  }

  std::vector<PredInd> indicator_list(const Term& t) {
    bool proper = false;
    auto items = list_items(t, proper);
    if (!proper) error("type error", "list of predicate indicators expected", t.pos);
    std::vector<PredInd> out;
    for (const auto& it : items) {
      if (it->is_compound("op", 3)) {
        op(*it);
        continue;
      }
      auto p = pred_indicator(*it);
      if (!p) error("type error", "predicate indicator expected, found " + to_string(*it), it->pos);
      out.push_back(*p);
    }
    return out;
  }

  void op(const Term& d) {
    const Term& pri = *d.args[0];
    const Term& type = *d.args[1];
    if (pri.kind != TermKind::Int || pri.ival < 0 || pri.ival > 1200) {
      error("domain error", "operator priority must be 0..1200", d.pos);
    }
    auto ty = type.is_atom() ? parse_op_type(type.name) : std::nullopt;
    if (!ty) error("domain error", "operator specifier expected, found " + to_string(type), d.pos);
    std::vector<std::string> names;
    if (d.args[2]->is_atom() && !d.args[2]->is_atom("[]")) {
      names.push_back(d.args[2]->name);
    } else {
      bool proper = false;
      for (const auto& n : list_items(*d.args[2], proper)) {
        if (!n->is_atom()) error("type error", "operator name must be an atom", n->pos);
        names.push_back(n->name);
      }
      if (!proper) error("type error", "operator name list expected", d.pos);
    }
    for (const auto& n : names) {
      if (n == ",") error("permission error", "cannot modify operator ','", d.pos);
      ops_.add(static_cast<int>(pri.ival), *ty, n);
      mod_.ops.push_back({static_cast<int>(pri.ival), *ty, n});
    }
  }

  void directive(const Term& d, bool first) {
    if (d.is_compound("module", 2)) {
      if (!first || has_module_) error("permission error", "module/2 must be the first directive", d.pos);
      if (!d.args[0]->is_atom()) error("type error", "module name must be an atom", d.pos);
      has_module_ = true;
      mod_.name = d.args[0]->name;
      mod_.exports = indicator_list(*d.args[1]);
      return;
    }
    if (d.is_compound("use_module", 1) || d.is_compound("use_module", 2) ||
        d.is_compound("ensure_loaded", 1)) {
      Import imp;
      imp.module = module_name_of(*d.args[0]);
      imp.pos = d.pos;
      if (d.arity() == 2) {
        imp.all = false;
        imp.preds = indicator_list(*d.args[1]);
      }
      mod_.imports.push_back(std::move(imp));
      return;
    }
    if (d.is_compound("op", 3)) {
      op(d);
      return;
    }
    if (d.is_compound("pred", 1)) {
      auto parsed = parse_foreign_decl(*d.args[0], diags_, mod_.file);
      if (auto* fd = std::get_if<ForeignDecl>(&parsed)) {
        if (mod_.foreign(fd->pred)) {
          error("permission error", fd->pred.key() + " declared foreign twice", d.pos);
        }
        for (const auto& c : mod_.clauses) {
          if (indicator(*c.head) == fd->pred) {
            error("permission error", fd->pred.key() + " has clauses and a foreign body", d.pos);
          }
        }
        mod_.foreign_decls.push_back(std::move(*fd));
      } else if (auto* ta = std::get_if<TypeAssertion>(&parsed)) {
        mod_.type_assertions.push_back(std::move(*ta));
      }
      return;
    }
    warn("unknown directive ignored: " + to_string(d, {true, &ops_}), d.pos);
  }

  void check_exports() {
    if (!opts_.check_exports || mod_.export_all) return;
    auto defs = mod_.defined();
    for (const auto& e : mod_.exports) {
      if (std::find(defs.begin(), defs.end(), e) == defs.end()) {
        error("existence error", "exported predicate " + e.key() + " is not defined", {});
      }
    }
  }

  std::vector<Token> tokens_;
  OpTable ops_;
  Parser parser_;
  Diagnostics& diags_;
  const ReadOptions& opts_;
  ModuleAst mod_;
  bool has_module_ = false;
  bool ended_ = false;
};

}  // namespace

ModuleAst read_module(std::string_view source, Diagnostics& diags, const std::string& file,
                      const ReadOptions& opts) {
  ModuleReader r(source, diags, file, opts);
  return r.run();
}

}  // namespace pljs
