#include "pljs/ir_dump.hpp"

namespace pljs {

namespace {

std::string arg_name(int i) { return "a" + std::to_string(i); }

std::string list(const std::vector<int>& xs) {
  if (xs.empty()) return " -";
  std::string s;
  for (int x : xs) s += " " + std::to_string(x);
  return s;
}

}  // namespace

std::string to_string(const Step& step) {
  switch (step.kind) {
    case StepKind::GetArg:
      return "GetArg " + arg_name(step.arg) + " -> " + to_string(step.slot);
    case StepKind::NewVar:
      return "NewVar " + to_string(step.slot);
    case StepKind::Unify: {
      const char* name = step.expr.kind == Expr::Kind::Var      ? "UnifyVar"
                         : step.expr.kind == Expr::Kind::Struct ? "UnifyStruct"
                                                                : "UnifyConst";
      return std::string(name) + " " + arg_name(step.arg) + " " + to_string(step.expr);
    }
    case StepKind::PutArg:
      return "PutArg " + arg_name(step.arg) + " <- " + to_string(step.expr);
    case StepKind::Builtin: {
      std::string s = "Builtin " + quote_atom(inline_name(step.op));
      if (!step.args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < step.args.size(); ++i) {
          if (i) s += ", ";
          s += to_string(step.args[i]);
        }
        s += ")";
      }
      return s;
    }
    case StepKind::Cut:
      return "Cut";
    case StepKind::GetCut:
      return "GetCut " + to_string(step.slot);
    case StepKind::CutTo:
      return "CutTo " + to_string(step.expr);
  }
  return "?";
}

std::string dump(const ChunkIR& ir) {
  std::string out = "pred " + ir.module + ":";
  if (!ir.cls.empty()) out += ir.cls + ":";
  out += quote_atom(ir.pred.name) + "/" + std::to_string(ir.pred.arity);
  out += " clauses=" + std::to_string(ir.clauses.size());
  out += ir.selection.indexed ? " select=switch\n" : " select=linear\n";
  if (ir.selection.indexed) {
    for (const auto& [key, cs] : ir.selection.buckets) out += "  case " + key + " ->" + list(cs) + "\n";
    out += "  default ->" + list(ir.selection.default_bucket) + "\n";
    out += "  var ->" + list(ir.selection.var_bucket) + "\n";
  }
  for (std::size_t c = 0; c < ir.clauses.size(); ++c) {
    const ClauseCode& code = ir.clauses[c];
    out += "  clause " + std::to_string(c) + " nframe=" + std::to_string(code.nframe) +
           " ntemp=" + std::to_string(code.ntemp) + (code.needs_frame ? " frame" : "") +
           (code.saves_cut ? " cut" : "") + "\n";
    for (std::size_t k = 0; k < code.chunks.size(); ++k) {
      const Chunk& ch = code.chunks[k];
      out += "    chunk " + std::to_string(k) + "\n";
      for (const auto& s : ch.steps) out += "      " + to_string(s) + "\n";
      if (ch.call) {
        out += "      Call " + ch.call->target.display() + (ch.call->is_last ? " last" : "") + "\n";
      } else {
        out += "      Proceed\n";
      }
    }
  }
  return out;
}

}  // namespace pljs
