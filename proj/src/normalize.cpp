#include "pljs/normalize.hpp"

#include <algorithm>
#include <set>

#include "pljs/ops.hpp"

namespace pljs {

std::string aux_name(const PredInd& pred, int k) {
  return pred.key() + "$d" + std::to_string(k);
}

namespace {

bool is_control(const Term& g) {
  return g.is_compound(";", 2) || g.is_compound("->", 2) || g.is_compound("\\+", 1);
}

// A cut that cuts the enclosing clause when reached.
bool transparent_cut(const Term& g) {
  if (g.is_atom("!")) return true;
  if (g.is_compound(",", 2) || g.is_compound(";", 2)) {
    return transparent_cut(*g.args[0]) || transparent_cut(*g.args[1]);
  }
  if (g.is_compound("->", 2)) return transparent_cut(*g.args[1]);
  return false;
}

TermPtr replace_cuts(const TermPtr& g, const TermPtr& barrier) {
  if (g->is_atom("!")) return make_compound(std::string(kCutTo), {barrier}, g->pos);
  if (g->is_compound(",", 2) || g->is_compound(";", 2)) {
    return make_compound(g->name, {replace_cuts(g->args[0], barrier), replace_cuts(g->args[1], barrier)},
                         g->pos);
  }
  if (g->is_compound("->", 2)) {
    return make_compound("->", {g->args[0], replace_cuts(g->args[1], barrier)}, g->pos);
  }
  return g;
}

void flatten(const TermPtr& g, std::vector<TermPtr>& out) {
  if (g->is_compound(",", 2)) {
    flatten(g->args[0], out);
    flatten(g->args[1], out);
  } else if (g->is_atom("true")) {
    return;
  } else if (g->is_var()) {
    out.push_back(make_compound("call", {g}, g->pos));
  } else {
    out.push_back(g);
  }
}

// Alternatives of a disjunction chain; an if-then-else stays whole.
void alternatives(const TermPtr& g, std::vector<TermPtr>& out) {
  if (g->is_compound(";", 2) && !g->args[0]->is_compound("->", 2)) {
    out.push_back(g->args[0]);
    alternatives(g->args[1], out);
  } else {
    out.push_back(g);
  }
}

class ClauseNormalizer {
 public:
  ClauseNormalizer(PredInd origin, int& counter, int& barriers)
      : origin_(std::move(origin)), counter_(counter), barriers_(barriers) {}

  void run(const TermPtr& head, const TermPtr& body, bool aux, std::vector<PlainClause>& out) {
    std::vector<TermPtr> goals;
    flatten(body, goals);

    bool needs_barrier = false;
    for (const auto& g : goals) needs_barrier = needs_barrier || (is_control(*g) && transparent_cut(*g));
    if (needs_barrier) {
      TermPtr b = make_var("$B" + std::to_string(barriers_++), head->pos);
      for (auto& g : goals) {
        if (is_control(*g)) g = replace_cuts(g, b);
      }
      goals.insert(goals.begin(), make_compound(std::string(kGetCut), {b}, head->pos));
    }

    PlainClause pc{head, {}, aux, head->pos};
    std::size_t slot = out.size();
    out.push_back(pc);
    std::vector<TermPtr> body_out;
    for (std::size_t i = 0; i < goals.size(); ++i) {
      if (!is_control(*goals[i])) {
        body_out.push_back(goals[i]);
        continue;
      }
      std::vector<std::string> outside;
      collect_variables(*head, outside);
      for (std::size_t j = 0; j < goals.size(); ++j) {
        if (j != i) collect_variables(*goals[j], outside);
      }
      body_out.push_back(extract(goals[i], outside, out));
    }
    out[slot].body = std::move(body_out);
  }

 private:
  TermPtr aux_head(const TermPtr& construct, const std::vector<std::string>& outside,
                   std::string& name) {
    name = aux_name(origin_, counter_++);
    std::vector<std::string> shared;
    std::string barrier;
    for (const auto& v : variables_of(*construct)) {
      if (std::find(outside.begin(), outside.end(), v) == outside.end()) continue;
      if (v.starts_with("$B")) {
        barrier = v;
      } else {
        shared.push_back(v);
      }
    }
    if (!barrier.empty()) shared.push_back(barrier);
    std::vector<TermPtr> args;
    for (const auto& v : shared) args.push_back(make_var(v, construct->pos));
    return make_compound(name, std::move(args), construct->pos);
  }

  // Wraps a goal that must keep its cuts local into a one-clause auxiliary.
  TermPtr opaque(const TermPtr& g, const std::vector<std::string>& outside,
                 std::vector<PlainClause>& out) {
    if (!transparent_cut(*g)) return g;
    std::string name;
    TermPtr head = aux_head(g, outside, name);
    run(head, g, true, out);
    return head;
  }

  TermPtr extract(const TermPtr& g, const std::vector<std::string>& outside,
                  std::vector<PlainClause>& out) {
    std::string name;
    TermPtr head = aux_head(g, outside, name);

    // Variables visible to the auxiliary's clauses from outside a subgoal.
    std::vector<std::string> context = variables_of(*head);

    auto cut = make_atom("!", g->pos);
    auto conj = [](const std::vector<TermPtr>& parts) {
      TermPtr t = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) t = make_compound(",", {parts[i], t});
      return t;
    };
    auto if_then = [&](const TermPtr& ite) {
      std::vector<std::string> ctx = context;
      collect_variables(*ite->args[1], ctx);
      TermPtr cond = opaque(ite->args[0], ctx, out);
      run(head, conj({cond, cut, ite->args[1]}), true, out);
    };

    if (g->is_compound("\\+", 1)) {
      TermPtr inner = opaque(g->args[0], context, out);
      run(head, conj({inner, cut, make_atom("fail", g->pos)}), true, out);
      run(head, make_atom("true", g->pos), true, out);
    } else if (g->is_compound("->", 2)) {
      if_then(g);
    } else if (g->args[0]->is_compound("->", 2)) {
      if_then(g->args[0]);
      run(head, g->args[1], true, out);
    } else {
      std::vector<TermPtr> alts;
      alternatives(g, alts);
      for (const auto& a : alts) run(head, a, true, out);
    }
    return head;
  }

  PredInd origin_;
  int& counter_;
  int& barriers_;
};

}  // namespace

std::vector<PlainClause> Normalizer::clause(const TermPtr& head, const TermPtr& body) {
  PredInd origin = indicator(*head);
  std::vector<PlainClause> out;
  ClauseNormalizer n(origin, counters_[origin], barriers_);
  n.run(head, body, false, out);
  return out;
}

std::vector<PlainClause> Normalizer::module(const ModuleAst& mod) {
  std::vector<PlainClause> out;
  for (const auto& c : mod.clauses) {
    auto part = clause(c.head, c.body);
    for (auto& p : part) {
      if (!p.aux) p.pos = c.pos;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<PlainClause> normalize_clause(const TermPtr& head, const TermPtr& body) {
  Normalizer n;
  return n.clause(head, body);
}

std::string to_string(const PlainClause& c) {
  static const OpTable ops = OpTable::defaults();
  WriteOptions o;
  o.ops = &ops;
  std::string s = to_string(*c.head, o);
  if (c.body.empty()) return s + ".";
  s += " :- ";
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) s += ", ";
    s += to_string(*c.body[i], {true, &ops, true});
  }
  return s + ".";
}

}  // namespace pljs
