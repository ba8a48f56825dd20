#!/usr/bin/env node
// Runs a benchmark goal under tau-prolog: node tau_baseline.js FILE GOAL REPS
// Prints the answers as `X = term, ...` lines, then `#time <ms>`.
// Needs tau-prolog on NODE_PATH.
var pl = require("tau-prolog");
require("tau-prolog/modules/promises.js")(pl);
var fs = require("fs");

var file = process.argv[2], goal = process.argv[3], reps = Number(process.argv[4] || 1);
var text = fs.readFileSync(file, "utf8").replace(/^:- module\([^]*?\)\.\s*$/m, "");
goal = goal.replace(/^[a-z]\w*:/, "");

async function solveAll(session, show) {
  var lines = [];
  await session.promiseQuery(goal + ".");
  for await (var ans of session.promiseAnswers()) {
    if (!show) continue;
    var names = Object.keys(ans.links).filter(function (n) { return n[0] !== "_"; });
    lines.push(names.map(function (n) {
      return n + " = " + ans.links[n].toString({ quoted: true, session: session });
    }).join(", "));
  }
  return lines;
}

(async function () {
  var session = pl.create(100000000);
  await session.promiseConsult(text, { text: true });
  var t0 = process.hrtime.bigint();
  var lines = await solveAll(session, true);
  for (var i = 1; i < reps; i++) await solveAll(session, false);
  var ms = Number(process.hrtime.bigint() - t0) / 1e6;
  process.stdout.write(lines.map(function (l) { return l + "\n"; }).join("") + "#time " + ms.toFixed(3) + "\n");
})().catch(function (e) {
  console.error(e && e.toString ? pl.format_answer ? pl.format_answer(e) : String(e) : String(e));
  process.exit(2);
});
