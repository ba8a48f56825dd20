$r.def("even", function (m) {
  var FAIL, Frame, ikey, V, odd_1_4, z_0_2;
  function even_1_0(a0) { this.a0 = a0; }
  function z_0_1() {}
  function s_1_3(a0) { this.a0 = a0; }
  m.def("even/1", function (s) {
    s.ctor = even_1_0;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "even";
      c.arity = 1;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        if (!g.a0.unify(w, z_0_2)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        var t0;
        t0 = new V(w);
        if (!g.a0.unify(w, new s_1_3(t0))) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new odd_1_4(t0);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      var b0 = [k0_0];
      var b1 = [k1_0];
      var bd = [];
      c.prototype.execute = function (w) {
        var cs;
        switch (ikey(this.a0)) {
          case "z/0": cs = b0; break;
          case "s/1": cs = b1; break;
          case null: cs = all; break;
          default: cs = bd;
        }
        if (cs.length === 0) return FAIL;
        if (cs.length > 1) w.push_choice(cs, 1);
        return cs[0](w, this);
      };
    };
  });
  m.def("z/0", function (s) {
    s.ctor = z_0_1;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "z";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("s/1", function (s) {
    s.ctor = s_1_3;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "s";
      c.arity = 1;
      c.home = m;
    };
  });
  m.exports["even/1"] = even_1_0;
  m.link = function () {
    var p;
    p = $r.query("rt").prepare();
    FAIL = p.exports["FAIL"];
    Frame = p.exports["Frame"];
    ikey = p.exports["ikey"];
    V = $r.query("t_var").prepare().ctor;
    p = $r.query("odd").prepare();
    odd_1_4 = p.exports["odd/1"];
    z_0_2 = new (m.query("z/0").prepare().ctor)();
  };
});
