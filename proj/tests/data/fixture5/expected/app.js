$r.def("app", function (m) {
  var FAIL, Frame, V, N, S, document_1_6, body_2_7, set_innerHtml_2_8;
  var even_1_9, odd_1_12, append_3_24, len_2_25, member_2_26, ____2_27, even_0_11, odd_0_14;
  var c_0_17, ___0_19, a_0_21, b_0_23, Odd_atom_0_30;
  function main_0_0() {}
  function parity_2_1(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function parity_2_d0_2_2(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function parity_2_d1_2_3(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function demo_1_4(a0) { this.a0 = a0; }
  function demo_1_d0_3_5(a0, a1, a2) { this.a0 = a0; this.a1 = a1; this.a2 = a2; }
  function even_0_10() {}
  function odd_0_13() {}
  function __2_15(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function c_0_16() {}
  function ___0_18() {}
  function a_0_20() {}
  function b_0_22() {}
  function f_5_28(a0, a1, a2, a3, a4) { this.a0 = a0; this.a1 = a1; this.a2 = a2; this.a3 = a3; this.a4 = a4; }
  function Odd_atom_0_29() {}
  m.def("main/0", function (s) {
    s.ctor = main_0_0;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "main";
      c.arity = 0;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = new V(w);
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new document_1_6(f.y[0]);
        return w.exec;
      }
      function k0_1(w, f) {
        f.y[1] = new V(w);
        w.frame = new Frame(f, function () { return k0_2(w, f); }, w.choice);
        w.goal = new body_2_7(f.y[0], f.y[1]);
        return w.exec;
      }
      function k0_2(w, f) {
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new set_innerHtml_2_8(f.y[1], new S("Hello World"));
        return w.exec;
      }
      c.prototype.execute = function (w) {
        return k0_0(w, this);
      };
    };
  });
  m.def("parity/2", function (s) {
    s.ctor = parity_2_1;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "parity";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new parity_2_d0_2_2(g.a0, g.a1);
        return w.exec;
      }
      c.prototype.execute = function (w) {
        return k0_0(w, this);
      };
    };
  });
  m.def("parity/2$d0/2", function (s) {
    s.ctor = parity_2_d0_2_2;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "parity/2$d0";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a1;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new even_1_9(g.a0);
        return w.exec;
      }
      function k0_1(w, f) {
        w.choice = f.choice;
        if (!w.unify(f.y[0], even_0_11)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new parity_2_d1_2_3(g.a0, g.a1);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("parity/2$d1/2", function (s) {
    s.ctor = parity_2_d1_2_3;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "parity/2$d1";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a1;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new odd_1_12(g.a0);
        return w.exec;
      }
      function k0_1(w, f) {
        w.choice = f.choice;
        if (!w.unify(f.y[0], odd_0_14)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      c.prototype.execute = function (w) {
        return k0_0(w, this);
      };
    };
  });
  m.def("demo/1", function (s) {
    s.ctor = demo_1_4;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "demo";
      c.arity = 1;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a0;
        f.y[1] = new V(w);
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new append_3_24(f.y[1], new __2_15(c_0_17, ___0_19), new __2_15(a_0_21, new __2_15(b_0_23, new __2_15(c_0_17, ___0_19))));
        return w.exec;
      }
      function k0_1(w, f) {
        f.y[2] = new V(w);
        w.frame = new Frame(f, function () { return k0_2(w, f); }, w.choice);
        w.goal = new len_2_25(f.y[1], f.y[2]);
        return w.exec;
      }
      function k0_2(w, f) {
        if (!(w.eval(f.y[2]) >= w.eval(new N(2)))) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new demo_1_d0_3_5(f.y[0], f.y[1], f.y[2]);
        return w.exec;
      }
      c.prototype.execute = function (w) {
        return k0_0(w, this);
      };
    };
  });
  m.def("demo/1$d0/3", function (s) {
    s.ctor = demo_1_d0_3_5;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "demo/1$d0";
      c.arity = 3;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a0;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new member_2_26(f.y[0], g.a1);
        return w.exec;
      }
      function k0_1(w, f) {
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new ____2_27(f.y[0], a_0_21);
        return w.exec;
      }
      function k1_0(w, g) {
        var f = w.frame;
        if (!w.unify(g.a0, new f_5_28(g.a2, new N(3.5), Odd_atom_0_30, new S("text"), new N(-2)))) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("even/0", function (s) {
    s.ctor = even_0_10;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "even";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("odd/0", function (s) {
    s.ctor = odd_0_13;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "odd";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("./2", function (s) {
    s.ctor = __2_15;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = ".";
      c.arity = 2;
      c.home = m;
    };
  });
  m.def("c/0", function (s) {
    s.ctor = c_0_16;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "c";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("[]/0", function (s) {
    s.ctor = ___0_18;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "[]";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("a/0", function (s) {
    s.ctor = a_0_20;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "a";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("b/0", function (s) {
    s.ctor = b_0_22;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "b";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("f/5", function (s) {
    s.ctor = f_5_28;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "f";
      c.arity = 5;
      c.home = m;
    };
  });
  m.def("Odd atom/0", function (s) {
    s.ctor = Odd_atom_0_29;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "Odd atom";
      c.arity = 0;
      c.home = m;
    };
  });
  m.exports["main/0"] = main_0_0;
  m.exports["parity/2"] = parity_2_1;
  m.exports["demo/1"] = demo_1_4;
  m.link = function () {
    var p;
    p = $r.query("rt").prepare();
    FAIL = p.exports["FAIL"];
    Frame = p.exports["Frame"];
    V = $r.query("t_var").prepare().ctor;
    N = $r.query("t_num").prepare().ctor;
    S = $r.query("t_string").prepare().ctor;
    p = $r.query("dom").prepare();
    document_1_6 = p.exports["document/1"];
    p = $r.query("dom").query("element").prepare();
    body_2_7 = p.exports["body/2"];
    set_innerHtml_2_8 = p.exports["set_innerHtml/2"];
    p = $r.query("even").prepare();
    even_1_9 = p.exports["even/1"];
    p = $r.query("odd").prepare();
    odd_1_12 = p.exports["odd/1"];
    p = $r.query("seq").prepare();
    append_3_24 = p.exports["append/3"];
    len_2_25 = p.exports["len/2"];
    member_2_26 = p.exports["member/2"];
    p = $r.query("term_basic").prepare();
    ____2_27 = p.exports["\\==/2"];
    even_0_11 = new (m.query("even/0").prepare().ctor)();
    odd_0_14 = new (m.query("odd/0").prepare().ctor)();
    c_0_17 = new (m.query("c/0").prepare().ctor)();
    ___0_19 = new (m.query("[]/0").prepare().ctor)();
    a_0_21 = new (m.query("a/0").prepare().ctor)();
    b_0_23 = new (m.query("b/0").prepare().ctor)();
    Odd_atom_0_30 = new (m.query("Odd atom/0").prepare().ctor)();
  };
});
