$r.def("seq", function (m) {
  var FAIL, Frame, ikey, V, N, S, number_1_14, ___2_19;
  var ___0_11, number_0_16, string_0_18, empty_0_21, other_0_23, none_0_25;
  function append_3_0(a0, a1, a2) { this.a0 = a0; this.a1 = a1; this.a2 = a2; }
  function member_2_1(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function select_3_2(a0, a1, a2) { this.a0 = a0; this.a1 = a1; this.a2 = a2; }
  function len_2_3(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function classify_2_4(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function classify_2_d0_2_5(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function classify_2_d1_2_6(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function classify_2_d2_2_7(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function first_2_8(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function first_2_d0_0_9() {}
  function ___0_10() {}
  function __2_12(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function __2_13(a0, a1) { this.a0 = a0; this.a1 = a1; }
  function number_0_15() {}
  function string_0_17() {}
  function empty_0_20() {}
  function other_0_22() {}
  function none_0_24() {}
  m.def("append/3", function (s) {
    s.ctor = append_3_0;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "append";
      c.arity = 3;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        var t0;
        if (!g.a0.unify(w, ___0_11)) return FAIL;
        t0 = g.a1;
        if (!g.a2.unify(w, t0)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        var t0, t1, t2;
        t0 = new V(w);
        t1 = new V(w);
        if (!g.a0.unify(w, new __2_12(t0, t1))) return FAIL;
        t2 = new V(w);
        if (!g.a2.unify(w, new __2_12(t0, t2))) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new append_3_0(t1, g.a1, t2);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      var b0 = [k0_0];
      var b1 = [k1_0];
      var bd = [];
      c.prototype.execute = function (w) {
        var cs;
        switch (ikey(this.a0)) {
          case "[]/0": cs = b0; break;
          case "./2": cs = b1; break;
          case null: cs = all; break;
          default: cs = bd;
        }
        if (cs.length === 0) return FAIL;
        if (cs.length > 1) w.push_choice(cs, 1);
        return cs[0](w, this);
      };
    };
  });
  m.def("member/2", function (s) {
    s.ctor = member_2_1;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "member";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        var t0, t1;
        t0 = g.a0;
        t1 = new V(w);
        if (!g.a1.unify(w, new __2_12(t0, t1))) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        var t0, t1;
        t0 = new V(w);
        t1 = new V(w);
        if (!g.a1.unify(w, new __2_12(t0, t1))) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new member_2_1(g.a0, t1);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("select/3", function (s) {
    s.ctor = select_3_2;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "select";
      c.arity = 3;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        var t0, t1;
        t0 = g.a0;
        t1 = new V(w);
        if (!g.a1.unify(w, new __2_12(t0, t1))) return FAIL;
        if (!g.a2.unify(w, t1)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        var t0, t1, t2;
        t0 = new V(w);
        t1 = new V(w);
        if (!g.a1.unify(w, new __2_12(t0, t1))) return FAIL;
        t2 = new V(w);
        if (!g.a2.unify(w, new __2_12(t0, t2))) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new select_3_2(g.a0, t1, t2);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("len/2", function (s) {
    s.ctor = len_2_3;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "len";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        if (!g.a0.unify(w, ___0_11)) return FAIL;
        if (!g.a1.unify(w, new N(0))) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        var t0, t1;
        t0 = new V(w);
        t1 = new V(w);
        if (!g.a0.unify(w, new __2_12(t0, t1))) return FAIL;
        f.y[0] = g.a1;
        f.y[1] = new V(w);
        w.frame = new Frame(f, function () { return k1_1(w, f); }, w.choice);
        w.goal = new len_2_3(t1, f.y[1]);
        return w.exec;
      }
      function k1_1(w, f) {
        if (!f.y[0].unify(w, new N(w.eval(new __2_13(f.y[1], new N(1)))))) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      var all = [k0_0, k1_0];
      var b0 = [k0_0];
      var b1 = [k1_0];
      var bd = [];
      c.prototype.execute = function (w) {
        var cs;
        switch (ikey(this.a0)) {
          case "[]/0": cs = b0; break;
          case "./2": cs = b1; break;
          case null: cs = all; break;
          default: cs = bd;
        }
        if (cs.length === 0) return FAIL;
        if (cs.length > 1) w.push_choice(cs, 1);
        return cs[0](w, this);
      };
    };
  });
  m.def("classify/2", function (s) {
    s.ctor = classify_2_4;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "classify";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new classify_2_d0_2_5(g.a0, g.a1);
        return w.exec;
      }
      c.prototype.execute = function (w) {
        return k0_0(w, this);
      };
    };
  });
  m.def("classify/2$d0/2", function (s) {
    s.ctor = classify_2_d0_2_5;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "classify/2$d0";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a1;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new number_1_14(g.a0);
        return w.exec;
      }
      function k0_1(w, f) {
        w.choice = f.choice;
        if (!w.unify(f.y[0], number_0_16)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new classify_2_d1_2_6(g.a0, g.a1);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("classify/2$d1/2", function (s) {
    s.ctor = classify_2_d1_2_6;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "classify/2$d1";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        if (!w.unify(g.a0, new S("str"))) return FAIL;
        w.choice = f.choice;
        if (!w.unify(g.a1, string_0_18)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new classify_2_d2_2_7(g.a0, g.a1);
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("classify/2$d2/2", function (s) {
    s.ctor = classify_2_d2_2_7;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "classify/2$d2";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        f.y[0] = g.a1;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new ___2_19(g.a0, ___0_11);
        return w.exec;
      }
      function k0_1(w, f) {
        w.choice = f.choice;
        if (!w.unify(f.y[0], empty_0_21)) return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        if (!w.unify(g.a1, other_0_23)) return FAIL;
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
  m.def("first/2", function (s) {
    s.ctor = first_2_8;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "first";
      c.arity = 2;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        w.frame = new Frame(f, function () { return k0_1(w, f); }, w.choice);
        w.goal = new member_2_1(g.a1, g.a0);
        return w.exec;
      }
      function k0_1(w, f) {
        w.choice = f.choice;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
        if (!g.a1.unify(w, none_0_25)) return FAIL;
        w.frame = new Frame(f.prev, f.cont, w.choice);
        w.goal = new first_2_d0_0_9();
        return w.exec;
      }
      var all = [k0_0, k1_0];
      c.prototype.execute = function (w) {
        w.push_choice(all, 1);
        return all[0](w, this);
      };
    };
  });
  m.def("first/2$d0/0", function (s) {
    s.ctor = first_2_d0_0_9;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "first/2$d0";
      c.arity = 0;
      c.home = m;
      function k0_0(w, g) {
        var f = w.frame;
        return FAIL;
        w.choice = f.choice;
        return FAIL;
        w.frame = f.prev;
        return f.cont;
      }
      function k1_0(w, g) {
        var f = w.frame;
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
  m.def("[]/0", function (s) {
    s.ctor = ___0_10;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "[]";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("./2", function (s) {
    s.ctor = __2_12;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = ".";
      c.arity = 2;
      c.home = m;
    };
  });
  m.def("+/2", function (s) {
    s.ctor = __2_13;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "+";
      c.arity = 2;
      c.home = m;
    };
  });
  m.def("number/0", function (s) {
    s.ctor = number_0_15;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "number";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("string/0", function (s) {
    s.ctor = string_0_17;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "string";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("empty/0", function (s) {
    s.ctor = empty_0_20;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "empty";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("other/0", function (s) {
    s.ctor = other_0_22;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "other";
      c.arity = 0;
      c.home = m;
    };
  });
  m.def("none/0", function (s) {
    s.ctor = none_0_24;
    s.base = $r.query("t_struct");
    s.mlink = function (c) {
      c.fname = "none";
      c.arity = 0;
      c.home = m;
    };
  });
  m.exports["append/3"] = append_3_0;
  m.exports["member/2"] = member_2_1;
  m.exports["select/3"] = select_3_2;
  m.exports["len/2"] = len_2_3;
  m.exports["classify/2"] = classify_2_4;
  m.exports["first/2"] = first_2_8;
  m.link = function () {
    var p;
    p = $r.query("rt").prepare();
    FAIL = p.exports["FAIL"];
    Frame = p.exports["Frame"];
    ikey = p.exports["ikey"];
    V = $r.query("t_var").prepare().ctor;
    N = $r.query("t_num").prepare().ctor;
    S = $r.query("t_string").prepare().ctor;
    p = $r.query("term_basic").prepare();
    number_1_14 = p.exports["number/1"];
    ___2_19 = p.exports["==/2"];
    ___0_11 = new (m.query("[]/0").prepare().ctor)();
    number_0_16 = new (m.query("number/0").prepare().ctor)();
    string_0_18 = new (m.query("string/0").prepare().ctor)();
    empty_0_21 = new (m.query("empty/0").prepare().ctor)();
    other_0_23 = new (m.query("other/0").prepare().ctor)();
    none_0_25 = new (m.query("none/0").prepare().ctor)();
  };
});
