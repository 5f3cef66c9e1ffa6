const s6 = "static { }";
