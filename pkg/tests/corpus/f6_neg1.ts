class C { static = 1; }
