class C { accessor = 1; }
