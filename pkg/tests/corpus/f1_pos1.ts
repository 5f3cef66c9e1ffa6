class C { accessor x = 1; }
