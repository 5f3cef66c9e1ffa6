class C { static x = 1; }
