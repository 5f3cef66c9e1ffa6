class C { accessor #hidden = "a"; }
