class C { override = 3; }
