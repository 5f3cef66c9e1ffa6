class C extends B { override x = 3; }
