class C extends B { override get g() { return 1; } }
