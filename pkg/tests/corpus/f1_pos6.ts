class C5 { accessor ["computed"] = 1; }
