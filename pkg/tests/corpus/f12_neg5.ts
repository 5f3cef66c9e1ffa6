let s12 = "a ||= b"; let z2 = 1;
