const s10 = "{ [K in X as Y]: 1 }";
