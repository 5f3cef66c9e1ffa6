type M4 = { +readonly [K in T]+?: 1 };
