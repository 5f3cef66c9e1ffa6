type M2 = { -readonly [K in T as U]-?: 1 };
