type M = { [K in X as Y]: 1 };
