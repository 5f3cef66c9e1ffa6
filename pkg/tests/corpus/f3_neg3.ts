type M = { [K in X]: 1 };
