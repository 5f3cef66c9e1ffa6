type M3 = { [K in X]: 1 };
