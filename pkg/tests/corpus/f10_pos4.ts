type Deep = { a: { [K in X as Y]: 1 } };
