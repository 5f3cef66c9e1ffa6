const obj = { satisfies: 1 };
