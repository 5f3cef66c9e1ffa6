let asv = { as: 1 };
