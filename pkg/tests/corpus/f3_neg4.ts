let o2 = { in: 1, out: 2 };
