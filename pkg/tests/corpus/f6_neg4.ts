const o3 = { static: 1 };
