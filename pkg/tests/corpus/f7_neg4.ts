const o4 = { override: 3 };
