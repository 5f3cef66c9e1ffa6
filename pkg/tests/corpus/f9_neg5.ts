const r9 = `${a}${b}`;
