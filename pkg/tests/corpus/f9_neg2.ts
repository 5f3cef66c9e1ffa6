type T = `abc`;
