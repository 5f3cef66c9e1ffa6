const s = `class C { accessor x = 1; }`;
