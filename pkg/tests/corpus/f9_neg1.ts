const s9 = `v${v}`;
