const idx: { [k: string]: number } = {};
