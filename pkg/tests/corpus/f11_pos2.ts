let t2: [name?: string];
