let t: [name: string];
