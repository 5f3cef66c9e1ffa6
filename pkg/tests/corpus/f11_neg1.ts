let t4: [string, number];
