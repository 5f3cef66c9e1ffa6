let t3: [...rest: string[]];
