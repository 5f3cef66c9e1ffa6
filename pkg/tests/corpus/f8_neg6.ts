let y8: new (...args: any[]) => object;
