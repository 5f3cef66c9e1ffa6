let fn: abstract new (...args: any[]) => T;
