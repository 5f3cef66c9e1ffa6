let nn: [first: string, ...rest: [inner: number]];
